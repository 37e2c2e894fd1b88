"""The committed goldens are exactly what the oracle produces."""

import importlib.util
from pathlib import Path

HERE = Path(__file__).resolve().parent
GOLDEN = HERE.parent / "golden"


def load_oracle():
    spec = importlib.util.spec_from_file_location("ce_oracle", HERE / "ce_oracle.py")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def test_goldens_regenerate(tmp_path):
    load_oracle().main(tmp_path)
    for path in sorted(GOLDEN.glob("*.json")):
        assert (tmp_path / path.name).read_text() == path.read_text(), path.name


def test_oracle_sanity():
    oracle = load_oracle()
    _, sl2 = oracle.sl_n(2)
    assert oracle.betti(sl2, 3) == [1, 0, 0, 1]
    abelian = {(a, b): {} for a in range(4) for b in range(4)}
    assert oracle.betti(abelian, 4) == [1, 4, 6, 4, 1]
