"""Independent brute-force oracle for the bigraded cohomology H^{p,q}_v(g; C).

Shares no code with the C++ library: sl2 and sl3 come from matrix units,
cochains are dicts of sorted index tuples and ranks come from sympy over QQ.
The subalgebra v must be spanned by a subset of the basis, so N^{p,q} is
spanned by the monomials with at least p indices outside v.

    python3 ce_oracle.py OUTDIR     # writes the golden JSON files
"""

import itertools
import json
import sys
from fractions import Fraction
from pathlib import Path

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def matrix_unit(i, j, n):
    m = [[0] * n for _ in range(n)]
    m[i][j] = 1
    return m


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_mul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def sl_n(n):
    """sl_n on h_1..h_{n-1}, then E_ij (i<j), then E_ji (i<j)."""
    names, mats = [], []
    for i in range(n - 1):
        names.append(f"h{i + 1}")
        mats.append(mat_sub(matrix_unit(i, i, n), matrix_unit(i + 1, i + 1, n)))
    upper = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for i, j in upper:
        names.append(f"E{i + 1}{j + 1}")
        mats.append(matrix_unit(i, j, n))
    for i, j in upper:
        names.append(f"E{j + 1}{i + 1}")
        mats.append(matrix_unit(j, i, n))

    def coords(m):
        out = [Fraction(0)] * len(mats)
        # diagonal diag(a_1..a_n) = sum_k x_k h_k with x_k = a_1 + ... + a_k
        acc = Fraction(0)
        for k in range(n - 1):
            acc += m[k][k]
            out[k] = acc
        for idx, (i, j) in enumerate(upper):
            out[n - 1 + idx] = Fraction(m[i][j])
            out[n - 1 + len(upper) + idx] = Fraction(m[j][i])
        return out

    dim = len(mats)
    table = {}
    for a in range(dim):
        for b in range(dim):
            c = mat_sub(mat_mul(mats[a], mats[b]), mat_mul(mats[b], mats[a]))
            table[a, b] = {l: x for l, x in enumerate(coords(c)) if x != 0}
    return names, table


def differential(table, dim, n):
    """Matrix of d: C^n -> C^{n+1} (trivial coefficients) as a list of rows."""
    src = list(itertools.combinations(range(dim), n))
    dst = list(itertools.combinations(range(dim), n + 1))
    col = {s: k for k, s in enumerate(src)}
    rows = []
    for t in dst:
        row = [Fraction(0)] * len(src)
        for s_pos, t_pos in itertools.combinations(range(n + 1), 2):
            sign = -1 if (s_pos + t_pos) % 2 else 1
            rest = tuple(x for k, x in enumerate(t) if k not in (s_pos, t_pos))
            for l, c in table[t[s_pos], t[t_pos]].items():
                if l in rest:
                    continue
                # u(X_l, rest) = (-1)^{#rest below l} u(sorted)
                below = sum(1 for x in rest if x < l)
                key = tuple(sorted(rest + (l,)))
                row[col[key]] += sign * (-1) ** below * c
        rows.append(row)
    return rows, src, dst


def rank(rows, ncols):
    if not rows or ncols == 0:
        return 0
    return DomainMatrix([[QQ(x.numerator, x.denominator) for x in r] for r in rows], (len(rows), ncols), QQ).rank()


def betti(table, dim):
    ranks = [rank(differential(table, dim, n)[0], len(list(itertools.combinations(range(dim), n))))
             for n in range(dim + 1)]
    sizes = [len(list(itertools.combinations(range(dim), n))) for n in range(dim + 1)]
    return [sizes[n] - ranks[n] - (ranks[n - 1] if n else 0) for n in range(dim + 1)]


def bigraded(table, dim, v):
    """dims {(p,q): dim H^{p,q}_v} for p = 0..codim, q = 0..dim v."""
    outside = lambda s: sum(1 for x in s if x not in v)

    def n_space(basis, p):
        return [k for k, s in enumerate(basis) if outside(s) >= p]

    out = {}
    codim = dim - len(v)
    for p in range(codim + 1):
        for q in range(len(v) + 1):
            n = p + q
            d_n, src, dst = differential(table, dim, n)
            npq = n_space(src, p)
            target = set(n_space(dst, p + 1))
            # Z = {u in N^{p,q} : du in N^{p+1,q}}: kill the coordinates outside the target
            block = [[d_n[r][c] for c in npq] for r in range(len(dst)) if r not in target]
            z = len(npq) - rank(block, len(npq))
            # B = N^{p+1,q-1} + d N^{p,q-1}
            if n == 0:
                b = 0
            else:
                d_prev, src_prev, _ = differential(table, dim, n - 1)
                lower = n_space(src, p + 1)
                gens = [[Fraction(1) if k == j else Fraction(0) for k in range(len(src))] for j in lower]
                for c in n_space(src_prev, p):
                    gens.append([d_prev[r][c] for r in range(len(src))])
                b = rank(gens, len(src))
            out[f"({p},{q})"] = z - b
    return out


def cases():
    sl2_names, sl2 = sl_n(2)
    sl3_names, sl3 = sl_n(3)
    # Borel = diagonal + upper; parabolic{1} adds E21
    return {
        "A1_borel": (sl2, 3, {0, 1}),
        "A2_borel": (sl3, 8, {0, 1, 2, 3, 4}),
        "A2_parabolic1": (sl3, 8, {0, 1, 2, 3, 4, 5}),
    }, {"A1": (sl2, 3), "A2": (sl3, 8)}


def main(outdir):
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    bigr, algebras = cases()
    for name, (table, dim, v) in bigr.items():
        doc = {"kind": "oracle_bigraded", "case": name, "dims": bigraded(table, dim, v)}
        (outdir / f"bigraded_{name}.json").write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    for name, (table, dim) in algebras.items():
        doc = {"kind": "oracle_betti", "case": name, "betti": betti(table, dim)}
        (outdir / f"betti_{name}.json").write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "golden")
