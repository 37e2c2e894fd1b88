#include "liecoh/proptest.hpp"

#include <functional>

#include "liecoh/error.hpp"
#include "liecoh/format.hpp"

namespace liecoh {

int Rng::uniform(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

Scalar Rng::scalar(bool allow_imaginary) {
  Rational re(uniform(-3, 3), uniform(0, 3) == 0 ? 2 : 1);
  Rational im = allow_imaginary && uniform(0, 3) == 0 ? Rational(uniform(-2, 2)) : Rational(0);
  return Scalar(re, im);
}

Scalar Rng::nonzero_scalar(bool allow_imaginary) {
  while (true) {
    Scalar s = scalar(allow_imaginary);
    if (!s.is_zero()) return s;
  }
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, bool allow_imaginary) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng.uniform(0, 2) > 0) m(r, c) = rng.scalar(allow_imaginary);
  return m;
}

Matrix random_invertible(Rng& rng, std::size_t n) {
  Matrix p = Matrix::identity(n);
  if (n == 0) return p;
  for (std::size_t i = 0; i < n; ++i) p(i, i) = rng.coin() ? Scalar(1) : Scalar(-1);
  for (int step = 0; step < 2 * static_cast<int>(n); ++step) {
    std::size_t a = rng.index(n), b = rng.index(n);
    if (a == b) continue;
    Scalar f = rng.nonzero_scalar();
    // row a += f * row b
    for (std::size_t c = 0; c < n; ++c) p(a, c).add_mul(f, p(b, c));
  }
  return p;
}

namespace {

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

// A concrete family member before any basis change.
struct Model {
  std::string family;
  std::size_t dim;
  std::vector<Vector> table;
  std::vector<std::pair<std::size_t, std::vector<Matrix>>> modules;  // (dim M, actions)

  void set(std::size_t x, std::size_t y, std::size_t l, Scalar c) {
    table[x * dim + y][l] = c;
    table[y * dim + x][l] = -c;
  }
};

Model blank(std::string family, std::size_t dim) {
  return Model{std::move(family), dim, std::vector<Vector>(dim * dim, Vector(dim)), {}};
}

std::vector<Matrix> adjoint_of(const Model& m) {
  LieAlgebra g(names(m.dim), m.table);
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < m.dim; ++i) out.push_back(g.ad_basis(i));
  return out;
}

Model pad(Model m, std::size_t extra) {
  // direct sum with an abelian algebra; modules extend by zero
  Model out = blank(m.family + "+ab" + std::to_string(extra), m.dim + extra);
  for (std::size_t x = 0; x < m.dim; ++x)
    for (std::size_t y = 0; y < m.dim; ++y)
      for (std::size_t l = 0; l < m.dim; ++l) out.table[x * out.dim + y][l] = m.table[x * m.dim + y][l];
  for (auto& [dm, acts] : m.modules) {
    for (std::size_t e = 0; e < extra; ++e) acts.emplace_back(dm, dm);
    out.modules.emplace_back(dm, acts);
  }
  return out;
}

Model semidirect(Rng& rng, std::size_t k) {
  Model m = blank("semidirect" + std::to_string(k), k + 1);
  Matrix d = random_matrix(rng, k, k, false);
  if (d.is_zero()) d(0, 0) = Scalar(1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!d(j, i).is_zero()) m.set(0, 1 + i, 1 + j, d(j, i));
  // affine representation x -> [[D,0],[0,0]], y_i -> [[0,e_i],[0,0]]
  std::vector<Matrix> acts(k + 1, Matrix(k + 1, k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) acts[0](i, j) = d(i, j);
    acts[1 + i](i, k) = Scalar(1);
  }
  m.modules.emplace_back(k + 1, acts);
  return m;
}

Model pick_model(Rng& rng, std::size_t max_dim, bool nonabelian) {
  const int family = rng.uniform(nonabelian ? 1 : 0, 4);
  Model m = blank("", 0);
  switch (family) {
    case 0: {
      std::size_t n = 1 + rng.index(max_dim);
      m = blank("abelian", n);
      // commuting module: polynomials in one matrix
      std::size_t dm = 1 + rng.index(3);
      Matrix a = random_matrix(rng, dm, dm);
      std::vector<Matrix> acts;
      for (std::size_t i = 0; i < n; ++i) acts.push_back(a * rng.scalar() + a * a * rng.scalar());
      m.modules.emplace_back(dm, acts);
      break;
    }
    case 1: {
      m = blank("heisenberg", 3);
      m.set(0, 1, 2, Scalar(1));
      // 3-dim rep by strictly upper triangular matrices
      std::vector<Matrix> acts(3, Matrix(3, 3));
      acts[0](0, 1) = Scalar(1);
      acts[1](1, 2) = Scalar(1);
      acts[2](0, 2) = Scalar(1);
      m.modules.emplace_back(3, acts);
      break;
    }
    case 2: {
      m = blank("sl2", 3);  // h, e, f
      m.set(0, 1, 1, Scalar(2));
      m.set(0, 2, 2, Scalar(-2));
      m.set(1, 2, 0, Scalar(1));
      std::vector<Matrix> acts(3, Matrix(2, 2));
      acts[0](0, 0) = Scalar(1);
      acts[0](1, 1) = Scalar(-1);
      acts[1](0, 1) = Scalar(1);
      acts[2](1, 0) = Scalar(1);
      m.modules.emplace_back(2, acts);
      break;
    }
    case 3: {
      m = blank("aff1", 2);
      m.set(0, 1, 1, Scalar(1));
      std::vector<Matrix> acts(2, Matrix(2, 2));
      acts[0](0, 0) = Scalar(1);
      acts[1](0, 1) = Scalar(1);
      m.modules.emplace_back(2, acts);
      break;
    }
    default:
      m = semidirect(rng, 1 + rng.index(std::min<std::size_t>(4, max_dim - 1)));
      break;
  }
  if (m.dim < max_dim && rng.coin()) m = pad(std::move(m), 1 + rng.index(max_dim - m.dim));
  m.modules.emplace_back(m.dim, adjoint_of(m));
  return m;
}

}  // namespace

RandomCase random_case(Rng& rng, std::size_t max_dim, bool nonabelian) {
  Model m = pick_model(rng, std::max<std::size_t>(max_dim, 3), nonabelian);
  const std::size_t n = m.dim;
  // new basis X'_i = sum_k P(k, i) X_k
  Matrix p = random_invertible(rng, n);
  Matrix pinv = inverse(p);
  LieAlgebra base(names(n), m.table);
  std::vector<Vector> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = pinv.apply(base.bracket(p.column(i), p.column(j)));
  auto g = std::make_shared<LieAlgebra>(names(n), std::move(table));
  g->set_label(m.family);
  RandomCase out{m.family, g, {}};
  out.modules.push_back(trivial_module(g, 1 + rng.index(2)));
  for (const auto& [dm, acts] : m.modules) {
    Matrix q = random_invertible(rng, dm);
    Matrix qinv = inverse(q);
    std::vector<Matrix> moved;
    for (std::size_t i = 0; i < n; ++i) {
      Matrix a(dm, dm);
      for (std::size_t k = 0; k < n; ++k)
        if (!p(k, i).is_zero()) a += acts[k] * p(k, i);
      moved.push_back(q * a * qinv);
    }
    out.modules.emplace_back(g, dm, std::move(moved), "random");
  }
  out.modules.push_back(dual_module(out.modules.back()));
  return out;
}

bool jacobi_oracle(const LieAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      if (g.ad(g.structure(i, j)) != commutator(g.ad_basis(i), g.ad_basis(j))) return false;
  return true;
}

namespace {

using Check = std::function<std::string(Rng&)>;  // empty string = pass

PropertyResult run(const std::string& name, std::uint64_t seed, std::size_t cases, const Check& check) {
  PropertyResult res;
  res.name = name;
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    std::string failure;
    try {
      failure = check(rng);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    ++res.cases;
    if (!failure.empty()) {
      if (res.failures == 0) res.first_failure = "case " + std::to_string(c) + ": " + failure;
      ++res.failures;
    }
  }
  return res;
}

Subspace random_subspace(Rng& rng, std::size_t ambient) {
  std::size_t k = rng.index(ambient + 1);
  std::vector<Vector> vecs;
  for (std::size_t i = 0; i < k; ++i) vecs.push_back(random_matrix(rng, 1, ambient).row_vector(0));
  return Subspace::span(ambient, vecs);
}

std::string euler_check(const CochainComplex& c) {
  auto h = cohomology_dims(c);
  long lhs = 0, rhs = 0;
  for (std::size_t q = 0; q < h.size(); ++q) {
    long sign = q % 2 ? -1 : 1;
    lhs += sign * static_cast<long>(h[q]);
    rhs += sign * static_cast<long>(c.dims[q]);
  }
  return lhs == rhs ? "" : "Euler characteristic mismatch";
}

std::string complex_check(const Representation& m) {
  if (!check_homomorphism(m).pass) return "generated module is not a homomorphism";
  CochainComplex c = ce_complex(m);
  if (find_nonzero_square(c)) return "d o d != 0";
  return euler_check(c);
}

}  // namespace

std::vector<PropertyResult> run_property_suite(std::uint64_t seed, std::size_t cases) {
  std::vector<PropertyResult> out;
  out.push_back(run("dd_zero_trivial", seed + 1, cases, [](Rng& rng) {
    RandomCase rc = random_case(rng, 5);
    if (!jacobi_oracle(*rc.algebra)) return std::string("generator produced invalid algebra");
    return complex_check(rc.modules.front());
  }));
  out.push_back(run("dd_zero_module", seed + 2, cases, [](Rng& rng) {
    RandomCase rc = random_case(rng, 5);
    return complex_check(rc.modules[1 + rng.index(rc.modules.size() - 1)]);
  }));
  out.push_back(run("rank_nullity", seed + 3, cases, [](Rng& rng) {
    std::size_t rows = 1 + rng.index(7), cols = 1 + rng.index(7), inner = 1 + rng.index(7);
    Matrix m = random_matrix(rng, rows, inner) * random_matrix(rng, inner, cols);
    Subspace k = kernel(m);
    std::size_t r = rank(m);
    if (r + k.dim() != cols) return std::string("rank + nullity != cols");
    if (r != rank(m.transpose())) return std::string("row rank != column rank");
    for (const auto& v : k.vectors())
      if (!is_zero_vector(m.apply(v))) return std::string("kernel vector not annihilated");
    if (image(m).dim() != r) return std::string("image dimension != rank");
    return std::string();
  }));
  out.push_back(run("modular_law", seed + 4, cases, [](Rng& rng) {
    std::size_t n = 1 + rng.index(7);
    Subspace a = random_subspace(rng, n), b = random_subspace(rng, n);
    Subspace s = subspace_sum(a, b), i = subspace_intersect(a, b);
    if (s.dim() + i.dim() != a.dim() + b.dim()) return std::string("dim(a+b) + dim(a cap b) != dim a + dim b");
    if (!s.contains(a) || !s.contains(b) || !a.contains(i) || !b.contains(i))
      return std::string("sum/intersection containment fails");
    if (quotient_dim(s, a) != s.dim() - a.dim()) return std::string("quotient_dim");
    return std::string();
  }));
  out.push_back(run("echelon_canonical", seed + 5, cases, [](Rng& rng) {
    std::size_t n = 1 + rng.index(7);
    Subspace a = random_subspace(rng, n);
    auto vecs = a.vectors();
    if (vecs.empty()) return std::string();
    Matrix mix = random_invertible(rng, vecs.size());
    std::vector<Vector> other;
    for (std::size_t r = 0; r < vecs.size(); ++r) {
      Vector v(n);
      for (std::size_t k = 0; k < vecs.size(); ++k)
        for (std::size_t c = 0; c < n; ++c) v[c].add_mul(mix(r, k), vecs[k][c]);
      other.push_back(std::move(v));
    }
    other.push_back(Vector(n));  // a redundant zero vector
    return Subspace::span(n, other) == a ? std::string() : std::string("different spanning sets give different forms");
  }));
  out.push_back(run("jacobi_flip_detected", seed + 6, cases, [](Rng& rng) {
    RandomCase rc = random_case(rng, 5, true);
    const LieAlgebra& g = *rc.algebra;
    const std::size_t n = g.dim();
    std::vector<std::array<std::size_t, 3>> nonzero;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
          if (!g.structure(i, j)[l].is_zero()) nonzero.push_back({i, j, l});
    if (nonzero.empty()) return std::string("nonabelian generator returned an abelian algebra");
    auto [i, j, l] = nonzero[rng.index(nonzero.size())];
    std::vector<Vector> table;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto s = g.structure(a, b);
        table.emplace_back(s.begin(), s.end());
      }
    table[i * n + j][l] = -table[i * n + j][l];
    table[j * n + i][l] = -table[j * n + i][l];
    LieAlgebra flipped(g.basis_names(), std::move(table));
    if (!check_antisymmetry(flipped).pass) return std::string("symmetric flip reported as antisymmetry failure");
    bool oracle = jacobi_oracle(flipped);
    auto verdict = check_jacobi(flipped);
    if (verdict.pass != oracle) return std::string("check_jacobi disagrees with the ad oracle");
    if (!verdict.pass) {
      auto [a, b, c] = *verdict.witness;
      Vector x = flipped.basis_vector(a), y = flipped.basis_vector(b), z = flipped.basis_vector(c);
      Vector jac = flipped.bracket(x, flipped.bracket(y, z));
      Vector t2 = flipped.bracket(y, flipped.bracket(z, x));
      Vector t3 = flipped.bracket(z, flipped.bracket(x, y));
      for (std::size_t k = 0; k < n; ++k) jac[k] += t2[k] + t3[k];
      if (is_zero_vector(jac)) return std::string("Jacobi witness triple does not fail");
    }
    return std::string();
  }));
  out.push_back(run("antisymmetry_flip_detected", seed + 7, cases, [](Rng& rng) {
    RandomCase rc = random_case(rng, 5);
    const LieAlgebra& g = *rc.algebra;
    const std::size_t n = g.dim();
    if (n < 2) return std::string();
    std::size_t i = rng.index(n), j = rng.index(n - 1);
    if (j >= i) ++j;
    std::size_t l = rng.index(n);
    std::vector<Vector> table;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto s = g.structure(a, b);
        table.emplace_back(s.begin(), s.end());
      }
    Scalar& c = table[i * n + j][l];
    c = c.is_zero() ? rng.nonzero_scalar() : -c;
    auto verdict = check_antisymmetry(LieAlgebra(g.basis_names(), std::move(table)));
    if (verdict.pass) return std::string("one-sided flip not detected");
    auto w = *verdict.witness;
    if (w != std::array<std::size_t, 2>{std::min(i, j), std::max(i, j)}) return std::string("wrong witness pair");
    return std::string();
  }));
  out.push_back(run("dual_involution", seed + 8, cases, [](Rng& rng) {
    RandomCase rc = random_case(rng, 5);
    const Representation& m = rc.modules[rng.index(rc.modules.size())];
    Representation dd = dual_module(dual_module(m));
    if (dd.actions() != m.actions()) return std::string("dual of dual differs");
    if (!check_homomorphism(dual_module(m)).pass) return std::string("dual is not a homomorphism");
    return std::string();
  }));
  out.push_back(run("n_space_dims", seed + 9, cases, [](Rng& rng) {
    RandomCase rc = random_case(rng, 5);
    const LieAlgebra& g = *rc.algebra;
    // subalgebra generated by a random vector or two
    Subspace s = Subspace::span(g.dim(), {random_matrix(rng, 1, g.dim()).row_vector(0)});
    if (rng.coin()) s = subspace_sum(s, Subspace::span(g.dim(), {g.basis_vector(rng.index(g.dim()))}));
    while (true) {
      std::vector<Vector> vecs = s.vectors();
      for (const auto& a : s.vectors())
        for (const auto& b : s.vectors()) vecs.push_back(g.bracket(a, b));
      Subspace next = Subspace::span(g.dim(), vecs);
      if (next.dim() == s.dim()) break;
      s = next;
    }
    Subalgebra v = Subalgebra::make(rc.algebra, s);
    const Representation& m = rc.modules.front();
    for (int n = 0; n <= static_cast<int>(g.dim()); ++n)
      for (int p = 0; p <= n + 1; ++p) {
        Subspace ns = n_space_subspace(v, m, p, n - p);
        if (ns.dim() != n_space_dim_formula(g.dim(), v.dim(), m.dim(), p, n - p))
          return "dim N^{" + std::to_string(p) + "," + std::to_string(n - p) + "} disagrees with the count";
      }
    return std::string();
  }));
  return out;
}

PropertyResult reducibility_property(std::uint64_t seed, std::size_t cases, const std::vector<std::string>& presets) {
  struct Prepared {
    SemisimpleAlgebra s;
    Subalgebra v;
    Subalgebra k;
    HermitianProduct h;
  };
  std::vector<Prepared> prepared;
  for (const auto& name : presets) {
    SemisimpleAlgebra s = build_preset(name);
    Subalgebra v = borel(s);
    Subalgebra k = real_part(v);
    HermitianProduct h = hermitian_extension(*s.algebra);
    prepared.push_back(Prepared{std::move(s), std::move(v), std::move(k), std::move(h)});
  }
  return run("reducibility", seed, cases, [&](Rng& rng) {
    const Prepared& pr = prepared[rng.index(prepared.size())];
    const LieAlgebra& g = *pr.s.algebra;
    std::vector<Vector> seeds;
    std::size_t count = 1 + rng.index(2);
    for (std::size_t t = 0; t < count; ++t) {
      Vector coeffs = random_matrix(rng, 1, pr.v.dim()).row_vector(0);
      seeds.push_back(pr.v.space().combine(coeffs));
    }
    Subspace w = invariant_closure(g, pr.k.space(), Subspace::span(g.dim(), seeds));
    ReducibilityReport rep = reducibility_check(pr.v, w, pr.h);
    if (!rep.direct_sum) return std::string("complement is not a direct complement in v");
    if (!rep.complement_invariant) return "complement of a " + std::to_string(w.dim()) + "-dim submodule is not k-invariant";
    if (!rep.hermitian_identity) return std::string("Hermitian identity fails");
    return std::string();
  });
}

}  // namespace liecoh
