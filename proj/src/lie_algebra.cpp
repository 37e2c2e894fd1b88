#include "liecoh/lie_algebra.hpp"

#include <sstream>

#include "liecoh/error.hpp"
#include "liecoh/format.hpp"

namespace liecoh {

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names, std::vector<Vector> table,
                       std::optional<Matrix> real_structure)
    : names_(std::move(basis_names)), table_(std::move(table)), sigma_(std::move(real_structure)) {
  const std::size_t n = names_.size();
  if (table_.size() != n * n) throw DimensionMismatch("LieAlgebra: bracket table must have dim^2 entries");
  for (const auto& v : table_)
    if (v.size() != n) throw DimensionMismatch("LieAlgebra: bracket value has wrong length");
  if (sigma_ && (sigma_->rows() != n || sigma_->cols() != n))
    throw DimensionMismatch("LieAlgebra: real structure must be dim x dim");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (names_[i] == names_[j]) throw ParseError("LieAlgebra: duplicate basis name '" + names_[i] + "'");
}

LieAlgebra LieAlgebra::from_brackets(std::vector<std::string> basis_names,
                                     const std::vector<BracketEntry>& brackets,
                                     std::optional<Matrix> real_structure) {
  const std::size_t n = basis_names.size();
  std::vector<Vector> table(n * n, Vector(n));
  std::vector<bool> given(n * n, false);
  for (const auto& b : brackets) {
    if (b.x >= n || b.y >= n || b.value.size() != n)
      throw DimensionMismatch("LieAlgebra::from_brackets: entry out of range");
    table[b.x * n + b.y] = b.value;
    given[b.x * n + b.y] = true;
  }
  for (const auto& b : brackets) {
    std::size_t mirror = b.y * n + b.x;
    if (!given[mirror]) {
      Vector neg(n);
      for (std::size_t k = 0; k < n; ++k) neg[k] = -b.value[k];
      table[mirror] = std::move(neg);
    }
  }
  return LieAlgebra(std::move(basis_names), std::move(table), std::move(real_structure));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i + 1));
  LieAlgebra g(std::move(names), std::vector<Vector>(dim * dim, Vector(dim)), Matrix::identity(dim));
  g.set_label("abelian" + std::to_string(dim));
  return g;
}

std::optional<std::size_t> LieAlgebra::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Vector LieAlgebra::basis_vector(std::size_t i) const {
  Vector v(dim());
  v.at(i) = 1;
  return v;
}

Vector LieAlgebra::bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket: vector length mismatch");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      auto s = structure(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!s[k].is_zero()) out[k].add_mul(c, s[k]);
    }
  }
  return out;
}

Matrix LieAlgebra::ad(std::span<const Scalar> x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw DimensionMismatch("ad: vector length mismatch");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      auto s = structure(i, j);
      for (std::size_t l = 0; l < n; ++l)
        if (!s[l].is_zero()) m(l, j).add_mul(x[i], s[l]);
    }
  }
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const { return ad(basis_vector(i)); }

const Matrix& LieAlgebra::real_structure() const {
  if (!sigma_) throw PreconditionFailed("algebra '" + label_ + "' has no real structure");
  return *sigma_;
}

Vector LieAlgebra::conjugate(std::span<const Scalar> x) const {
  const Matrix& s = real_structure();
  Vector c(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) c[k] = x[k].conj();
  return s.apply(c);
}

AxiomCheck<2> check_antisymmetry(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto a = g.structure(i, j);
      auto b = g.structure(j, i);
      for (std::size_t k = 0; k < n; ++k)
        if (a[k] != -b[k]) return {false, std::array<std::size_t, 2>{i, j}};
    }
  return {};
}

AxiomCheck<3> check_jacobi(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector x = g.basis_vector(i), y = g.basis_vector(j), z = g.basis_vector(k);
        Vector sum = g.bracket(x, g.bracket(y, z));
        Vector t2 = g.bracket(y, g.bracket(z, x));
        Vector t3 = g.bracket(z, g.bracket(x, y));
        for (std::size_t l = 0; l < n; ++l) {
          sum[l] += t2[l];
          sum[l] += t3[l];
        }
        if (!is_zero_vector(sum)) return {false, std::array<std::size_t, 3>{i, j, k}};
      }
  return {};
}

RealStructureCheck check_real_structure(const LieAlgebra& g) {
  RealStructureCheck out;
  const std::size_t n = g.dim();
  const Matrix& s = g.real_structure();
  for (std::size_t j = 0; j < n && out.involutive; ++j) {
    if (g.conjugate(s.column(j)) != g.basis_vector(j)) {
      out.involutive = false;
      out.involution_witness = j;
    }
  }
  for (std::size_t i = 0; i < n && out.bracket_compatible; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto c = g.structure(i, j);
      Vector lhs = g.conjugate(c);
      Vector rhs = g.bracket(s.column(i), s.column(j));
      if (lhs != rhs) {
        out.bracket_compatible = false;
        out.bracket_witness = std::array<std::size_t, 2>{i, j};
        break;
      }
    }
  return out;
}

std::size_t real_form_dimension(const LieAlgebra& g) {
  // sigma(a + ib) = a + ib with S = P + iQ reads (P - I)a + Qb = 0, Qa - (P + I)b = 0.
  const std::size_t n = g.dim();
  const Matrix& s = g.real_structure();
  Matrix system(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Scalar p(s(r, c).re()), q(s(r, c).im());
      system(r, c) = r == c ? p - 1 : p;
      system(r, n + c) = q;
      system(n + r, c) = q;
      system(n + r, n + c) = r == c ? -p - 1 : -p;
    }
  return kernel(system).dim();
}

AxiomCheck<2> check_subalgebra(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient_dim() != g.dim()) throw DimensionMismatch("check_subalgebra: ambient dimension mismatch");
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b)
      if (!s.contains(g.bracket(s.basis().row(a), s.basis().row(b))))
        return {false, std::array<std::size_t, 2>{a, b}};
  return {};
}

Subspace conjugate_subspace(const LieAlgebra& g, const Subspace& v) {
  if (v.ambient_dim() != g.dim()) throw DimensionMismatch("conjugate_subspace: ambient dimension mismatch");
  std::vector<Vector> images;
  for (std::size_t k = 0; k < v.dim(); ++k) images.push_back(g.conjugate(v.basis().row(k)));
  return Subspace::span(g.dim(), images);
}

LieAlgebra restrict_algebra(const LieAlgebra& g, const Subspace& s) {
  const std::size_t d = s.dim();
  std::vector<std::string> names;
  for (std::size_t k = 0; k < d; ++k) {
    auto row = s.basis().row(k);
    std::size_t nonzero = 0;
    for (const auto& x : row) nonzero += x.is_zero() ? 0 : 1;
    if (nonzero == 1)
      names.push_back(g.basis_names()[s.pivots()[k]]);
    else
      names.push_back("b" + std::to_string(k + 1));
  }
  std::vector<Vector> table(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Vector br = g.bracket(s.basis().row(a), s.basis().row(b));
      if (!s.contains(br)) throw PreconditionFailed("restrict_algebra: subspace is not closed under the bracket");
      table[a * d + b] = s.coordinates(br);
    }
  std::optional<Matrix> sigma;
  if (g.has_real_structure() && conjugate_subspace(g, s) == s) {
    Matrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      Vector c = s.coordinates(g.conjugate(s.basis().row(j)));
      for (std::size_t i = 0; i < d; ++i) m(i, j) = c[i];
    }
    sigma = std::move(m);
  }
  return LieAlgebra(std::move(names), std::move(table), std::move(sigma));
}

Subalgebra Subalgebra::make(AlgebraPtr parent, Subspace space, std::string label) {
  if (!parent) throw PreconditionFailed("Subalgebra::make: null parent");
  if (space.ambient_dim() != parent->dim())
    throw DimensionMismatch("Subalgebra::make: subspace does not live in the algebra's coordinate space");
  auto check = check_subalgebra(*parent, space);
  if (!check.pass) {
    auto [a, b] = *check.witness;
    throw PreconditionFailed("'" + label + "' is not a subalgebra: [" + format_vector(*parent, space.vector(a)) +
                             ", " + format_vector(*parent, space.vector(b)) + "] leaves the span");
  }
  Subalgebra out;
  out.parent_ = std::move(parent);
  out.space_ = std::move(space);
  auto alg = std::make_shared<LieAlgebra>(restrict_algebra(*out.parent_, out.space_));
  alg->set_label(label);
  out.algebra_ = std::move(alg);
  out.label_ = std::move(label);
  return out;
}

Subalgebra Subalgebra::whole(AlgebraPtr parent, std::string label) {
  auto n = parent->dim();
  return make(std::move(parent), Subspace::full(n), std::move(label));
}

Subalgebra Subalgebra::zero(AlgebraPtr parent, std::string label) {
  auto n = parent->dim();
  return make(std::move(parent), Subspace::zero(n), std::move(label));
}

Subalgebra Subalgebra::inner(const Subalgebra& inner) const {
  if (inner.parent_ != parent_ && !(*inner.parent_ == *parent_))
    throw PreconditionFailed("Subalgebra::inner: different parent algebras");
  if (!space_.contains(inner.space_))
    throw PreconditionFailed("Subalgebra::inner: '" + inner.label_ + "' is not contained in '" + label_ + "'");
  std::vector<Vector> coords;
  for (std::size_t k = 0; k < inner.dim(); ++k) coords.push_back(space_.coordinates(inner.space_.basis().row(k)));
  return make(algebra_, Subspace::span(dim(), coords), inner.label_);
}

StructureClass classify_structure(const LieAlgebra& g, const Subalgebra& v) {
  if (!g.has_real_structure()) throw PreconditionFailed("classify_structure: algebra has no real structure");
  if (v.space().ambient_dim() != g.dim()) throw DimensionMismatch("classify_structure: ambient mismatch");
  Subspace vbar = conjugate_subspace(g, v.space());
  Subspace sum = subspace_sum(v.space(), vbar);
  Subspace meet = subspace_intersect(v.space(), vbar);
  StructureClass c;
  c.dim_sum = sum.dim();
  c.dim_intersection = meet.dim();
  c.elliptic = sum.dim() == g.dim();
  c.complex = c.elliptic && meet.dim() == 0;
  c.essentially_real = vbar == v.space();
  c.corank_real_part = g.dim() - meet.dim();
  return c;
}

Subalgebra real_part(const Subalgebra& v, std::string label) {
  Subspace vbar = conjugate_subspace(v.parent(), v.space());
  return Subalgebra::make(v.parent_ptr(), subspace_intersect(v.space(), vbar), std::move(label));
}

}  // namespace liecoh
