#include "liecoh/linalg.hpp"

#include <utility>

#include "liecoh/error.hpp"

namespace liecoh {

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pivot = lead;
    while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead)
      for (std::size_t c = col; c < cols; ++c) std::swap(m(pivot, c), m(lead, c));
    if (!m(lead, col).is_one()) {
      Scalar inv = m(lead, col).inverse();
      for (std::size_t c = col; c < cols; ++c)
        if (!m(lead, c).is_zero()) m(lead, c) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, col).is_zero()) continue;
      Scalar factor = m(r, col);
      for (std::size_t c = col; c < cols; ++c)
        if (!m(lead, c).is_zero()) m(r, c).sub_mul(factor, m(lead, c));
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return row_reduce(copy).size();
}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient);
  s.pivots_.resize(ambient);
  for (std::size_t k = 0; k < ambient; ++k) s.pivots_[k] = k;
  return s;
}

Subspace Subspace::row_space(Matrix rows) {
  Subspace s;
  s.ambient_ = rows.cols();
  s.pivots_ = row_reduce(rows);
  s.basis_ = Matrix(s.pivots_.size(), s.ambient_);
  for (std::size_t r = 0; r < s.pivots_.size(); ++r)
    for (std::size_t c = 0; c < s.ambient_; ++c) s.basis_(r, c) = std::move(rows(r, c));
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw DimensionMismatch("Subspace::span: vector length mismatch");
  return row_space(Matrix::from_rows(vectors, ambient));
}

std::vector<Vector> Subspace::vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t k = 0; k < dim(); ++k) out.push_back(vector(k));
  return out;
}

Vector Subspace::residue(std::span<const Scalar> x) const {
  if (x.size() != ambient_) throw DimensionMismatch("Subspace::residue: vector length mismatch");
  Vector r(x.begin(), x.end());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    if (r[pivots_[k]].is_zero()) continue;
    Scalar factor = r[pivots_[k]];
    auto b = basis_.row(k);
    for (std::size_t c = pivots_[k]; c < ambient_; ++c)
      if (!b[c].is_zero()) r[c].sub_mul(factor, b[c]);
  }
  return r;
}

bool Subspace::contains(std::span<const Scalar> x) const { return is_zero_vector(residue(x)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("Subspace::contains: ambient mismatch");
  if (other.dim() > dim()) return false;
  for (std::size_t k = 0; k < other.dim(); ++k)
    if (!contains(other.basis_.row(k))) return false;
  return true;
}

Vector Subspace::coordinates(std::span<const Scalar> x) const {
  if (x.size() != ambient_) throw DimensionMismatch("Subspace::coordinates: vector length mismatch");
  Vector c(pivots_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = x[pivots_[k]];
  return c;
}

Vector Subspace::combine(std::span<const Scalar> coords) const {
  if (coords.size() != dim()) throw DimensionMismatch("Subspace::combine: coordinate length mismatch");
  Vector x(ambient_);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k].is_zero()) continue;
    auto b = basis_.row(k);
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!b[c].is_zero()) x[c].add_mul(coords[k], b[c]);
  }
  return x;
}

Subspace kernel(const Matrix& m) {
  Matrix r = m;
  auto pivots = row_reduce(r);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x(n);
    x[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      if (!r(k, f).is_zero()) x[pivots[k]] = -r(k, f);
    basis.push_back(std::move(x));
  }
  return Subspace::span(n, basis);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

Subspace image(const Matrix& m, const Subspace& domain) {
  if (domain.ambient_dim() != m.cols()) throw DimensionMismatch("image: domain ambient mismatch");
  std::vector<Vector> out;
  out.reserve(domain.dim());
  for (std::size_t k = 0; k < domain.dim(); ++k) out.push_back(m.apply(domain.basis().row(k)));
  return Subspace::span(m.rows(), out);
}

namespace {

// Coefficient vectors c with sum_i c_i rows[i] = 0.
std::vector<Vector> left_kernel(const std::vector<Vector>& rows, std::size_t width) {
  Matrix t(width, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < width; ++c) t(c, i) = rows[i][c];
  return kernel(t).vectors();
}

Subspace combine_all(const Subspace& s, const std::vector<Vector>& coeffs) {
  std::vector<Vector> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(s.combine(c));
  return Subspace::span(s.ambient_dim(), out);
}

}  // namespace

Subspace preimage(const Matrix& m, const Subspace& domain, const Subspace& target) {
  if (domain.ambient_dim() != m.cols() || target.ambient_dim() != m.rows())
    throw DimensionMismatch("preimage: ambient mismatch");
  if (domain.empty()) return domain;
  std::vector<Vector> residues;
  residues.reserve(domain.dim());
  for (std::size_t k = 0; k < domain.dim(); ++k)
    residues.push_back(target.residue(m.apply(domain.basis().row(k))));
  return combine_all(domain, left_kernel(residues, m.rows()));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace_sum: ambient dimension mismatch");
  if (b.empty()) return a;
  if (a.empty()) return b;
  Matrix rows(a.dim() + b.dim(), a.ambient_dim());
  for (std::size_t k = 0; k < a.dim(); ++k)
    for (std::size_t c = 0; c < a.ambient_dim(); ++c) rows(k, c) = a.basis()(k, c);
  for (std::size_t k = 0; k < b.dim(); ++k)
    for (std::size_t c = 0; c < a.ambient_dim(); ++c) rows(a.dim() + k, c) = b.basis()(k, c);
  return Subspace::row_space(std::move(rows));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("subspace_intersect: ambient dimension mismatch");
  if (a.empty() || b.empty()) return Subspace::zero(a.ambient_dim());
  std::vector<Vector> residues;
  residues.reserve(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) residues.push_back(b.residue(a.basis().row(k)));
  return combine_all(a, left_kernel(residues, a.ambient_dim()));
}

std::size_t quotient_dim(const Subspace& big, const Subspace& small) {
  if (!big.contains(small)) throw PreconditionFailed("quotient_dim: subspace is not contained in the numerator");
  return big.dim() - small.dim();
}

Subspace complement(const Subspace& big, const Subspace& small) {
  if (!big.contains(small)) throw PreconditionFailed("complement: subspace is not contained in the numerator");
  std::vector<Vector> residues;
  residues.reserve(big.dim());
  for (std::size_t k = 0; k < big.dim(); ++k) residues.push_back(small.residue(big.basis().row(k)));
  return Subspace::span(big.ambient_dim(), residues);
}

Subquotient::Subquotient(Subspace num, Subspace den)
    : num_(std::move(num)), den_(std::move(den)), comp_(complement(num_, den_)) {}

Vector Subquotient::coordinates(std::span<const Scalar> x) const {
  return comp_.coordinates(den_.residue(x));
}

Matrix induced_map(const Matrix& m, const Subquotient& source, const Subquotient& target) {
  if (m.cols() != source.ambient_dim() || m.rows() != target.ambient_dim())
    throw DimensionMismatch("induced_map: ambient mismatch");
  Matrix out(target.dim(), source.dim());
  const auto& reps = source.representatives();
  for (std::size_t k = 0; k < reps.dim(); ++k) {
    Vector y = m.apply(reps.basis().row(k));
    if (!target.numerator().contains(y))
      throw InternalInvariant("induced_map: image leaves the target numerator");
    Vector c = target.coordinates(y);
    for (std::size_t r = 0; r < c.size(); ++r) out(r, k) = std::move(c[r]);
  }
  return out;
}

Scalar determinant(Matrix a) {
  const std::size_t n = a.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return Scalar(0);
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(piv, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      Scalar f = a(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) a(r, k).sub_mul(f, a(c, k));
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("inverse: matrix is not square");
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(1);
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw PreconditionFailed("inverse: matrix is singular");
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

}  // namespace liecoh
