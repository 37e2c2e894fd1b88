#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "liecoh/matrix.hpp"

namespace liecoh {

/// Row-reduces `m` in place to reduced row echelon form (pivot = first
/// nonzero entry of the column, normalised to 1) and returns the pivot
/// columns. Rows past the rank are left zero.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(const Matrix& m);

/// Determinant of a square matrix by elimination.
Scalar determinant(Matrix a);
/// Throws PreconditionFailed if m is singular.
Matrix inverse(const Matrix& m);

/// A linear subspace of an ambient coordinate space, stored as the reduced
/// row echelon basis. Equal subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  /// Row space of `rows`.
  static Subspace row_space(Matrix rows);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  bool empty() const { return pivots_.empty(); }

  /// Echelon basis, one vector per row.
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector vector(std::size_t k) const { return basis_.row_vector(k); }
  std::vector<Vector> vectors() const;

  /// x with the pivot coordinates eliminated; zero iff x lies in the space.
  Vector residue(std::span<const Scalar> x) const;
  bool contains(std::span<const Scalar> x) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of x (assumed to lie in the space) in the echelon basis.
  Vector coordinates(std::span<const Scalar> x) const;
  /// Inverse of `coordinates`.
  Vector combine(std::span<const Scalar> coords) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space of m acting on column vectors; dim(kernel) + rank = cols.
Subspace kernel(const Matrix& m);
/// Column space of m.
Subspace image(const Matrix& m);
/// m applied to a subspace of its domain.
Subspace image(const Matrix& m, const Subspace& domain);
/// { x in domain : m x in target }.
Subspace preimage(const Matrix& m, const Subspace& domain, const Subspace& target);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
/// dim big - dim small; throws PreconditionFailed unless small is inside big.
std::size_t quotient_dim(const Subspace& big, const Subspace& small);
/// Canonical complement of `small` inside `big`: the echelon span of the
/// residues of big's basis modulo small.
Subspace complement(const Subspace& big, const Subspace& small);

/// An explicit subquotient num/den (den inside num) carried by the canonical
/// complement of den in num.
class Subquotient {
 public:
  Subquotient() = default;
  Subquotient(Subspace num, Subspace den);

  const Subspace& numerator() const { return num_; }
  const Subspace& denominator() const { return den_; }
  /// Representatives of a basis of the quotient.
  const Subspace& representatives() const { return comp_; }
  std::size_t dim() const { return comp_.dim(); }
  std::size_t ambient_dim() const { return num_.ambient_dim(); }

  /// Coordinates of the class of x (x must lie in the numerator).
  Vector coordinates(std::span<const Scalar> x) const;

 private:
  Subspace num_;
  Subspace den_;
  Subspace comp_;
};

/// Matrix of the map induced by `m` from one subquotient to another, in the
/// representative bases. Throws InternalInvariant if m does not map the
/// source numerator into the target numerator.
Matrix induced_map(const Matrix& m, const Subquotient& source, const Subquotient& target);

}  // namespace liecoh
