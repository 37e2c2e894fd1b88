#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liecoh/linalg.hpp"

namespace liecoh {

/// One entry of a bracket table: [X_x, X_y] = value (coordinates).
struct BracketEntry {
  std::size_t x;
  std::size_t y;
  Vector value;
};

/// A complex Lie algebra given by structure constants on a named basis,
/// optionally with an antilinear real structure sigma.
///
/// sigma is stored as the matrix S whose column j holds sigma(X_j); on a
/// general vector sigma(sum c_j X_j) = sum conj(c_j) sigma(X_j) = S conj(c).
/// The constructor does not validate the axioms; use check_antisymmetry,
/// check_jacobi and check_real_structure.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// `table[i*n + j]` holds the coordinates of [X_i, X_j].
  LieAlgebra(std::vector<std::string> basis_names, std::vector<Vector> table,
             std::optional<Matrix> real_structure = std::nullopt);

  /// Builds the table from a list of brackets. A pair given only as (x, y)
  /// gets [X_y, X_x] = -[X_x, X_y]; pairs never mentioned are zero.
  static LieAlgebra from_brackets(std::vector<std::string> basis_names,
                                  const std::vector<BracketEntry>& brackets,
                                  std::optional<Matrix> real_structure = std::nullopt);
  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  std::span<const Scalar> structure(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }
  Vector basis_vector(std::size_t i) const;

  /// Bilinear extension of the structure constants.
  Vector bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;
  /// Matrix of ad(x): entry (l, j) is the X_l-coordinate of [x, X_j].
  Matrix ad(std::span<const Scalar> x) const;
  Matrix ad_basis(std::size_t i) const;

  bool has_real_structure() const { return sigma_.has_value(); }
  const Matrix& real_structure() const;
  /// sigma(x)
  Vector conjugate(std::span<const Scalar> x) const;

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.names_ == b.names_ && a.table_ == b.table_ && a.sigma_ == b.sigma_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Vector> table_;
  std::optional<Matrix> sigma_;
  std::string label_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Pass/fail with an optional witness (basis indices).
template <std::size_t N>
struct AxiomCheck {
  bool pass = true;
  std::optional<std::array<std::size_t, N>> witness;
};

/// Fails on the first pair with [X_i, X_j] != -[X_j, X_i].
AxiomCheck<2> check_antisymmetry(const LieAlgebra& g);
/// Fails on the first basis triple (i, j, k), i <= j <= k, whose Jacobiator
/// [X_i,[X_j,X_k]] + [X_j,[X_k,X_i]] + [X_k,[X_i,X_j]] is nonzero.
AxiomCheck<3> check_jacobi(const LieAlgebra& g);

struct RealStructureCheck {
  bool involutive = true;
  bool bracket_compatible = true;
  std::optional<std::size_t> involution_witness;
  std::optional<std::array<std::size_t, 2>> bracket_witness;
  bool pass() const { return involutive && bracket_compatible; }
};
/// sigma o sigma = id and sigma[X_i, X_j] = [sigma X_i, sigma X_j].
RealStructureCheck check_real_structure(const LieAlgebra& g);

/// Real dimension of the sigma-fixed real subspace.
std::size_t real_form_dimension(const LieAlgebra& g);

/// Pass iff all brackets of echelon basis vectors of s lie in s; the
/// witness holds the offending pair of basis positions in s.
AxiomCheck<2> check_subalgebra(const LieAlgebra& g, const Subspace& s);

/// Image of v under sigma.
Subspace conjugate_subspace(const LieAlgebra& g, const Subspace& v);

/// A subspace closed under the bracket, together with the Lie algebra it
/// forms in its own right (basis = echelon basis of the subspace).
class Subalgebra {
 public:
  /// Throws PreconditionFailed naming the witness pair if `space` is not
  /// closed under the bracket.
  static Subalgebra make(AlgebraPtr parent, Subspace space, std::string label = "v");
  static Subalgebra whole(AlgebraPtr parent, std::string label = "g");
  static Subalgebra zero(AlgebraPtr parent, std::string label = "0");

  const LieAlgebra& parent() const { return *parent_; }
  const AlgebraPtr& parent_ptr() const { return parent_; }
  const Subspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  std::size_t codim() const { return parent_->dim() - space_.dim(); }
  /// The subalgebra as a Lie algebra on its echelon basis.
  const LieAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const std::string& label() const { return label_; }

  /// Coordinates (in this subalgebra's basis) of a parent vector lying in it.
  Vector local_coordinates(std::span<const Scalar> x) const { return space_.coordinates(x); }
  /// `inner` (a subalgebra of the parent contained in this one) re-expressed
  /// as a subalgebra of algebra().
  Subalgebra inner(const Subalgebra& inner) const;

 private:
  AlgebraPtr parent_;
  Subspace space_;
  AlgebraPtr algebra_;
  std::string label_;
};

/// The algebra structure of a bracket-closed subspace on its echelon basis.
/// sigma is inherited when the subspace is sigma-stable.
LieAlgebra restrict_algebra(const LieAlgebra& g, const Subspace& s);

struct StructureClass {
  bool elliptic = false;
  bool complex = false;
  bool essentially_real = false;
  std::size_t corank_real_part = 0;
  std::size_t dim_sum = 0;           // dim(v + conj v)
  std::size_t dim_intersection = 0;  // dim(v cap conj v)
};

/// elliptic: v + conj v = g; complex: v (+) conj v = g; essentially real: v = conj v.
StructureClass classify_structure(const LieAlgebra& g, const Subalgebra& v);

/// k = v cap conj v as a subalgebra of g.
Subalgebra real_part(const Subalgebra& v, std::string label = "k");

}  // namespace liecoh
