#pragma once

#include <string>
#include <vector>

#include "liecoh/lie_algebra.hpp"

namespace liecoh {

/// A finite-dimensional module: one action matrix rho(X_i) per basis
/// element of the algebra, acting on column vectors of length dim().
class Representation {
 public:
  Representation(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action, std::string label = "M");

  const LieAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  const Matrix& action(std::size_t i) const { return action_.at(i); }
  const std::vector<Matrix>& actions() const { return action_; }
  /// rho(x) for a general algebra element.
  Matrix act(std::span<const Scalar> x) const;
  const std::string& label() const { return label_; }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.dim_ == b.dim_ && a.action_ == b.action_ && *a.algebra_ == *b.algebra_;
  }

 private:
  AlgebraPtr algebra_;
  std::size_t dim_;
  std::vector<Matrix> action_;
  std::string label_;
};

bool same_algebra(const LieAlgebra& a, const LieAlgebra& b);

/// rho([X_i, X_j]) = [rho(X_i), rho(X_j)] on all basis pairs; witness (i, j).
AxiomCheck<2> check_homomorphism(const Representation& r);

Representation trivial_module(AlgebraPtr g, std::size_t dim = 1);
Representation adjoint_module(AlgebraPtr g);
/// Representation of v (on its own basis) on g/v; the quotient basis is the
/// set of unit vectors at the non-pivot columns of v's echelon basis.
Representation quotient_module(const Subalgebra& v);
/// Those unit vectors, as a subspace of g.
Subspace quotient_basis(const Subalgebra& v);
/// Negated transposes.
Representation dual_module(const Representation& r);
/// Alternating p-forms on the base module's space with values in `coeffs`,
/// both modules over the same algebra; basis = sorted p-subsets (lex) x coeffs basis.
Representation forms_module(const Representation& base, int p, const Representation& coeffs);
/// p-th exterior power with the derivation action.
Representation exterior_power_module(const Representation& base, std::size_t p);
/// Restriction to a subalgebra, expressed on the subalgebra's basis.
Representation restrict_module(const Representation& m, const Subalgebra& v);
/// Joint kernel of all action matrices.
Subspace invariants(const Representation& r);

/// Matrix of the Leibniz action on Lambda^p(V)^* (x) M for one algebra
/// element acting on V by `base_action` and on M by `coeff_action`:
/// (Y.u)(v_1..v_p) = Y.u(v_1..v_p) - sum_i u(v_1, .., Y.v_i, .., v_p).
Matrix leibniz_forms_action(const Matrix& base_action, std::size_t p, const Matrix& coeff_action);
/// Derivation action on Lambda^p(V).
Matrix exterior_power_action(const Matrix& base_action, std::size_t p);

}  // namespace liecoh
