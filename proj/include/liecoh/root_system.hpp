#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liecoh/lie_algebra.hpp"

namespace liecoh {

using Root = std::vector<int>;  // coordinates in the simple-root basis

/// Cartan matrix with A(i, j) = alpha_j(h_i), its symmetrizer and the
/// positive roots sorted by height, then lexicographically.
struct CartanDatum {
  std::string name;
  std::vector<std::vector<int>> cartan;
  std::vector<Rational> symmetrizer;  // d_i = (alpha_i, alpha_i)/2, shortest = 1
  std::vector<Root> positive_roots;

  std::size_t rank() const { return cartan.size(); }
  /// (a, b) for roots given in simple-root coordinates.
  Rational inner(const Root& a, const Root& b) const;
  /// b(h_i) for i = 0..rank-1.
  std::vector<int> evaluate(const Root& b) const;
};

/// Validates the matrix (diagonal 2, nonpositive off-diagonal, symmetrizable,
/// positive definite) and enumerates the positive roots.
CartanDatum make_cartan_datum(std::vector<std::vector<int>> cartan, std::string name = "");
/// Cartan matrix of type A_n, B_n, C_n, D_n, E_6..8, F_4 or G_2, e.g. "B2".
std::vector<std::vector<int>> cartan_matrix_of_type(std::string_view type);
/// The shipped presets: A1, A2, B2, G2 (any name accepted by cartan_matrix_of_type works).
CartanDatum preset_datum(std::string_view name);
std::vector<std::string> preset_names();

/// A complexified compact semisimple algebra on its Chevalley basis
/// h_1..h_r, e_alpha (positive roots in datum order), f_alpha (same order).
struct SemisimpleAlgebra {
  CartanDatum datum;
  AlgebraPtr algebra;
  /// Root of each basis element (zero vector for the h_i, negated for f_alpha).
  std::vector<Root> basis_roots;

  std::size_t rank() const { return datum.rank(); }
  std::size_t num_positive() const { return datum.positive_roots.size(); }
  std::size_t e_index(std::size_t root) const { return rank() + root; }
  std::size_t f_index(std::size_t root) const { return rank() + num_positive() + root; }
};

/// Chevalley basis with signs fixed by the extraspecial-pair convention
/// (N = +(p+1) on extraspecial pairs); real structure sigma(h) = -h,
/// sigma(e_a) = -f_a. Throws InternalInvariant if Jacobi or sigma fails.
SemisimpleAlgebra build_semisimple(const CartanDatum& datum);
SemisimpleAlgebra build_preset(std::string_view name);

/// Signed structure constant N_{a,b} with [e_a, e_b] = N_{a,b} e_{a+b}.
Rational structure_constant(const CartanDatum& datum, const Root& a, const Root& b);

Subalgebra borel(const SemisimpleAlgebra& s);
/// Borel plus f_alpha for the positive roots supported on `simple` (1-based indices).
Subalgebra parabolic(const SemisimpleAlgebra& s, const std::vector<std::size_t>& simple);

/// Sesquilinear <x, y> = sum x_i conj(y_j) G_ij with G_ij = -B(X_i, sigma X_j), B the Killing form.
struct HermitianProduct {
  Matrix gram;
  Scalar operator()(std::span<const Scalar> x, std::span<const Scalar> y) const;
};

Matrix killing_form(const LieAlgebra& g);
/// Throws PreconditionFailed if g has no real structure or B is degenerate.
HermitianProduct hermitian_extension(const LieAlgebra& g);
bool is_conjugate_symmetric(const Matrix& m);
/// Leading principal minors of a conjugate-symmetric matrix all positive.
bool is_positive_definite(const Matrix& m);
/// <[X,Y],Z> = -<Y,[conj X, Z]> on all basis triples; first failing triple.
AxiomCheck<3> check_hermitian_identity(const LieAlgebra& g, const HermitianProduct& h);
/// First basis triple with <[X,Y],Z> != -<Y,[X,Z]>, if any.
std::optional<std::array<std::size_t, 3>> ad_invariance_failure(const LieAlgebra& g, const HermitianProduct& h);

}  // namespace liecoh
