#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecoh/representation.hpp"

namespace liecoh {

/// An element of C^p(g; M) in the canonical basis: sorted p-subsets of the
/// algebra basis (lex order) tensor the module basis, index = subset*dim_M + a.
struct Cochain {
  std::size_t degree = 0;
  std::size_t algebra_dim = 0;
  std::size_t module_dim = 0;
  Vector coefficients;
};

/// Space dimensions per degree and the differentials D_q : C^q -> C^{q+1}.
/// The last degree has no stored outgoing differential.
struct CochainComplex {
  std::vector<std::size_t> dims;
  std::vector<Matrix> differentials;
  std::string provenance;

  std::size_t length() const { return dims.size(); }
  /// D_q, or an empty-shaped zero map when q is the top degree.
  Matrix differential(std::size_t q) const;
};

/// First degree q with D_{q+1} D_q != 0, if any.
std::optional<std::size_t> find_nonzero_square(const CochainComplex& c);
/// dim H^q = dim ker D_q - rank D_{q-1}.
std::vector<std::size_t> cohomology_dims(const CochainComplex& c);
std::vector<Subspace> cocycle_spaces(const CochainComplex& c);

/// Matrix of d : C^p(g; M) -> C^{p+1}(g; M), g = m.algebra().
/// (du)(X_0..X_p) = sum_t (-1)^t X_t.u(..^X_t..) + sum_{s<t} (-1)^{s+t} u([X_s,X_t], ..^X_s..^X_t..)
Matrix ce_differential(const Representation& m, int p);
/// Matrix of L_x on C^p(g; M).
Matrix lie_derivative_matrix(const Representation& m, std::span<const Scalar> x, std::size_t p);
Cochain lie_derivative(const Representation& m, std::span<const Scalar> x, const Cochain& u);
/// Full complex in degrees 0..dim g; throws PreconditionFailed if d o d != 0.
CochainComplex ce_complex(const Representation& m);

/// N^{p,q}: forms of degree p+q vanishing whenever q+1 arguments lie in v.
struct BigradedSlot {
  int p = 0;
  int q = 0;
  Subspace n_space;
  std::size_t quotient_dim = 0;  // dim N^{p,q} - dim N^{p+1,q-1}
};

/// N^{p,q} as a subspace of C^{p+q}(g; M) (zero-dimensional ambient past the top degree).
Subspace n_space_subspace(const Subalgebra& v, const Representation& m, int p, int q);
BigradedSlot n_space(const Subalgebra& v, const Representation& m, int p, int q);
/// Sum over c >= p of C(codim, c) C(dim v, p+q-c) dim M.
std::size_t n_space_dim_formula(std::size_t dim_g, std::size_t dim_v, std::size_t dim_m, int p, int q);

/// (C^{p,q}_v, d') for q = 0..dim v; inclusion and stability are checked.
CochainComplex induced_complex(const Subalgebra& v, const Representation& m, int p);
/// Complex of v-basic cochains (killed by insertion of and by L_Y for every Y in v).
CochainComplex relative_complex(const Subalgebra& v, const Representation& m);

struct HsIsomorphismReport {
  int p = 0;
  std::vector<std::size_t> lhs;  // H^{p,q}_v(g; M)
  std::vector<std::size_t> rhs;  // H^q(v; C^p(g/v; M))
  bool pass = false;
};
HsIsomorphismReport hs_isomorphism_check(const Subalgebra& v, const Representation& m, int p);

}  // namespace liecoh
