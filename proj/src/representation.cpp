#include "liecoh/representation.hpp"

#include "liecoh/error.hpp"
#include "liecoh/subsets.hpp"

namespace liecoh {

Representation::Representation(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action, std::string label)
    : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)), label_(std::move(label)) {
  if (!algebra_) throw PreconditionFailed("Representation: null algebra");
  if (action_.size() != algebra_->dim())
    throw DimensionMismatch("Representation: need one action matrix per basis element");
  for (const auto& m : action_)
    if (m.rows() != dim_ || m.cols() != dim_) throw DimensionMismatch("Representation: action matrix has wrong size");
}

Matrix Representation::act(std::span<const Scalar> x) const {
  if (x.size() != action_.size()) throw DimensionMismatch("Representation::act: vector length mismatch");
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) m += action_[i] * x[i];
  return m;
}

bool same_algebra(const LieAlgebra& a, const LieAlgebra& b) { return &a == &b || a == b; }

AxiomCheck<2> check_homomorphism(const Representation& r) {
  const auto& g = r.algebra();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      if (r.act(g.structure(i, j)) != commutator(r.action(i), r.action(j)))
        return {false, std::array<std::size_t, 2>{i, j}};
  return {};
}

Representation trivial_module(AlgebraPtr g, std::size_t dim) {
  std::size_t n = g->dim();
  return Representation(std::move(g), dim, std::vector<Matrix>(n, Matrix(dim, dim)), "trivial");
}

Representation adjoint_module(AlgebraPtr g) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < g->dim(); ++i) action.push_back(g->ad_basis(i));
  std::size_t n = g->dim();
  return Representation(std::move(g), n, std::move(action), "adjoint");
}

Subspace quotient_basis(const Subalgebra& v) {
  const std::size_t n = v.parent().dim();
  std::vector<bool> pivot(n, false);
  for (auto p : v.space().pivots()) pivot[p] = true;
  std::vector<Vector> units;
  for (std::size_t c = 0; c < n; ++c)
    if (!pivot[c]) units.push_back(v.parent().basis_vector(c));
  return Subspace::span(n, units);
}

Representation quotient_module(const Subalgebra& v) {
  const LieAlgebra& g = v.parent();
  Subspace comp = quotient_basis(v);
  const std::size_t d = comp.dim();
  std::vector<Matrix> action;
  for (std::size_t y = 0; y < v.dim(); ++y) {
    Matrix m(d, d);
    for (std::size_t c = 0; c < d; ++c) {
      Vector br = g.bracket(v.space().basis().row(y), comp.basis().row(c));
      Vector coords = comp.coordinates(v.space().residue(br));
      for (std::size_t r = 0; r < d; ++r) m(r, c) = std::move(coords[r]);
    }
    action.push_back(std::move(m));
  }
  return Representation(v.algebra_ptr(), d, std::move(action), "quotient:g/" + v.label());
}

Representation dual_module(const Representation& r) {
  std::vector<Matrix> action;
  for (const auto& m : r.actions()) action.push_back(-m.transpose());
  return Representation(r.algebra_ptr(), r.dim(), std::move(action), "dual:" + r.label());
}

namespace {

// Calls f(J, I, sign, l, j) for every way of replacing element j of the
// p-subset J by l to obtain the p-subset I; sign sorts the replaced sequence.
template <typename F>
void for_each_replacement(std::size_t d, std::size_t p, F&& f) {
  SubsetIndex subsets(d, p);
  for (std::size_t ji = 0; ji < subsets.size(); ++ji) {
    SubsetMask J = subsets.mask(ji);
    std::size_t pos = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (!(J & bit(j))) continue;
      SubsetMask rest = J & ~bit(j);
      for (std::size_t l = 0; l < d; ++l) {
        if (rest & bit(l)) continue;
        std::size_t sorted = count_below(rest, l);
        std::size_t dist = sorted > pos ? sorted - pos : pos - sorted;
        int sign = dist % 2 ? -1 : 1;
        f(ji, subsets.index(rest | bit(l)), sign, l, j);
      }
      ++pos;
    }
  }
}

}  // namespace

Matrix exterior_power_action(const Matrix& base_action, std::size_t p) {
  const std::size_t d = base_action.rows();
  const std::size_t size = binomial(d, p);
  Matrix out(size, size);
  // e_J -> sum over slots j of e_{J with j replaced by l} * A[l][j]
  for_each_replacement(d, p, [&](std::size_t from, std::size_t to, int sign, std::size_t l, std::size_t j) {
    const Scalar& a = base_action(l, j);
    if (a.is_zero()) return;
    if (sign > 0)
      out(to, from) += a;
    else
      out(to, from) -= a;
  });
  return out;
}

Matrix leibniz_forms_action(const Matrix& base_action, std::size_t p, const Matrix& coeff_action) {
  const std::size_t d = base_action.rows();
  const std::size_t m = coeff_action.rows();
  const std::size_t size = binomial(d, p);
  // (Y.u)_J = R u_J - sum_{j in J} sum_l A[l][j] sign u_{J with j -> l}
  Matrix slots(size, size);
  for_each_replacement(d, p, [&](std::size_t J, std::size_t I, int sign, std::size_t l, std::size_t j) {
    const Scalar& a = base_action(l, j);
    if (a.is_zero()) return;
    if (sign > 0)
      slots(J, I) -= a;
    else
      slots(J, I) += a;
  });
  return kron(Matrix::identity(size), coeff_action) + kron(slots, Matrix::identity(m));
}

Representation forms_module(const Representation& base, int p, const Representation& coeffs) {
  if (p < 0 || static_cast<std::size_t>(p) > base.dim())
    throw PreconditionFailed("forms_module: degree " + std::to_string(p) + " outside 0.." + std::to_string(base.dim()));
  if (!same_algebra(base.algebra(), coeffs.algebra()))
    throw PreconditionFailed("forms_module: base and coefficient modules are over different algebras");
  const auto deg = static_cast<std::size_t>(p);
  const std::size_t dim = binomial(base.dim(), deg) * coeffs.dim();
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < base.algebra().dim(); ++i)
    action.push_back(leibniz_forms_action(base.action(i), deg, coeffs.action(i)));
  return Representation(base.algebra_ptr(), dim, std::move(action),
                        "forms:" + std::to_string(p) + ":" + base.label());
}

Representation exterior_power_module(const Representation& base, std::size_t p) {
  if (p > base.dim()) throw PreconditionFailed("exterior_power_module: degree exceeds module dimension");
  std::vector<Matrix> action;
  for (const auto& a : base.actions()) action.push_back(exterior_power_action(a, p));
  return Representation(base.algebra_ptr(), binomial(base.dim(), p), std::move(action),
                        "wedge:" + std::to_string(p) + ":" + base.label());
}

Representation restrict_module(const Representation& m, const Subalgebra& v) {
  if (!same_algebra(m.algebra(), v.parent()))
    throw PreconditionFailed("restrict_module: module is not over the subalgebra's parent");
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < v.dim(); ++k) action.push_back(m.act(v.space().basis().row(k)));
  return Representation(v.algebra_ptr(), m.dim(), std::move(action), m.label());
}

Subspace invariants(const Representation& r) {
  const std::size_t n = r.algebra().dim();
  Matrix stacked(n * r.dim(), r.dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < r.dim(); ++a)
      for (std::size_t b = 0; b < r.dim(); ++b) stacked(i * r.dim() + a, b) = r.action(i)(a, b);
  return kernel(stacked);
}

}  // namespace liecoh
