#include "liecoh/ce_complex.hpp"

#include "liecoh/error.hpp"
#include "liecoh/subsets.hpp"

namespace liecoh {

Matrix CochainComplex::differential(std::size_t q) const {
  if (q < differentials.size()) return differentials[q];
  return Matrix(0, q < dims.size() ? dims[q] : 0);
}

std::optional<std::size_t> find_nonzero_square(const CochainComplex& c) {
  for (std::size_t q = 0; q + 1 < c.differentials.size(); ++q)
    if (!(c.differentials[q + 1] * c.differentials[q]).is_zero()) return q;
  return std::nullopt;
}

std::vector<std::size_t> cohomology_dims(const CochainComplex& c) {
  std::vector<std::size_t> out(c.dims.size());
  std::vector<std::size_t> ranks(c.dims.size(), 0);
  for (std::size_t q = 0; q < c.differentials.size(); ++q) ranks[q] = rank(c.differentials[q]);
  for (std::size_t q = 0; q < c.dims.size(); ++q) {
    std::size_t incoming = q > 0 ? ranks[q - 1] : 0;
    out[q] = c.dims[q] - ranks[q] - incoming;
  }
  return out;
}

std::vector<Subspace> cocycle_spaces(const CochainComplex& c) {
  std::vector<Subspace> out;
  for (std::size_t q = 0; q < c.dims.size(); ++q)
    out.push_back(q < c.differentials.size() ? kernel(c.differentials[q]) : Subspace::full(c.dims[q]));
  return out;
}

Matrix ce_differential(const Representation& m, int p) {
  const LieAlgebra& g = m.algebra();
  const std::size_t n = g.dim();
  if (p < 0 || static_cast<std::size_t>(p) > n)
    throw PreconditionFailed("ce_differential: degree " + std::to_string(p) + " outside 0.." + std::to_string(n));
  const auto deg = static_cast<std::size_t>(p);
  const std::size_t dm = m.dim();
  if (deg == n) return Matrix(0, dm);
  SubsetIndex source(n, deg), target(n, deg + 1);
  Matrix d(target.size() * dm, source.size() * dm);
  for (std::size_t ji = 0; ji < target.size(); ++ji) {
    const auto J = elements(target.mask(ji));
    const SubsetMask jmask = target.mask(ji);
    // module term
    for (std::size_t t = 0; t < J.size(); ++t) {
      std::size_t col = source.index(jmask & ~bit(J[t])) * dm;
      const Matrix& rho = m.action(J[t]);
      for (std::size_t b = 0; b < dm; ++b)
        for (std::size_t a = 0; a < dm; ++a) {
          const Scalar& c = rho(b, a);
          if (c.is_zero()) continue;
          if (t % 2 == 0)
            d(ji * dm + b, col + a) += c;
          else
            d(ji * dm + b, col + a) -= c;
        }
    }
    // bracket term
    for (std::size_t s = 0; s < J.size(); ++s)
      for (std::size_t t = s + 1; t < J.size(); ++t) {
        SubsetMask rest = jmask & ~bit(J[s]) & ~bit(J[t]);
        auto br = g.structure(J[s], J[t]);
        for (std::size_t l = 0; l < n; ++l) {
          if (br[l].is_zero() || (rest & bit(l))) continue;
          bool negative = ((s + t + count_below(rest, l)) % 2) != 0;
          std::size_t col = source.index(rest | bit(l)) * dm;
          for (std::size_t a = 0; a < dm; ++a) {
            if (negative)
              d(ji * dm + a, col + a) -= br[l];
            else
              d(ji * dm + a, col + a) += br[l];
          }
        }
      }
  }
  return d;
}

Matrix lie_derivative_matrix(const Representation& m, std::span<const Scalar> x, std::size_t p) {
  const LieAlgebra& g = m.algebra();
  if (x.size() != g.dim()) throw DimensionMismatch("lie_derivative: vector length mismatch");
  if (p > g.dim()) throw PreconditionFailed("lie_derivative: degree exceeds algebra dimension");
  return leibniz_forms_action(g.ad(x), p, m.act(x));
}

Cochain lie_derivative(const Representation& m, std::span<const Scalar> x, const Cochain& u) {
  if (u.algebra_dim != m.algebra().dim() || u.module_dim != m.dim() ||
      u.coefficients.size() != binomial(u.algebra_dim, u.degree) * u.module_dim)
    throw DimensionMismatch("lie_derivative: cochain shape does not match the module");
  Cochain out = u;
  out.coefficients = lie_derivative_matrix(m, x, u.degree).apply(u.coefficients);
  return out;
}

CochainComplex ce_complex(const Representation& m) {
  const std::size_t n = m.algebra().dim();
  CochainComplex c;
  c.provenance = "CE(" + (m.algebra().label().empty() ? std::string("g") : m.algebra().label()) + "; " + m.label() + ")";
  for (std::size_t q = 0; q <= n; ++q) c.dims.push_back(binomial(n, q) * m.dim());
  for (std::size_t q = 0; q < n; ++q) c.differentials.push_back(ce_differential(m, static_cast<int>(q)));
  if (auto bad = find_nonzero_square(c))
    throw PreconditionFailed("ce_complex: d o d != 0 from degree " + std::to_string(*bad) +
                             " (module action is not a homomorphism)");
  return c;
}

std::size_t n_space_dim_formula(std::size_t dim_g, std::size_t dim_v, std::size_t dim_m, int p, int q) {
  if (q < 0 || p < 0) return 0;
  const std::size_t n = static_cast<std::size_t>(p + q);
  const std::size_t codim = dim_g - dim_v;
  std::size_t total = 0;
  for (std::size_t c = static_cast<std::size_t>(p); c <= codim && c <= n; ++c)
    total += binomial(codim, c) * binomial(dim_v, n - c);
  return total * dim_m;
}

namespace {

// Kernel of the scalar vanishing conditions, tensored with the module basis.
Subspace scalar_n_space(const Subalgebra& v, std::size_t dim_m, std::size_t p, std::size_t q) {
  const std::size_t n = v.parent().dim();
  const std::size_t deg = p + q;
  SubsetIndex forms(n, deg), inserted(v.dim(), q + 1), rest(n, p - 1);
  const Matrix& w = v.space().basis();
  Matrix cond(inserted.size() * rest.size(), forms.size());
  for (std::size_t si = 0; si < inserted.size(); ++si) {
    const auto S = elements(inserted.mask(si));
    for (std::size_t ti = 0; ti < rest.size(); ++ti) {
      const SubsetMask T = rest.mask(ti);
      const auto Telems = elements(T);
      const std::size_t row = si * rest.size() + ti;
      for (std::size_t ii = 0; ii < forms.size(); ++ii) {
        const SubsetMask I = forms.mask(ii);
        if ((I & T) != T) continue;
        const auto Ielems = elements(I);
        // u_I(Y_S, X_T) = det of the argument coordinates restricted to rows I
        Matrix args(deg, deg);
        for (std::size_t r = 0; r < deg; ++r) {
          for (std::size_t k = 0; k < S.size(); ++k) args(r, k) = w(S[k], Ielems[r]);
          for (std::size_t k = 0; k < Telems.size(); ++k)
            args(r, S.size() + k) = Scalar(Ielems[r] == Telems[k] ? 1 : 0);
        }
        cond(row, ii) = determinant(std::move(args));
      }
    }
  }
  Subspace k = kernel(cond);
  if (dim_m == 1) return k;
  std::vector<Vector> vecs;
  for (std::size_t b = 0; b < k.dim(); ++b)
    for (std::size_t a = 0; a < dim_m; ++a) {
      Vector x(forms.size() * dim_m);
      for (std::size_t ii = 0; ii < forms.size(); ++ii) x[ii * dim_m + a] = k.basis()(b, ii);
      vecs.push_back(std::move(x));
    }
  return Subspace::span(forms.size() * dim_m, vecs);
}

void require_over_parent(const Subalgebra& v, const Representation& m, const char* who) {
  if (!same_algebra(v.parent(), m.algebra()))
    throw PreconditionFailed(std::string(who) + ": module is not over the subalgebra's parent algebra");
}

std::size_t cochain_dim(std::size_t n, std::size_t dm, int deg) {
  if (deg < 0 || static_cast<std::size_t>(deg) > n) return 0;
  return binomial(n, static_cast<std::size_t>(deg)) * dm;
}

}  // namespace

Subspace n_space_subspace(const Subalgebra& v, const Representation& m, int p, int q) {
  require_over_parent(v, m, "n_space");
  if (p < 0) throw PreconditionFailed("n_space: p must be nonnegative");
  const std::size_t n = v.parent().dim();
  const std::size_t ambient = cochain_dim(n, m.dim(), p + q);
  if (q < 0 || ambient == 0) return Subspace::zero(ambient);
  if (p == 0 || static_cast<std::size_t>(q) + 1 > v.dim()) return Subspace::full(ambient);
  return scalar_n_space(v, m.dim(), static_cast<std::size_t>(p), static_cast<std::size_t>(q));
}

BigradedSlot n_space(const Subalgebra& v, const Representation& m, int p, int q) {
  BigradedSlot slot;
  slot.p = p;
  slot.q = q;
  slot.n_space = n_space_subspace(v, m, p, q);
  Subspace next = n_space_subspace(v, m, p + 1, q - 1);
  slot.quotient_dim = quotient_dim(slot.n_space, next);
  return slot;
}

CochainComplex induced_complex(const Subalgebra& v, const Representation& m, int p) {
  require_over_parent(v, m, "induced_complex");
  if (p < 0) throw PreconditionFailed("induced_complex: p must be nonnegative");
  const std::size_t n = v.parent().dim();
  const int top = static_cast<int>(v.dim());
  std::vector<Subquotient> slots;
  for (int q = 0; q <= top + 1; ++q) {
    Subspace num = n_space_subspace(v, m, p, q);
    Subspace den = n_space_subspace(v, m, p + 1, q - 1);
    if (!num.contains(den))
      throw InternalInvariant("induced_complex: N^{p+1,q-1} not inside N^{p,q} at (" + std::to_string(p) + "," +
                              std::to_string(q) + ")");
    slots.emplace_back(std::move(num), std::move(den));
  }
  CochainComplex c;
  c.provenance = "induced(p=" + std::to_string(p) + ", v=" + v.label() + "; " + m.label() + ")";
  for (int q = 0; q <= top; ++q) c.dims.push_back(slots[q].dim());
  for (int q = 0; q < top; ++q) {
    const int deg = p + q;
    const std::size_t rows = cochain_dim(n, m.dim(), deg + 1);
    const std::size_t cols = cochain_dim(n, m.dim(), deg);
    Matrix d = (rows > 0 && cols > 0) ? ce_differential(m, deg) : Matrix(rows, cols);
    if (!slots[q + 1].denominator().contains(image(d, slots[q].denominator())))
      throw InternalInvariant("induced_complex: d does not preserve N^{p+1,*} at q=" + std::to_string(q));
    c.differentials.push_back(induced_map(d, slots[q], slots[q + 1]));
  }
  if (find_nonzero_square(c)) throw InternalInvariant("induced_complex: d' o d' != 0");
  return c;
}

CochainComplex relative_complex(const Subalgebra& v, const Representation& m) {
  require_over_parent(v, m, "relative_complex");
  const std::size_t n = v.parent().dim();
  std::vector<Subquotient> basic;
  for (std::size_t deg = 0; deg <= n; ++deg) {
    Subspace s = n_space_subspace(v, m, static_cast<int>(deg), 0);
    for (std::size_t y = 0; y < v.dim() && !s.empty(); ++y) {
      Matrix l = lie_derivative_matrix(m, v.space().basis().row(y), deg);
      s = preimage(l, s, Subspace::zero(l.rows()));
    }
    const std::size_t ambient = s.ambient_dim();
    basic.emplace_back(std::move(s), Subspace::zero(ambient));
  }
  CochainComplex c;
  c.provenance = "relative(v=" + v.label() + "; " + m.label() + ")";
  for (const auto& b : basic) c.dims.push_back(b.dim());
  for (std::size_t deg = 0; deg < n; ++deg)
    c.differentials.push_back(induced_map(ce_differential(m, static_cast<int>(deg)), basic[deg], basic[deg + 1]));
  return c;
}

HsIsomorphismReport hs_isomorphism_check(const Subalgebra& v, const Representation& m, int p) {
  HsIsomorphismReport r;
  r.p = p;
  r.lhs = cohomology_dims(induced_complex(v, m, p));
  if (p < 0 || static_cast<std::size_t>(p) > v.codim()) {
    r.rhs.assign(v.dim() + 1, 0);
  } else {
    Representation coeffs = forms_module(quotient_module(v), p, restrict_module(m, v));
    r.rhs = cohomology_dims(ce_complex(coeffs));
  }
  r.pass = r.lhs == r.rhs;
  return r;
}

}  // namespace liecoh
