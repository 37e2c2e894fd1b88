#include "liecoh/spectral.hpp"

#include <algorithm>
#include <tuple>

#include "liecoh/error.hpp"

namespace liecoh {

FilteredComplex::FilteredComplex(CochainComplex complex, std::vector<std::vector<Subspace>> filtration)
    : complex_(std::move(complex)), filtration_(std::move(filtration)) {
  const std::size_t top = complex_.dims.size();
  if (filtration_.size() != top) throw DimensionMismatch("FilteredComplex: one flag per degree required");
  for (std::size_t n = 0; n < top; ++n) {
    const auto& flag = filtration_[n];
    if (flag.size() != n + 2) throw DimensionMismatch("FilteredComplex: flag of degree n must hold n+2 subspaces");
    zeros_.push_back(Subspace::zero(complex_.dims[n]));
    if (flag.front() != Subspace::full(complex_.dims[n]))
      throw InternalInvariant("FilteredComplex: F^0 C^" + std::to_string(n) + " is not the whole space");
    if (!flag.back().empty()) throw InternalInvariant("FilteredComplex: F^{n+1} C^" + std::to_string(n) + " is nonzero");
    for (std::size_t p = 0; p + 1 < flag.size(); ++p)
      if (!flag[p].contains(flag[p + 1]))
        throw InternalInvariant("FilteredComplex: flag not descending at (" + std::to_string(p) + "," +
                                std::to_string(n) + ")");
  }
  for (std::size_t n = 0; n + 1 < top; ++n)
    for (std::size_t p = 0; p < filtration_[n].size(); ++p)
      if (!level(static_cast<int>(p), n + 1).contains(image(complex_.differentials[n], filtration_[n][p])))
        throw InternalInvariant("FilteredComplex: D does not preserve F^" + std::to_string(p) + " in degree " +
                                std::to_string(n));
}

const Subspace& FilteredComplex::level(int p, std::size_t n) const {
  const auto& flag = filtration_.at(n);
  if (p <= 0) return flag.front();
  if (static_cast<std::size_t>(p) >= flag.size()) return zeros_[n];
  return flag[static_cast<std::size_t>(p)];
}

int FilteredComplex::max_level() const {
  int best = 0;
  for (std::size_t n = 0; n < filtration_.size(); ++n)
    for (std::size_t p = 0; p < filtration_[n].size(); ++p)
      if (!filtration_[n][p].empty()) best = std::max(best, static_cast<int>(p));
  return best;
}

FilteredComplex hs_filtration(const Subalgebra& v, const Representation& m) {
  CochainComplex c = ce_complex(m);
  std::vector<std::vector<Subspace>> flags;
  for (std::size_t n = 0; n < c.dims.size(); ++n) {
    std::vector<Subspace> flag;
    for (std::size_t p = 0; p <= n + 1; ++p)
      flag.push_back(n_space_subspace(v, m, static_cast<int>(p), static_cast<int>(n) - static_cast<int>(p)));
    flags.push_back(std::move(flag));
  }
  c.provenance = "HS(" + v.label() + ") on " + c.provenance;
  return FilteredComplex(std::move(c), std::move(flags));
}

std::size_t SpectralPage::dim(int p, int q) const {
  for (const auto& s : slots)
    if (s.p == p && s.q == q) return s.space.dim();
  return 0;
}

std::map<Bidegree, std::size_t> SpectralPage::dims() const {
  std::map<Bidegree, std::size_t> out;
  for (const auto& s : slots) out[{s.p, s.q}] = s.space.dim();
  return out;
}

bool SpectralPage::differential_zero() const {
  return std::all_of(d.begin(), d.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

namespace {

class PageBuilder {
 public:
  explicit PageBuilder(const FilteredComplex& f) : f_(f) {}

  // Z_r^{p} in degree n; r = -1 gives F^p.
  const Subspace& z(int r, int p, std::size_t n) {
    auto key = std::make_tuple(r, p, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const Subspace& fp = f_.level(p, n);
    Subspace out;
    if (r < 0 || n == f_.top_degree() || fp.empty())
      out = fp;
    else
      out = preimage(f_.complex().differentials[n], fp, f_.level(p + r, n + 1));
    return memo_.emplace(key, std::move(out)).first->second;
  }

  Subquotient slot(int r, int p, std::size_t n) {
    const Subspace& num = z(r, p, n);
    Subspace den = z(r - 1, p + 1, n);
    if (n > 0) {
      Subspace boundary = image(f_.complex().differentials[n - 1], z(r - 1, p - r + 1, n - 1));
      den = subspace_sum(den, boundary);
    }
    if (!num.contains(den))
      throw InternalInvariant("compute_page: boundary part leaves Z at (" + std::to_string(p) + "," +
                              std::to_string(n) + ")");
    return Subquotient(num, std::move(den));
  }

 private:
  const FilteredComplex& f_;
  std::map<std::tuple<int, int, std::size_t>, Subspace> memo_;
};

std::size_t default_page_cap(const FilteredComplex& f) { return f.top_degree() + 2; }

}  // namespace

SpectralPage compute_page(const FilteredComplex& f, int r, std::optional<std::size_t> max_page) {
  if (r < 0) throw PreconditionFailed("compute_page: page index must be nonnegative");
  std::size_t cap = max_page.value_or(default_page_cap(f));
  if (static_cast<std::size_t>(r) > cap)
    throw CapExceeded("compute_page: page " + std::to_string(r) + " exceeds max_page = " + std::to_string(cap));
  PageBuilder builder(f);
  SpectralPage page;
  page.r = r;
  std::map<Bidegree, std::size_t> where;
  for (std::size_t n = 0; n <= f.top_degree(); ++n)
    for (int p = 0; p <= static_cast<int>(n); ++p) {
      where[{p, static_cast<int>(n) - p}] = page.slots.size();
      page.slots.push_back(PageSlot{p, static_cast<int>(n) - p, builder.slot(r, p, n)});
    }
  for (const auto& s : page.slots) {
    const std::size_t n = static_cast<std::size_t>(s.p + s.q);
    if (n >= f.top_degree()) continue;
    auto it = where.find({s.p + r, s.q - r + 1});
    if (it == where.end()) continue;
    const auto& target = page.slots[it->second];
    page.d[{s.p, s.q}] = induced_map(f.complex().differentials[n], s.space, target.space);
  }
  return page;
}

SpectralSequence run_spectral_sequence(const FilteredComplex& f, std::optional<std::size_t> max_page) {
  SpectralSequence ss;
  const int last = f.max_level() + 1;
  std::size_t cap = max_page.value_or(default_page_cap(f));
  if (static_cast<std::size_t>(last) > cap)
    throw CapExceeded("spectral sequence needs page " + std::to_string(last) + " but max_page = " +
                      std::to_string(cap));
  for (int r = 0; r <= last; ++r) ss.pages.push_back(compute_page(f, r, cap));

  ss.stable_at = 0;
  for (const auto& page : ss.pages)
    if (!page.differential_zero()) ss.stable_at = page.r + 1;

  ss.monotone = true;
  ss.squares_zero = true;
  ss.next_page_is_homology = true;
  for (std::size_t k = 0; k < ss.pages.size(); ++k) {
    const auto& page = ss.pages[k];
    for (const auto& [src, d] : page.d) {
      auto next = page.d.find({src.first + page.r, src.second - page.r + 1});
      if (next != page.d.end() && !(next->second * d).is_zero()) ss.squares_zero = false;
    }
    if (k + 1 == ss.pages.size()) break;
    const auto& following = ss.pages[k + 1];
    for (const auto& s : page.slots) {
      std::size_t out_rank = 0, in_rank = 0;
      if (auto it = page.d.find({s.p, s.q}); it != page.d.end()) out_rank = rank(it->second);
      if (auto it = page.d.find({s.p - page.r, s.q + page.r - 1}); it != page.d.end()) in_rank = rank(it->second);
      std::size_t homology = s.space.dim() - out_rank - in_rank;
      std::size_t next_dim = following.dim(s.p, s.q);
      if (next_dim != homology) ss.next_page_is_homology = false;
      if (next_dim > s.space.dim()) ss.monotone = false;
    }
  }

  ss.total_cohomology = cohomology_dims(f.complex());
  ss.einf_sums.assign(f.top_degree() + 1, 0);
  for (const auto& s : ss.limit().slots) ss.einf_sums[static_cast<std::size_t>(s.p + s.q)] += s.space.dim();
  ss.converges = ss.einf_sums == ss.total_cohomology;
  return ss;
}

SpectralPage limit_page(const FilteredComplex& f) { return run_spectral_sequence(f).limit(); }

E2Report hs_e2_check(const Subalgebra& v, int p) {
  const LieAlgebra& g = v.parent();
  if (!g.has_real_structure()) throw PreconditionFailed("hs_e2_check: algebra has no real structure");
  if (!classify_structure(g, v).elliptic) throw PreconditionFailed("hs_e2_check: subalgebra is not elliptic");
  Subalgebra k = v.inner(real_part(v));
  E2Report rep;
  rep.p = p;
  rep.dim_k = k.dim();
  rep.h_k = cohomology_dims(ce_complex(trivial_module(k.algebra_ptr())));
  const bool empty = p < 0 || static_cast<std::size_t>(p) > v.codim();
  if (empty) {
    rep.h_rel.assign(v.dim() + 1, 0);
  } else {
    Representation coeffs = forms_module(quotient_module(v), p, trivial_module(v.algebra_ptr()));
    rep.h_rel = cohomology_dims(relative_complex(k, coeffs));
    FilteredComplex f = hs_filtration(k, coeffs);
    SpectralPage e2 = compute_page(f, 2, std::max<std::size_t>(2, f.top_degree() + 2));
    rep.direct = e2.dims();
  }
  for (std::size_t a = 0; a <= v.dim(); ++a)
    for (std::size_t b = 0; a + b <= v.dim(); ++b) {
      Bidegree key{static_cast<int>(a), static_cast<int>(b)};
      std::size_t hk_b = b < rep.h_k.size() ? rep.h_k[b] : 0;
      std::size_t hk_a = a < rep.h_k.size() ? rep.h_k[a] : 0;
      std::size_t rel_a = a < rep.h_rel.size() ? rep.h_rel[a] : 0;
      std::size_t rel_b = b < rep.h_rel.size() ? rep.h_rel[b] : 0;
      rep.tensor[key] = rel_a * hk_b;
      rep.literal[key] = hk_a + rel_b;
      if (empty) rep.direct[key] = 0;
    }
  rep.pass = rep.direct == rep.tensor;
  rep.literal_matches = rep.direct == rep.literal;
  return rep;
}

bool is_invariant(const LieAlgebra& g, const Subspace& acting, const Subspace& s) {
  for (std::size_t a = 0; a < acting.dim(); ++a)
    for (std::size_t b = 0; b < s.dim(); ++b)
      if (!s.contains(g.bracket(acting.basis().row(a), s.basis().row(b)))) return false;
  return true;
}

Subspace invariant_closure(const LieAlgebra& g, const Subspace& acting, Subspace start) {
  while (true) {
    std::vector<Vector> vecs = start.vectors();
    for (std::size_t a = 0; a < acting.dim(); ++a)
      for (std::size_t b = 0; b < start.dim(); ++b) vecs.push_back(g.bracket(acting.basis().row(a), start.basis().row(b)));
    Subspace next = Subspace::span(g.dim(), vecs);
    if (next.dim() == start.dim()) return next;
    start = std::move(next);
  }
}

ReducibilityReport reducibility_check(const Subalgebra& v, const Subspace& submodule, const HermitianProduct& h) {
  const LieAlgebra& g = v.parent();
  if (!v.space().contains(submodule)) throw PreconditionFailed("reducibility_check: submodule is not inside v");
  Subalgebra k = real_part(v);
  if (!is_invariant(g, k.space(), submodule))
    throw PreconditionFailed("reducibility_check: submodule is not k-invariant");
  ReducibilityReport rep;
  // y = sum c_t v_t with <w, y> = 0, i.e. sum_t c_t conj(<w, v_t>) = 0 for all w
  const Matrix& vb = v.space().basis();
  Matrix cond(submodule.dim(), v.dim());
  for (std::size_t w = 0; w < submodule.dim(); ++w)
    for (std::size_t t = 0; t < v.dim(); ++t) cond(w, t) = h(submodule.basis().row(w), vb.row(t)).conj();
  Subspace coeffs = kernel(cond);
  std::vector<Vector> comp;
  for (std::size_t c = 0; c < coeffs.dim(); ++c) comp.push_back(v.space().combine(coeffs.basis().row(c)));
  rep.complement = Subspace::span(g.dim(), comp);
  rep.complement_invariant = is_invariant(g, k.space(), rep.complement);
  rep.direct_sum = subspace_intersect(rep.complement, submodule).empty() &&
                   rep.complement.dim() + submodule.dim() == v.dim();
  auto identity = check_hermitian_identity(g, h);
  rep.hermitian_identity = identity.pass;
  rep.identity_witness = identity.witness;
  return rep;
}

ReducibilityReport reducibility_check(const Subalgebra& v, const Subspace& submodule) {
  return reducibility_check(v, submodule, hermitian_extension(v.parent()));
}

}  // namespace liecoh
