#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liecoh/ce_complex.hpp"
#include "liecoh/root_system.hpp"

namespace liecoh {

using Bidegree = std::pair<int, int>;  // (p, q), total degree p + q

/// A cochain complex with a descending filtration per degree:
/// filtration[n][p] = F^p C^n for p = 0..n+1, F^0 = C^n, F^{n+1} = 0.
class FilteredComplex {
 public:
  /// Validates the flag and D(F^p C^n) in F^p C^{n+1}; throws InternalInvariant.
  FilteredComplex(CochainComplex complex, std::vector<std::vector<Subspace>> filtration);

  const CochainComplex& complex() const { return complex_; }
  std::size_t top_degree() const { return complex_.dims.size() - 1; }
  /// F^p C^n with F^p = C^n for p <= 0 and 0 beyond the stored flag.
  const Subspace& level(int p, std::size_t n) const;
  /// Number of subspaces stored for degree n (n + 2).
  std::size_t flag_length(std::size_t n) const { return filtration_[n].size(); }
  /// Largest p with F^p C^n != 0 for some n.
  int max_level() const;

 private:
  CochainComplex complex_;
  std::vector<std::vector<Subspace>> filtration_;
  std::vector<Subspace> zeros_;
};

/// F^p C^n = N^{p, n-p}_v(g; M) on the CE complex of m.
FilteredComplex hs_filtration(const Subalgebra& v, const Representation& m);

struct PageSlot {
  int p = 0;
  int q = 0;
  Subquotient space;
};

/// One page E_r with its differential d_r : E_r^{p,q} -> E_r^{p+r, q-r+1}.
struct SpectralPage {
  int r = 0;
  std::vector<PageSlot> slots;       // ordered by total degree, then p
  std::map<Bidegree, Matrix> d;      // keyed by source bidegree; only in-range targets
  std::size_t dim(int p, int q) const;
  std::map<Bidegree, std::size_t> dims() const;
  bool differential_zero() const;
};

/// E_r^{p,q} = Z_r^{p,q} / (Z_{r-1}^{p+1,q-1} + D Z_{r-1}^{p-r+1,q+r-2}),
/// Z_r^{p,q} = F^p C^{p+q} cap D^{-1}(F^{p+r} C^{p+q+1}). Throws CapExceeded past max_page.
SpectralPage compute_page(const FilteredComplex& f, int r, std::optional<std::size_t> max_page = std::nullopt);

struct SpectralSequence {
  std::vector<SpectralPage> pages;  // E_0 .. E_{L+1}, L = max filtration level
  int stable_at = 0;                // least r with d_s = 0 for all s >= r
  std::vector<std::size_t> total_cohomology;
  std::vector<std::size_t> einf_sums;  // sum over p + q = n of dim E_inf^{p,q}
  bool converges = false;
  bool monotone = false;
  bool squares_zero = false;      // d_r o d_r = 0 on every page
  bool next_page_is_homology = false;
  const SpectralPage& limit() const { return pages.back(); }
};

/// Runs pages until the bidegree bound forces every later d_r to vanish.
/// Default cap: total degree + 2 pages.
SpectralSequence run_spectral_sequence(const FilteredComplex& f, std::optional<std::size_t> max_page = std::nullopt);
SpectralPage limit_page(const FilteredComplex& f);

struct E2Report {
  int p = 0;
  std::size_t dim_k = 0;
  std::vector<std::size_t> h_k;    // H^b(k; C)
  std::vector<std::size_t> h_rel;  // H^a(v, k; C^p(g/v))
  std::map<Bidegree, std::size_t> direct;   // E_2^{a,b}, a = filtration degree
  std::map<Bidegree, std::size_t> tensor;   // h_rel[a] * h_k[b]
  std::map<Bidegree, std::size_t> literal;  // h_k[a] + h_rel[b]
  bool pass = false;
  bool literal_matches = false;
};

/// E_2 of C^*(v; C^p(g/v)) under the k-filtration, k = v cap conj v, against
/// both readings of the E_2 formula. v must be elliptic.
E2Report hs_e2_check(const Subalgebra& v, int p);

/// Smallest subspace containing `start` and stable under ad of `acting`.
Subspace invariant_closure(const LieAlgebra& g, const Subspace& acting, Subspace start);
bool is_invariant(const LieAlgebra& g, const Subspace& acting, const Subspace& s);

struct ReducibilityReport {
  Subspace complement;  // orthogonal complement of the submodule inside v
  bool complement_invariant = false;
  bool direct_sum = false;
  bool hermitian_identity = false;
  std::optional<std::array<std::size_t, 3>> identity_witness;
  bool pass() const { return complement_invariant && direct_sum && hermitian_identity; }
};

/// Throws PreconditionFailed unless submodule is inside v and k-invariant.
ReducibilityReport reducibility_check(const Subalgebra& v, const Subspace& submodule, const HermitianProduct& h);
ReducibilityReport reducibility_check(const Subalgebra& v, const Subspace& submodule);

}  // namespace liecoh
