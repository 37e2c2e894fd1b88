#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecoh/spectral.hpp"

namespace liecoh {

/// Resource caps. max_dim defaults to 12 and LIE_COH_MAX_DIM overrides it;
/// max_page unset means total degree + 2.
struct Limits {
  std::size_t max_dim = 12;
  std::optional<std::size_t> max_page;

  static Limits from_env();
  /// Throws CapExceeded naming the cap.
  void enforce(const LieAlgebra& g) const;
};

struct TheoremSlot {
  int p = 0;
  int q = 0;
  std::size_t lhs = 0;  // dim H^{p,q}_v(g; C)
  std::size_t rhs = 0;  // sum_{r+s=q} dim H^r(v,k; Lambda^p(g/v)^*) dim H^s(k)
  std::size_t rhs_forms_dual = 0;  // same with the dual of C^p(g/v) as coefficients
  bool pass = false;
};

struct TheoremReport {
  std::string algebra;
  std::string subalgebra;
  StructureClass structure;
  std::size_t dim_k = 0;
  std::vector<std::size_t> h_k;
  std::vector<std::vector<std::size_t>> h_rel;  // per p
  std::vector<TheoremSlot> slots;
  bool pass = false;
};

/// Kunneth convolution c[q] = sum_{r+s=q} a[r] b[s] for q = 0..length-1.
std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                                  std::size_t length);

/// Killing form nondegenerate.
bool is_semisimple(const LieAlgebra& g);

/// Slots p = 0..p_max, q = 0..q_max (default dim v). Throws PreconditionFailed
/// unless g is semisimple with a real structure and v is elliptic.
TheoremReport theorem1_crosscheck(const Subalgebra& v, int p_max, std::optional<int> q_max = std::nullopt);

}  // namespace liecoh
