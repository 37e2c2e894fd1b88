#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecoh/io.hpp"
#include "liecoh/proptest.hpp"
#include "liecoh/theorem.hpp"

namespace liecoh {

/// One report: a JSON document, the same numbers as an aligned text block,
/// and the overall verdict.
struct Report {
  Json json;
  std::string text;
  bool pass = true;
};

/// Left-aligned columns separated by two spaces.
std::string format_table(const std::vector<std::vector<std::string>>& rows);

Report check_report(const LieAlgebra& g, const std::optional<Subspace>& sub = std::nullopt);
Report classify_report(const Subalgebra& v);

struct CohomologyOptions {
  int p_min = 0;
  std::optional<int> p_max;  // default codim v
  std::optional<int> q_max;  // default dim v
  bool dump_matrices = false;
};
/// Bigraded H^{p,q}_v(g; M) with the H^q(v; C^p(g/v; M)) comparison.
Report cohomology_report(const Subalgebra& v, const Representation& m, const CohomologyOptions& opts = {});
/// Plain CE cohomology H^q(g; M).
Report simple_cohomology_report(const Representation& m, bool dump_matrices = false);
/// Basic (v-relative) cohomology H^q(g, v; M).
Report relative_report(const Subalgebra& v, const Representation& m, bool dump_matrices = false);

struct SpectralOptions {
  std::vector<int> e2_p;  // E_2 comparisons; needs an elliptic v with real structure
  std::optional<std::size_t> max_page;
  bool dump_matrices = false;
};
Report spectral_report(const Subalgebra& v, const Representation& m, const SpectralOptions& opts = {});

Report theorem_report(const TheoremReport& t);

Report proptest_report(std::uint64_t seed, std::size_t cases);

struct FullReportOptions {
  int p_max = 2;
  std::optional<int> q_max;
  std::optional<std::size_t> max_page;
};
/// Classification, bigraded table, spectral pages with E_2 checks and the
/// theorem cross-check; stage errors are recorded, not thrown.
Report full_report(const Subalgebra& v, const FullReportOptions& opts = {});

}  // namespace liecoh
