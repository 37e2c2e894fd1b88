// Acceptance run: one PASS/FAIL line per criterion, details indented above it.
// All comparisons are exact; time budgets are wall-clock upper bounds.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "liecoh/error.hpp"
#include "liecoh/subsets.hpp"
#include "liecoh/report.hpp"

using namespace liecoh;

namespace {

using Clock = std::chrono::steady_clock;

std::string list(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

struct Outcome {
  bool pass = true;
  std::string summary;
};

struct Case {
  std::string preset;
  std::vector<std::size_t> parabolic;  // empty: Borel
  bool whole = false;

  Subalgebra build(const SemisimpleAlgebra& s) const {
    if (whole) return Subalgebra::whole(s.algebra);
    return parabolic.empty() ? borel(s) : liecoh::parabolic(s, parabolic);
  }
  std::string name() const {
    std::string v = whole ? "g" : parabolic.empty() ? "borel" : "parabolic{" + std::to_string(parabolic[0]) + "}";
    return preset + "/" + v;
  }
};

int failures = 0;

void criterion(int n, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.summary = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  bool in_budget = secs <= budget_s;
  bool pass = o.pass && in_budget;
  if (!pass) ++failures;
  std::ostringstream t;
  t.setf(std::ios::fixed);
  t.precision(2);
  t << secs << " s of " << budget_s << " s";
  std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << "  " << title << "  [" << o.summary << "; "
            << t.str() << (in_budget ? "" : ", OVER BUDGET") << "]" << std::endl;
}

void detail(const std::string& s) { std::cout << "    " << s << "\n"; }

const std::vector<Case> kHsCases{{"A1", {}, false}, {"A1", {1}, false}, {"A2", {}, false}, {"A2", {1}, false}};

}  // namespace

int main() {
  criterion(1, "property suite (>=100 cases per property)", 120, [] {
    Outcome o;
    std::size_t total = 0;
    for (const auto& r : run_property_suite(20240601, 100)) {
      detail(r.name + ": " + std::to_string(r.cases) + " cases, " + std::to_string(r.failures) + " failures" +
             (r.first_failure.empty() ? "" : " (" + r.first_failure + ")"));
      o.pass = o.pass && r.pass() && r.cases >= 100;
      total += r.cases;
    }
    o.summary = std::to_string(total) + " cases";
    return o;
  });

  criterion(2, "CE golden Betti numbers (abelian n<=6, A1, A2)", 60, [] {
    Outcome o;
    for (std::size_t n = 1; n <= 6; ++n) {
      auto h = cohomology_dims(ce_complex(trivial_module(std::make_shared<LieAlgebra>(LieAlgebra::abelian(n)))));
      std::vector<std::size_t> expect;
      for (std::size_t q = 0; q <= n; ++q) expect.push_back(binomial(n, q));
      if (h != expect) {
        o.pass = false;
        detail("abelian " + std::to_string(n) + ": " + list(h) + " expected " + list(expect));
      }
    }
    detail("abelian n=1..6: binomial rows " + std::string(o.pass ? "match" : "MISMATCH"));
    auto a1 = cohomology_dims(ce_complex(trivial_module(build_preset("A1").algebra)));
    auto a2 = cohomology_dims(ce_complex(trivial_module(build_preset("A2").algebra)));
    // Poincare polynomial (1+t^3)(1+t^5) of SU(3)
    std::vector<std::size_t> sl3 = convolve({1, 0, 0, 1}, {1, 0, 0, 0, 0, 1}, 9);
    detail("A1: " + list(a1) + "  A2: " + list(a2) + "  (1+t^3)(1+t^5): " + list(sl3));
    o.pass = o.pass && a1 == std::vector<std::size_t>{1, 0, 0, 1} &&
             a2 == std::vector<std::size_t>{1, 0, 0, 1, 0, 1, 0, 0, 1} && a2 == sl3;
    o.summary = "A2 " + list(a2);
    return o;
  });

  criterion(3, "HS isomorphism H^{p,q}_v(g) = H^q(v; C^p(g/v)), p in {0,1,2}", 120, [] {
    Outcome o;
    std::size_t slots = 0;
    for (const auto& c : kHsCases) {
      auto s = build_preset(c.preset);
      Subalgebra v = c.build(s);
      Representation t = trivial_module(s.algebra);
      for (int p = 0; p <= 2; ++p) {
        auto r = hs_isomorphism_check(v, t, p);
        detail(c.name() + " p=" + std::to_string(p) + ": lhs " + list(r.lhs) + " rhs " + list(r.rhs) +
               (r.pass ? "" : "  MISMATCH"));
        o.pass = o.pass && r.pass;
        slots += r.lhs.size();
      }
    }
    o.summary = std::to_string(slots) + " (p,q) slots";
    return o;
  });

  criterion(4, "HS spectral sequence converges to H^*(g), pages monotone", 120, [] {
    Outcome o;
    for (const auto& c : kHsCases) {
      auto s = build_preset(c.preset);
      SpectralSequence ss = run_spectral_sequence(hs_filtration(c.build(s), trivial_module(s.algebra)));
      detail(c.name() + ": sum E_inf " + list(ss.einf_sums) + " dim H " + list(ss.total_cohomology) + ", stable at " +
             std::to_string(ss.stable_at) + ", monotone " + (ss.monotone ? "yes" : "NO"));
      o.pass = o.pass && ss.converges && ss.monotone && ss.einf_sums == ss.total_cohomology;
    }
    o.summary = std::to_string(kHsCases.size()) + " filtrations";
    return o;
  });

  criterion(5, "E_2 = H(v,k;C^p(g/v)) tensor H(k) (A1, A2 Borel, p in {0,1})", 120, [] {
    Outcome o;
    bool literal_any = false;
    for (const auto& name : {"A1", "A2"}) {
      auto s = build_preset(name);
      for (int p : {0, 1}) {
        E2Report r = hs_e2_check(borel(s), p);
        std::string direct, tensor, literal;
        for (const auto& [bd, d] : r.direct) {
          std::string key = "(" + std::to_string(bd.first) + "," + std::to_string(bd.second) + ")";
          direct += key + "=" + std::to_string(d) + " ";
          tensor += key + "=" + std::to_string(r.tensor.count(bd) ? r.tensor.at(bd) : 0) + " ";
          literal += key + "=" + std::to_string(r.literal.count(bd) ? r.literal.at(bd) : 0) + " ";
        }
        detail(std::string(name) + "/borel p=" + std::to_string(p) + " direct:  " + direct);
        detail(std::string(name) + "/borel p=" + std::to_string(p) + " tensor:  " + tensor);
        detail(std::string(name) + "/borel p=" + std::to_string(p) + " literal: " + literal +
               (r.literal_matches ? "(matches)" : "(does not match)"));
        o.pass = o.pass && r.pass;
        literal_any = literal_any || r.literal_matches;
      }
    }
    o.summary = std::string(o.pass ? "tensor reading matches" : "tensor reading MISMATCH") + "; literal reading " + (literal_any ? "matches somewhere" : "never matches");
    return o;
  });

  criterion(6, "Hermitian identity, k-invariant complements, ad-invariance failure", 120, [] {
    Outcome o;
    for (const auto& name : {"A1", "A2"}) {
      auto s = build_preset(name);
      const LieAlgebra& g = *s.algebra;
      HermitianProduct h = hermitian_extension(g);
      auto id = check_hermitian_identity(g, h);
      std::size_t n = g.dim();
      detail(std::string(name) + ": <[X,Y],Z> = -<Y,[sX,Z]> on " + std::to_string(n * n * n) + " basis triples: " +
             (id.pass ? "holds" : "FAILS"));
      o.pass = o.pass && id.pass && is_positive_definite(h.gram);
      auto w = ad_invariance_failure(g, h);
      if (!w) {
        o.pass = false;
        detail(std::string(name) + ": no ad-invariance failure found");
      } else {
        auto [i, j, k] = *w;
        const auto& nm = g.basis_names();
        Vector x = g.basis_vector(i), y = g.basis_vector(j), z = g.basis_vector(k);
        Scalar lhs = h(g.bracket(x, y), z) + h(y, g.bracket(x, z));
        detail(std::string(name) + ": <[" + nm[i] + "," + nm[j] + "]," + nm[k] + "> + <" + nm[j] + ",[" + nm[i] + "," +
               nm[k] + "]> = " + lhs.str() + " != 0");
        o.pass = o.pass && !lhs.is_zero();
      }
    }
    PropertyResult red = reducibility_property(77, 60, {"A1", "A2"});
    detail("random k-invariant submodules of the Borel: " + std::to_string(red.cases) + " cases, " +
           std::to_string(red.failures) + " failures" + (red.first_failure.empty() ? "" : " (" + red.first_failure + ")"));
    o.pass = o.pass && red.pass() && red.cases >= 50;
    o.summary = std::to_string(red.cases) + " complement cases";
    return o;
  });

  criterion(7, "Theorem 1 dimension identity, p<=2, q<=dim v", 600, [] {
    Outcome o;
    std::size_t slots = 0;
    const std::vector<Case> cases{{"A1", {}, false}, {"A2", {}, false}, {"A2", {1}, false}, {"A1", {}, true}, {"A2", {}, true}};
    for (const auto& c : cases) {
      auto s = build_preset(c.preset);
      TheoremReport r = theorem1_crosscheck(c.build(s), 2);
      std::vector<std::size_t> lhs, rhs;
      for (const auto& slot : r.slots) {
        lhs.push_back(slot.lhs);
        rhs.push_back(slot.rhs);
      }
      detail(c.name() + ": lhs " + list(lhs) + " rhs " + list(rhs) + (r.pass ? "" : "  MISMATCH"));
      o.pass = o.pass && r.pass;
      slots += r.slots.size();
    }
    o.summary = std::to_string(slots) + " (p,q) slots";
    return o;
  });

  criterion(8, "byte-identical JSON on repeated runs", 300, [] {
    Outcome o;
    auto a1 = build_preset("A1");
    auto a2 = build_preset("A2");
    std::vector<std::function<std::string()>> runs{
        [&] { return dump_json(full_report(borel(a1)).json); },
        [&] {
          SpectralOptions so;
          so.e2_p = {0};
          return dump_json(spectral_report(borel(a2), trivial_module(a2.algebra), so).json);
        },
        [&] { return dump_json(theorem_report(theorem1_crosscheck(parabolic(a2, {1}), 1)).json); },
        [] { return dump_json(proptest_report(5, 100).json); },
    };
    std::size_t bytes = 0;
    for (const auto& run : runs) {
      std::string first = run(), second = run();
      o.pass = o.pass && first == second;
      bytes += first.size();
    }
    o.summary = std::to_string(runs.size()) + " reports, " + std::to_string(bytes) + " bytes compared";
    return o;
  });

  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
