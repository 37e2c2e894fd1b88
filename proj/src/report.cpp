#include "liecoh/report.hpp"

#include <algorithm>
#include <sstream>

#include "liecoh/error.hpp"
#include "liecoh/format.hpp"

namespace liecoh {

namespace {

std::string key(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

std::string yes_no(bool b) { return b ? "pass" : "FAIL"; }

Json names_of(const LieAlgebra& g, std::initializer_list<std::size_t> idx) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(g.basis_names()[i]);
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

Json differentials_json(const CochainComplex& c) {
  Json out = Json::array();
  for (const auto& d : c.differentials) out.push_back(matrix_to_json(d));
  return out;
}

int default_q_max(const Subalgebra& v) { return static_cast<int>(v.dim()); }

}  // namespace

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

Report check_report(const LieAlgebra& g, const std::optional<Subspace>& sub) {
  Report r;
  r.json["kind"] = "check";
  r.json["algebra"] = g.label();
  r.json["dim"] = g.dim();
  std::vector<std::vector<std::string>> rows{{"check", "verdict", "witness"}};

  auto anti = check_antisymmetry(g);
  Json a{{"pass", anti.pass}};
  if (anti.witness) a["witness"] = names_of(g, {(*anti.witness)[0], (*anti.witness)[1]});
  r.json["antisymmetry"] = a;
  rows.push_back({"antisymmetry", yes_no(anti.pass), anti.witness ? a["witness"].dump() : "-"});

  auto jac = check_jacobi(g);
  Json j{{"pass", jac.pass}};
  if (jac.witness) j["witness"] = names_of(g, {(*jac.witness)[0], (*jac.witness)[1], (*jac.witness)[2]});
  r.json["jacobi"] = j;
  rows.push_back({"jacobi", yes_no(jac.pass), jac.witness ? j["witness"].dump() : "-"});
  r.pass = anti.pass && jac.pass;

  if (g.has_real_structure()) {
    auto rs = check_real_structure(g);
    Json s{{"pass", rs.pass()}, {"involutive", rs.involutive}, {"bracket_compatible", rs.bracket_compatible}};
    std::string w = "-";
    if (rs.involution_witness) {
      s["witness"] = names_of(g, {*rs.involution_witness});
      w = s["witness"].dump();
    } else if (rs.bracket_witness) {
      s["witness"] = names_of(g, {(*rs.bracket_witness)[0], (*rs.bracket_witness)[1]});
      w = s["witness"].dump();
    }
    r.json["real_structure"] = s;
    rows.push_back({"real structure", yes_no(rs.pass()), w});
    r.pass = r.pass && rs.pass();
  } else {
    r.json["real_structure"] = nullptr;
    rows.push_back({"real structure", "absent", "-"});
  }

  if (sub) {
    auto closed = check_subalgebra(g, *sub);
    Json s{{"pass", closed.pass}, {"dim", sub->dim()}};
    std::string w = "-";
    if (closed.witness) {
      s["witness"] = {format_vector(g, sub->vector((*closed.witness)[0])),
                      format_vector(g, sub->vector((*closed.witness)[1]))};
      w = s["witness"].dump();
    }
    r.json["subalgebra"] = s;
    rows.push_back({"subalgebra closure", yes_no(closed.pass), w});
    r.pass = r.pass && closed.pass;
  }
  r.json["pass"] = r.pass;
  r.text = "check " + g.label() + " (dim " + std::to_string(g.dim()) + ")\n" + format_table(rows);
  return r;
}

Report classify_report(const Subalgebra& v) {
  const LieAlgebra& g = v.parent();
  if (!g.has_real_structure()) throw PreconditionFailed("classify: algebra has no real structure");
  StructureClass s = classify_structure(g, v);
  Report r;
  r.json = {{"kind", "classify"},
            {"algebra", g.label()},
            {"subalgebra", v.label()},
            {"dim_g", g.dim()},
            {"dim_v", v.dim()},
            {"elliptic", s.elliptic},
            {"complex", s.complex},
            {"essentially_real", s.essentially_real},
            {"dim_v_plus_conj", s.dim_sum},
            {"dim_k", s.dim_intersection},
            {"corank_real_part", s.corank_real_part}};
  r.text = "classify " + v.label() + " in " + g.label() + "\n" +
           format_table({{"dim g", std::to_string(g.dim())},
                         {"dim v", std::to_string(v.dim())},
                         {"dim (v + conj v)", std::to_string(s.dim_sum)},
                         {"dim k = v cap conj v", std::to_string(s.dim_intersection)},
                         {"elliptic", s.elliptic ? "yes" : "no"},
                         {"complex", s.complex ? "yes" : "no"},
                         {"essentially real", s.essentially_real ? "yes" : "no"}});
  return r;
}

Report cohomology_report(const Subalgebra& v, const Representation& m, const CohomologyOptions& opts) {
  const int p_max = opts.p_max.value_or(static_cast<int>(v.codim()));
  const int q_max = opts.q_max.value_or(default_q_max(v));
  Report r;
  Json dims = Json::object(), complex_dims = Json::array(), iso = Json::array(), mats = Json::object();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"p\\q"};
  for (int q = 0; q <= q_max; ++q) header.push_back(std::to_string(q));
  header.push_back("H^q(v;C^p(g/v))");
  header.push_back("verdict");
  rows.push_back(header);
  for (int p = opts.p_min; p <= p_max; ++p) {
    HsIsomorphismReport hs = hs_isomorphism_check(v, m, p);
    CochainComplex c = induced_complex(v, m, p);
    complex_dims.push_back(c.dims);
    if (opts.dump_matrices) mats[std::to_string(p)] = differentials_json(c);
    std::vector<std::string> row{std::to_string(p)};
    for (int q = 0; q <= q_max; ++q) {
      std::size_t d = static_cast<std::size_t>(q) < hs.lhs.size() ? hs.lhs[q] : 0;
      dims[key(p, q)] = d;
      row.push_back(std::to_string(d));
    }
    row.push_back(join(hs.rhs));
    row.push_back(yes_no(hs.pass));
    rows.push_back(row);
    iso.push_back({{"p", p}, {"lhs", hs.lhs}, {"rhs", hs.rhs}, {"pass", hs.pass}});
    r.pass = r.pass && hs.pass;
  }
  r.json = {{"kind", "cohomology"},
            {"grading", "bigraded"},
            {"dims", dims},
            {"complex_dims", complex_dims},
            {"hs_isomorphism", iso},
            {"provenance",
             {{"algebra", v.parent().label()},
              {"subalgebra", v.label()},
              {"module", m.label()},
              {"complex", "induced d' on N^{p,q}/N^{p+1,q-1}"}}},
            {"pass", r.pass}};
  if (opts.dump_matrices) r.json["differentials"] = mats;
  r.text = "H^{p,q}_v(g; " + m.label() + "), g = " + v.parent().label() + ", v = " + v.label() + "\n" +
           format_table(rows);
  return r;
}

namespace {

Report simple_like(const CochainComplex& c, const std::string& title, Json provenance, bool dump) {
  Report r;
  auto h = cohomology_dims(c);
  Json dims = Json::object();
  std::vector<std::vector<std::string>> rows{{"q", "dim C^q", "dim H^q"}};
  for (std::size_t q = 0; q < h.size(); ++q) {
    dims[std::to_string(q)] = h[q];
    rows.push_back({std::to_string(q), std::to_string(c.dims[q]), std::to_string(h[q])});
  }
  r.json = {{"kind", "cohomology"},
            {"grading", "simple"},
            {"dims", dims},
            {"complex_dims", c.dims},
            {"provenance", std::move(provenance)},
            {"pass", true}};
  if (dump) r.json["differentials"] = differentials_json(c);
  r.text = title + "\n" + format_table(rows);
  return r;
}

}  // namespace

Report simple_cohomology_report(const Representation& m, bool dump_matrices) {
  CochainComplex c = ce_complex(m);
  return simple_like(c, "H^q(" + m.algebra().label() + "; " + m.label() + ")",
                     {{"algebra", m.algebra().label()}, {"module", m.label()}, {"complex", "Chevalley-Eilenberg"}},
                     dump_matrices);
}

Report relative_report(const Subalgebra& v, const Representation& m, bool dump_matrices) {
  CochainComplex c = relative_complex(v, m);
  Report r = simple_like(c, "H^q(" + v.parent().label() + ", " + v.label() + "; " + m.label() + ") (basic cochains)",
                         {{"algebra", v.parent().label()},
                          {"subalgebra", v.label()},
                          {"module", m.label()},
                          {"complex", "basic cochains: i_Y u = 0 and L_Y u = 0 for Y in v"},
                          {"note", "the literal N^{0,q} definition equals C^q(g;M) and is not used"}},
                         dump_matrices);
  r.json["kind"] = "relative";
  return r;
}

Report spectral_report(const Subalgebra& v, const Representation& m, const SpectralOptions& opts) {
  FilteredComplex f = hs_filtration(v, m);
  SpectralSequence ss = run_spectral_sequence(f, opts.max_page);
  Report r;
  Json pages = Json::array();
  std::string text = "Hochschild-Serre spectral sequence, g = " + v.parent().label() + ", v = " + v.label() +
                     ", M = " + m.label() + "\n";
  for (const auto& page : ss.pages) {
    Json dims = Json::object(), ranks = Json::object();
    int max_p = 0, max_q = 0;
    for (const auto& slot : page.slots) {
      dims[key(slot.p, slot.q)] = slot.space.dim();
      max_p = std::max(max_p, slot.p);
      max_q = std::max(max_q, slot.q);
    }
    for (const auto& [bd, mat] : page.d) {
      std::size_t rk = rank(mat);
      if (rk > 0) ranks[key(bd.first, bd.second)] = rk;
    }
    Json pj{{"r", page.r}, {"dims", dims}, {"d_ranks", ranks}};
    if (opts.dump_matrices) {
      Json mats = Json::object();
      for (const auto& [bd, mat] : page.d) mats[key(bd.first, bd.second)] = matrix_to_json(mat);
      pj["differentials"] = mats;
    }
    pages.push_back(pj);
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"E_" + std::to_string(page.r) + " q\\p"};
    for (int p = 0; p <= max_p; ++p) header.push_back(std::to_string(p));
    rows.push_back(header);
    for (int q = max_q; q >= 0; --q) {
      std::vector<std::string> row{std::to_string(q)};
      for (int p = 0; p <= max_p; ++p) row.push_back(std::to_string(page.dim(p, q)));
      rows.push_back(row);
    }
    text += format_table(rows);
    text += "  nonzero d_" + std::to_string(page.r) + " ranks: " + (ranks.empty() ? "none" : ranks.dump()) + "\n";
  }
  Json einf = Json::object();
  std::vector<std::vector<std::string>> rows{{"n", "sum E_inf", "dim H^n"}};
  for (std::size_t n = 0; n < ss.einf_sums.size(); ++n) {
    einf[std::to_string(n)] = {ss.einf_sums[n], ss.total_cohomology[n]};
    rows.push_back({std::to_string(n), std::to_string(ss.einf_sums[n]), std::to_string(ss.total_cohomology[n])});
  }
  text += "stable at r = " + std::to_string(ss.stable_at) + "\n" + format_table(rows);
  text += "converges: " + yes_no(ss.converges) + ", pages monotone: " + yes_no(ss.monotone) +
          ", d_r^2 = 0: " + yes_no(ss.squares_zero) + ", E_{r+1} = H(E_r): " + yes_no(ss.next_page_is_homology) + "\n";
  r.pass = ss.converges && ss.monotone && ss.squares_zero && ss.next_page_is_homology;

  Json e2 = Json::array();
  for (int p : opts.e2_p) {
    E2Report rep = hs_e2_check(v, p);
    auto as_json = [](const std::map<Bidegree, std::size_t>& d) {
      Json o = Json::object();
      for (const auto& [bd, n] : d) o[key(bd.first, bd.second)] = n;
      return o;
    };
    e2.push_back({{"p", p},
                  {"dim_k", rep.dim_k},
                  {"h_k", rep.h_k},
                  {"h_rel", rep.h_rel},
                  {"direct", as_json(rep.direct)},
                  {"tensor_reading", as_json(rep.tensor)},
                  {"literal_reading", as_json(rep.literal)},
                  {"pass", rep.pass},
                  {"literal_matches", rep.literal_matches}});
    std::vector<std::vector<std::string>> e2rows{{"(a,b)", "direct", "tensor", "literal"}};
    for (const auto& [bd, n] : rep.direct) {
      auto get = [&](const std::map<Bidegree, std::size_t>& d) {
        auto it = d.find(bd);
        return std::to_string(it == d.end() ? 0 : it->second);
      };
      e2rows.push_back({key(bd.first, bd.second), std::to_string(n), get(rep.tensor), get(rep.literal)});
    }
    text += "E_2 of C^*(v; C^" + std::to_string(p) + "(g/v)) under the k-filtration: tensor reading " +
            yes_no(rep.pass) + ", literal reading " + (rep.literal_matches ? "matches" : "does not match") + "\n" +
            format_table(e2rows);
    r.pass = r.pass && rep.pass;
  }

  r.json = {{"kind", "spectral"},
            {"pages", pages},
            {"stable_at", ss.stable_at},
            {"einf_vs_H", einf},
            {"converges", ss.converges},
            {"monotone", ss.monotone},
            {"squares_zero", ss.squares_zero},
            {"next_page_is_homology", ss.next_page_is_homology},
            {"provenance", {{"algebra", v.parent().label()}, {"subalgebra", v.label()}, {"module", m.label()}}},
            {"pass", r.pass}};
  if (!opts.e2_p.empty()) r.json["e2"] = e2;
  r.text = text;
  return r;
}

Report theorem_report(const TheoremReport& t) {
  Report r;
  Json slots = Json::array();
  std::vector<std::vector<std::string>> rows{{"p", "q", "lhs", "rhs", "rhs (forms dual)", "verdict"}};
  for (const auto& s : t.slots) {
    slots.push_back({{"p", s.p}, {"q", s.q}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"rhs_forms_dual", s.rhs_forms_dual},
                     {"pass", s.pass}});
    rows.push_back({std::to_string(s.p), std::to_string(s.q), std::to_string(s.lhs), std::to_string(s.rhs),
                    std::to_string(s.rhs_forms_dual), yes_no(s.pass)});
  }
  r.pass = t.pass;
  r.json = {{"kind", "theorem1"},
            {"algebra", t.algebra},
            {"subalgebra", t.subalgebra},
            {"structure",
             {{"elliptic", t.structure.elliptic},
              {"complex", t.structure.complex},
              {"essentially_real", t.structure.essentially_real}}},
            {"dim_k", t.dim_k},
            {"h_k", t.h_k},
            {"h_rel", t.h_rel},
            {"slots", slots},
            {"hypotheses",
             {{"semisimple", true}, {"closed_exp_v", "asserted"}, {"simply_connected_omega", "asserted"}}},
            {"pass", t.pass}};
  std::ostringstream text;
  text << "theorem 1 cross-check, g = " << t.algebra << ", v = " << t.subalgebra << ", dim k = " << t.dim_k << "\n";
  text << "H^*(k) = " << join(t.h_k) << "\n";
  for (std::size_t p = 0; p < t.h_rel.size(); ++p)
    text << "H^*(v,k; Lambda^" << p << "(g/v)^*) = " << join(t.h_rel[p]) << "\n";
  text << format_table(rows);
  text << "hypotheses asserted, not checked: exp(v) closed, Omega simply connected\n";
  text << "overall: " << yes_no(t.pass) << "\n";
  r.text = text.str();
  return r;
}

Report proptest_report(std::uint64_t seed, std::size_t cases) {
  Report r;
  std::vector<PropertyResult> results = run_property_suite(seed, cases);
  results.push_back(reducibility_property(seed, std::max<std::size_t>(cases / 2, 50), {"A1", "A2"}));
  Json props = Json::array();
  std::vector<std::vector<std::string>> rows{{"property", "cases", "failures", "verdict"}};
  for (const auto& p : results) {
    Json pj{{"name", p.name}, {"cases", p.cases}, {"failures", p.failures}, {"pass", p.pass()}};
    if (!p.first_failure.empty()) pj["first_failure"] = p.first_failure;
    props.push_back(pj);
    rows.push_back({p.name, std::to_string(p.cases), std::to_string(p.failures), yes_no(p.pass())});
    if (!p.first_failure.empty()) rows.push_back({"  " + p.first_failure, "", "", ""});
    r.pass = r.pass && p.pass();
  }
  r.json = {{"kind", "proptest"}, {"seed", seed}, {"properties", props}, {"pass", r.pass}};
  r.text = "property suite, seed " + std::to_string(seed) + "\n" + format_table(rows);
  return r;
}

Report full_report(const Subalgebra& v, const FullReportOptions& opts) {
  Report r;
  Json stages = Json::object(), errors = Json::array();
  std::string text;
  auto stage = [&](const std::string& name, auto&& fn) {
    try {
      Report s = fn();
      stages[name] = s.json;
      text += "== " + name + "\n" + s.text;
      r.pass = r.pass && s.pass;
    } catch (const Error& e) {
      errors.push_back({{"stage", name}, {"error", e.what()}});
      text += "== " + name + "\nerror: " + e.what() + "\n";
      r.pass = false;
    }
  };
  Representation trivial = trivial_module(v.parent_ptr());
  StructureClass sc;
  stage("classification", [&] {
    Report c = classify_report(v);
    sc = classify_structure(v.parent(), v);
    return c;
  });
  stage("cohomology", [&] {
    CohomologyOptions co;
    co.p_max = std::min(opts.p_max, static_cast<int>(v.codim()));
    co.q_max = opts.q_max;
    return cohomology_report(v, trivial, co);
  });
  stage("spectral", [&] {
    SpectralOptions so;
    so.max_page = opts.max_page;
    if (sc.elliptic)
      for (int p = 0; p <= std::min(1, opts.p_max); ++p) so.e2_p.push_back(p);
    return spectral_report(v, trivial, so);
  });
  if (sc.elliptic) {
    stage("theorem1", [&] { return theorem_report(theorem1_crosscheck(v, opts.p_max, opts.q_max)); });
  } else {
    stages["theorem1"] = {{"skipped", "subalgebra is not elliptic"}};
    text += "== theorem1\nskipped: subalgebra is not elliptic\n";
  }
  r.json = {{"kind", "full_report"},
            {"algebra", v.parent().label()},
            {"subalgebra", v.label()},
            {"stages", stages},
            {"errors", errors},
            {"pass", r.pass}};
  r.text = text + "overall: " + yes_no(r.pass) + "\n";
  return r;
}

}  // namespace liecoh
