// lie-coh: command-line front end.
// Exit codes: 0 all verdicts pass, 1 computational mismatch, 2 input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "liecoh/error.hpp"
#include "liecoh/report.hpp"

using namespace liecoh;

namespace {

struct Options {
  std::string preset;
  std::string algebra_file;
  bool borel = false;
  std::vector<std::size_t> parabolic;
  std::string sub;
  bool whole = false;
  std::string module = "trivial";
  std::string p_range;
  std::optional<int> q_max;
  std::string format = "text";
  std::string output;
  bool dump_matrices = false;
  std::uint64_t seed = 1;
  std::size_t cases = 100;
  std::optional<std::size_t> max_dim;
  std::optional<std::size_t> max_page;
  bool full = false;
};

struct Input {
  AlgebraPtr g;
  std::optional<SemisimpleAlgebra> semisimple;
};

Input load_algebra(const Options& o, const Limits& limits) {
  if (o.preset.empty() == o.algebra_file.empty()) throw ParseError("give exactly one of --preset or --algebra");
  Input in;
  if (!o.preset.empty()) {
    in.semisimple = build_preset(o.preset);
    in.g = in.semisimple->algebra;
  } else {
    LieAlgebra g = algebra_from_json(read_json_file(o.algebra_file));
    if (g.label().empty()) g.set_label(std::filesystem::path(o.algebra_file).stem().string());
    in.g = std::make_shared<LieAlgebra>(std::move(g));
  }
  limits.enforce(*in.g);
  return in;
}

int chosen_subalgebra_options(const Options& o) {
  return (o.borel ? 1 : 0) + (o.parabolic.empty() ? 0 : 1) + (o.sub.empty() ? 0 : 1) + (o.whole ? 1 : 0);
}

void check_subalgebra_options(const Options& o, const Input& in) {
  if (chosen_subalgebra_options(o) > 1) throw ParseError("give at most one of --borel, --parabolic, --sub, --whole");
  if ((o.borel || !o.parabolic.empty()) && !in.semisimple)
    throw ParseError("--borel/--parabolic need a --preset: a custom algebra is not root-graded");
}

std::optional<Subspace> load_space(const Options& o, const Input& in) {
  check_subalgebra_options(o, in);
  const LieAlgebra& g = *in.g;
  if (o.borel || !o.parabolic.empty()) {
    return (o.borel ? borel(*in.semisimple) : parabolic(*in.semisimple, o.parabolic)).space();
  }
  if (o.whole) return Subspace::full(g.dim());
  if (o.sub.empty()) return std::nullopt;
  if (o.sub.rfind("span{", 0) == 0) return parse_span_expression(o.sub, g);
  return subspace_from_json(read_json_file(o.sub), g.dim());
}

std::optional<Subalgebra> load_subalgebra(const Options& o, const Input& in) {
  check_subalgebra_options(o, in);
  if (o.borel) return borel(*in.semisimple);
  if (!o.parabolic.empty()) return parabolic(*in.semisimple, o.parabolic);
  auto space = load_space(o, in);
  if (!space) return std::nullopt;
  if (o.whole) return Subalgebra::whole(in.g);
  return Subalgebra::make(in.g, *space, o.sub);
}

Subalgebra require_subalgebra(const Options& o, const Input& in) {
  auto v = load_subalgebra(o, in);
  if (!v) throw ParseError("this subcommand needs a subalgebra: --borel, --parabolic, --sub or --whole");
  return *v;
}

Representation load_module(const std::string& spec, const Input& in, const std::optional<Subalgebra>& v) {
  if (spec == "trivial") return trivial_module(in.g);
  if (spec == "adjoint") return adjoint_module(in.g);
  if (spec == "quotient:g/v") {
    if (!v) throw ParseError("module quotient:g/v needs a subalgebra");
    return quotient_module(*v);
  }
  if (spec.rfind("dual:", 0) == 0) return dual_module(load_module(spec.substr(5), in, v));
  if (spec.rfind("forms:", 0) == 0) {
    auto colon = spec.find(':', 6);
    if (colon == std::string::npos) throw ParseError("module '" + spec + "': expected forms:p:<name>");
    int p = 0;
    try {
      p = std::stoi(spec.substr(6, colon - 6));
    } catch (const std::exception&) {
      throw ParseError("module '" + spec + "': degree is not an integer");
    }
    Representation base = load_module(spec.substr(colon + 1), in, v);
    return forms_module(base, p, trivial_module(base.algebra_ptr()));
  }
  if (!std::filesystem::exists(spec))
    throw ParseError("unknown module '" + spec + "' (trivial, adjoint, quotient:g/v, dual:<m>, forms:p:<m> or a file)");
  Representation m = representation_from_json(read_json_file(spec), in.g);
  auto hom = check_homomorphism(m);
  if (!hom.pass)
    throw PreconditionFailed("module file " + spec + " is not a representation: fails on (" +
                             in.g->basis_names()[(*hom.witness)[0]] + ", " + in.g->basis_names()[(*hom.witness)[1]] + ")");
  return m;
}

std::pair<int, std::optional<int>> parse_p_range(const std::string& s) {
  if (s.empty()) return {0, std::nullopt};
  try {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
      int p = std::stoi(s);
      return {p, p};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParseError("--p: expected N or A..B, got '" + s + "'");
  }
}

void emit(const Options& o, const Report& r) {
  std::string json = dump_json(r.json);
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) throw ParseError("cannot write '" + o.output + "'");
  }
  if (o.format == "json") {
    (file.is_open() ? file : *out) << json;
  } else if (o.format == "text") {
    (file.is_open() ? file : *out) << r.text;
  } else {
    std::cout << r.text;
    (file.is_open() ? file : *out) << json;
  }
}

int run(const std::string& cmd, const Options& o) {
  Limits limits = Limits::from_env();
  if (o.max_dim) limits.max_dim = *o.max_dim;
  limits.max_page = o.max_page;
  if (cmd == "proptest") {
    Report r = proptest_report(o.seed, o.cases);
    emit(o, r);
    return r.pass ? 0 : 1;
  }
  Input in = load_algebra(o, limits);
  Report r;
  if (cmd == "check") {
    r = check_report(*in.g, load_space(o, in));
    if (o.dump_matrices) r.json["algebra_table"] = algebra_to_json(*in.g);
  } else if (cmd == "classify") {
    r = classify_report(require_subalgebra(o, in));
  } else if (cmd == "cohomology") {
    auto v = load_subalgebra(o, in);
    Representation m = load_module(o.module, in, v);
    if (!v || !same_algebra(m.algebra(), *in.g)) {
      r = simple_cohomology_report(m, o.dump_matrices);
    } else {
      CohomologyOptions co;
      auto [p_min, p_max] = parse_p_range(o.p_range);
      co.p_min = p_min;
      co.p_max = p_max;
      co.q_max = o.q_max;
      co.dump_matrices = o.dump_matrices;
      r = cohomology_report(*v, m, co);
    }
  } else if (cmd == "relative") {
    Subalgebra v = require_subalgebra(o, in);
    r = relative_report(v, load_module(o.module, in, v), o.dump_matrices);
  } else if (cmd == "spectral") {
    Subalgebra v = require_subalgebra(o, in);
    SpectralOptions so;
    so.max_page = o.max_page;
    so.dump_matrices = o.dump_matrices;
    if (!o.p_range.empty()) {
      auto [lo, hi] = parse_p_range(o.p_range);
      for (int p = lo; p <= *hi; ++p) so.e2_p.push_back(p);
    }
    r = spectral_report(v, load_module(o.module, in, v), so);
  } else if (cmd == "theorem") {
    Subalgebra v = require_subalgebra(o, in);
    // theorem slots always start at p = 0; --p only sets the top
    const int p_max = *parse_p_range(o.p_range.empty() ? "0..2" : o.p_range).second;
    if (o.full) {
      FullReportOptions fo;
      fo.p_max = p_max;
      fo.q_max = o.q_max;
      fo.max_page = o.max_page;
      r = full_report(v, fo);
    } else {
      if (in.g->has_real_structure()) {
        StructureClass sc = classify_structure(*in.g, v);
        if (!sc.elliptic) {
          std::cout << classify_report(v).text;
          throw PreconditionFailed("theorem: " + v.label() + " is not elliptic, refusing");
        }
      }
      r = theorem_report(theorem1_crosscheck(v, p_max, o.q_max));
    }
  }
  emit(o, r);
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lie-coh: relative Lie algebra cohomology and Hochschild-Serre spectral sequences, exact arithmetic"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_algebra = [&](CLI::App* sc) {
    sc->add_option("--preset", o.preset, "Cartan type: A1, A2, B2, G2 or any A_n..G2 name");
    sc->add_option("--algebra", o.algebra_file, "algebra JSON file");
  };
  auto add_sub = [&](CLI::App* sc) {
    sc->add_flag("--borel", o.borel, "Borel subalgebra of the preset");
    sc->add_option("--parabolic", o.parabolic, "parabolic from simple roots, e.g. 1,3")->delimiter(',');
    sc->add_option("--sub", o.sub, "subalgebra file or span{...} expression");
    sc->add_flag("--whole", o.whole, "v = g");
  };
  auto add_common = [&](CLI::App* sc) {
    sc->add_option("--format", o.format, "json, text or both")->check(CLI::IsMember({"json", "text", "both"}));
    sc->add_option("--output", o.output, "write the report here instead of stdout");
    sc->add_flag("--dump-matrices", o.dump_matrices, "include differentials in the JSON report");
    sc->add_option("--max-dim", o.max_dim, "refuse algebras above this dimension (default 12)")->check(CLI::PositiveNumber);
    sc->add_option("--max-page", o.max_page, "last spectral page to compute")->check(CLI::PositiveNumber);
  };

  auto* check = app.add_subcommand("check", "validate antisymmetry, Jacobi, real structure, subalgebra closure");
  auto* classify = app.add_subcommand("classify", "elliptic / complex / essentially real");
  auto* cohomology = app.add_subcommand("cohomology", "bigraded H^{p,q}_v(g;M), or H^q when no subalgebra is given");
  auto* relative = app.add_subcommand("relative", "relative cohomology H^q(g,v;M) of basic cochains");
  auto* spectral = app.add_subcommand("spectral", "Hochschild-Serre pages and the E_2 comparison");
  auto* theorem = app.add_subcommand("theorem", "Theorem 1 dimension cross-check");
  auto* proptest = app.add_subcommand("proptest", "randomized property suite");
  for (auto* sc : {check, classify, cohomology, relative, spectral, theorem}) {
    add_algebra(sc);
    add_sub(sc);
    add_common(sc);
  }
  add_common(proptest);
  for (auto* sc : {cohomology, relative, spectral})
    sc->add_option("--module", o.module, "trivial, adjoint, quotient:g/v, dual:<m>, forms:p:<m> or a file");
  for (auto* sc : {cohomology, spectral, theorem}) {
    sc->add_option("--p", o.p_range, "filtration degree N or range A..B");
    sc->add_option("--q", o.q_max, "largest q");
  }
  theorem->add_flag("--full", o.full, "classification, bigraded table, spectral pages and theorem in one report");
  proptest->add_option("--seed", o.seed, "random seed");
  proptest->add_option("--cases", o.cases, "cases per property")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const ParseError& e) {
    std::cerr << "lie-coh: input error: " << e.what() << "\n";
  } catch (const PreconditionFailed& e) {
    std::cerr << "lie-coh: refused: " << e.what() << "\n";
  } catch (const CapExceeded& e) {
    std::cerr << "lie-coh: cap exceeded: " << e.what() << "\n";
  } catch (const DimensionMismatch& e) {
    std::cerr << "lie-coh: input error: " << e.what() << "\n";
  } catch (const InternalInvariant& e) {
    std::cerr << "lie-coh: internal invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "lie-coh: error: " << e.what() << "\n";
  }
  return 2;
}
