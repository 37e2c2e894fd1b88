#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liecoh/error.hpp"
#include "liecoh/report.hpp"

namespace py = pybind11;
using namespace liecoh;

namespace {

// An algebra plus, for presets, its root data (needed for borel/parabolic).
struct PyAlgebra {
  AlgebraPtr g;
  std::optional<SemisimpleAlgebra> s;

  const SemisimpleAlgebra& roots() const {
    if (!s) throw ParseError("a custom algebra is not root-graded: borel/parabolic need a preset");
    return *s;
  }
};

Matrix parse_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<Vector> vs;
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("ragged matrix rows");
    Vector v;
    for (const auto& x : r) v.push_back(Scalar::parse(x));
    vs.push_back(std::move(v));
  }
  return Matrix::from_rows(vs, cols);
}

std::vector<std::string> strings(std::span<const Scalar> v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

std::string dumped(const Report& r) { return dump_json(r.json); }

}  // namespace

PYBIND11_MODULE(_liecoh, m) {
  m.doc() = "Exact relative Lie algebra cohomology (C++ core)";

  static py::exception<Error> base(m, "LieCohError", PyExc_RuntimeError);
  static py::exception<ParseError> parse(m, "ParseError", base.ptr());
  static py::exception<PreconditionFailed> pre(m, "PreconditionFailed", base.ptr());
  static py::exception<CapExceeded> cap(m, "CapExceeded", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(parse.ptr(), e.what());
    } catch (const PreconditionFailed& e) {
      PyErr_SetString(pre.ptr(), e.what());
    } catch (const CapExceeded& e) {
      PyErr_SetString(cap.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(base.ptr(), e.what());
    }
  });

  py::class_<Subalgebra>(m, "Subalgebra")
      .def_property_readonly("dim", &Subalgebra::dim)
      .def_property_readonly("codim", &Subalgebra::codim)
      .def_property_readonly("label", &Subalgebra::label)
      .def("basis", [](const Subalgebra& v) {
        std::vector<std::vector<std::string>> out;
        for (const auto& x : v.space().vectors()) out.push_back(strings(x));
        return out;
      });

  py::class_<PyAlgebra>(m, "Algebra")
      .def_property_readonly("dim", [](const PyAlgebra& a) { return a.g->dim(); })
      .def_property_readonly("basis", [](const PyAlgebra& a) { return a.g->basis_names(); })
      .def_property_readonly("label", [](const PyAlgebra& a) { return a.g->label(); })
      .def_property_readonly("has_real_structure", [](const PyAlgebra& a) { return a.g->has_real_structure(); })
      .def("bracket",
           [](const PyAlgebra& a, const std::string& x, const std::string& y) {
             return strings(a.g->bracket(parse_element(x, *a.g), parse_element(y, *a.g)));
           })
      .def("borel", [](const PyAlgebra& a) { return borel(a.roots()); })
      .def("parabolic", [](const PyAlgebra& a, const std::vector<std::size_t>& simple) { return parabolic(a.roots(), simple); })
      .def("whole", [](const PyAlgebra& a) { return Subalgebra::whole(a.g); })
      .def("zero", [](const PyAlgebra& a) { return Subalgebra::zero(a.g); })
      .def("subalgebra", [](const PyAlgebra& a, const std::string& span) {
        return Subalgebra::make(a.g, parse_span_expression(span, *a.g), span);
      })
      .def("to_json", [](const PyAlgebra& a) { return dump_json(algebra_to_json(*a.g)); });

  m.def("preset", [](const std::string& name) {
    auto s = build_preset(name);
    return PyAlgebra{s.algebra, s};
  });
  m.def("preset_names", &preset_names);
  m.def("algebra_from_json", [](const std::string& text) {
    return PyAlgebra{std::make_shared<LieAlgebra>(algebra_from_json(parse_json(text))), std::nullopt};
  });
  m.def("abelian", [](std::size_t n) { return PyAlgebra{std::make_shared<LieAlgebra>(LieAlgebra::abelian(n)), std::nullopt}; });

  m.def("rank", [](const std::vector<std::vector<std::string>>& rows) { return rank(parse_rows(rows)); });
  m.def("kernel", [](const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<std::string>> out;
    for (const auto& v : kernel(parse_rows(rows)).vectors()) out.push_back(strings(v));
    return out;
  });

  m.def("betti", [](const PyAlgebra& a) { return cohomology_dims(ce_complex(trivial_module(a.g))); });
  m.def("adjoint_cohomology", [](const PyAlgebra& a) { return cohomology_dims(ce_complex(adjoint_module(a.g))); });
  m.def("bigraded", [](const Subalgebra& v, int p) {
    return cohomology_dims(induced_complex(v, trivial_module(v.parent_ptr()), p));
  });
  m.def("hs_isomorphism", [](const Subalgebra& v, int p) {
    auto r = hs_isomorphism_check(v, trivial_module(v.parent_ptr()), p);
    return py::make_tuple(r.lhs, r.rhs, r.pass);
  });
  m.def("relative", [](const Subalgebra& v) { return cohomology_dims(relative_complex(v, trivial_module(v.parent_ptr()))); });

  m.def("_check", [](const PyAlgebra& a) { return dumped(check_report(*a.g)); });
  m.def("_classify", [](const Subalgebra& v) { return dumped(classify_report(v)); });
  m.def("_spectral", [](const Subalgebra& v, std::vector<int> e2_p) {
    SpectralOptions so;
    so.e2_p = std::move(e2_p);
    return dumped(spectral_report(v, trivial_module(v.parent_ptr()), so));
  });
  m.def("_theorem", [](const Subalgebra& v, int p_max) { return dumped(theorem_report(theorem1_crosscheck(v, p_max))); });
  m.def("_full_report", [](const Subalgebra& v, int p_max) {
    FullReportOptions fo;
    fo.p_max = p_max;
    return dumped(full_report(v, fo));
  });
  m.def("_proptest", [](std::uint64_t seed, std::size_t cases) { return dumped(proptest_report(seed, cases)); });
}
