#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "milnor/fixtures.hpp"
#include "milnor/verify.hpp"

namespace py = pybind11;
using namespace milnor;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string run_text(const std::string& text, const std::string& formula) {
  const Scenario sc = parse_scenario_text(text);
  return report_json(sc, run_scenario(sc, {FormulaSelection::parse(formula), false}), false).dump();
}

std::string run_example(const std::string& name) {
  const Scenario sc = load_fixture(name).scenario();
  return report_json(sc, run_scenario(sc, {FormulaSelection::all(), false}), false).dump();
}

py::list verify(const std::string& suite, std::uint64_t seed) {
  py::list out;
  for (const auto& s : run_suite(suite, seed)) {
    py::list props;
    for (const auto& p : s.properties)
      props.append(py::dict(py::arg("name") = p.name, py::arg("cases") = p.cases, py::arg("failures") = p.failures,
                            py::arg("first_failure") = p.first_failure, py::arg("passed") = p.pass()));
    out.append(py::dict(py::arg("suite") = s.suite, py::arg("passed") = s.pass(), py::arg("elapsed_ms") = s.elapsed_ms,
                        py::arg("properties") = props));
  }
  return out;
}

HypersurfaceData hypersurface(const AmbientPtr& amb, const std::string& name, int degree,
                              const std::vector<py::dict>& singular, const std::optional<std::string>& segre) {
  Stratum open;
  open.name = "regular";
  open.open = true;
  open.closure_class = CycleClass::zero(amb);
  std::vector<Stratum> strata{open};
  for (const auto& d : singular) {
    const std::string sname = d["name"].cast<std::string>();
    const std::string closure = d["closure"].cast<std::string>();
    const auto chi = d["milnor_fiber_chi"].cast<std::int64_t>();
    std::set<std::string> in;
    if (d.contains("contained_in")) in = d["contained_in"].cast<std::set<std::string>>();
    if (closure == "point") {
      strata.push_back(point_stratum(amb, sname, chi, in));
    } else {
      const SegreCenter c = parse_segre_center(closure);
      if (c.kind != SegreCenter::Kind::Linear) throw Error("closure must be \"point\" or \"linear(m)\"");
      strata.push_back(linear_stratum(amb, sname, c.value, chi, in));
    }
  }
  HypersurfaceData h = HypersurfaceData::from_strata(name, StratifiedHypersurface(line_bundle(amb, {degree}), strata));
  if (segre) h.segre = segre_builtin(amb, parse_segre_center(*segre));
  return h;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Chow-ring arithmetic and Milnor classes";

  static py::exception<Error> error(m, "MilnorError", PyExc_RuntimeError);
  static py::exception<InputError> input_error(m, "InputError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      PyErr_SetString(input_error.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  py::class_<AmbientSpace, std::shared_ptr<AmbientSpace>>(m, "AmbientSpace")
      .def_static("proj_space", [](int n) { return std::const_pointer_cast<AmbientSpace>(AmbientSpace::proj_space(n)); })
      .def_static("multi_proj",
                  [](std::vector<int> dims) { return std::const_pointer_cast<AmbientSpace>(AmbientSpace::multi_proj(dims)); })
      .def_property_readonly("dimension", &AmbientSpace::dimension)
      .def_property_readonly("generators", &AmbientSpace::generator_names)
      .def("__repr__", &AmbientSpace::describe);

  py::class_<CycleClass>(m, "CycleClass")
      .def(py::init([](const std::shared_ptr<AmbientSpace>& a, const std::string& text) { return parse_class(a, text); }),
           py::arg("ambient"), py::arg("text"))
      .def_static("point", [](const std::shared_ptr<AmbientSpace>& a) { return CycleClass::point(a); })
      .def_static("generator", [](const std::shared_ptr<AmbientSpace>& a, int i) { return CycleClass::generator(a, i); })
      .def("component", [](const CycleClass& c, int k) { return component(c, k); })
      .def("degree", [](const CycleClass& c) { return py::int_(py::str(degree(c).get_str())); })
      .def("inverse", [](const CycleClass& c) { return ring_inv(c); })
      .def("__pow__", [](const CycleClass& c, int e) { return ring_ipow(c, e); })
      .def("is_zero", &CycleClass::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__rmul__", [](const CycleClass& c, long k) { return Integer(k) * c; })
      .def("__str__", &CycleClass::str)
      .def("__repr__", [](const CycleClass& c) { return "CycleClass('" + c.str() + "')"; });

  py::class_<HypersurfaceData>(m, "Hypersurface")
      .def(py::init(&hypersurface), py::arg("ambient"), py::arg("name"), py::arg("degree"),
           py::arg("singular_strata") = std::vector<py::dict>{}, py::arg("segre") = std::nullopt)
      .def_readonly("name", &HypersurfaceData::name)
      .def_property_readonly("virt", [](const HypersurfaceData& h) { return h.classes.virt; })
      .def_property_readonly("csm", [](const HypersurfaceData& h) { return h.classes.csm; })
      .def_property_readonly("milnor", [](const HypersurfaceData& h) { return h.classes.milnor; })
      .def_property_readonly("chi", [](const HypersurfaceData& h) { return py::int_(py::str(degree(h.classes.csm).get_str())); })
      .def("aluffi_milnor", [](const HypersurfaceData& h) {
        if (!h.segre) throw Error("no Segre class attached");
        return aluffi_milnor(h.line, mu_class(h.line, *h.segre));
      });

  m.def("intersection_milnor",
        [](const std::vector<HypersurfaceData>& hyps, const std::string& formula) {
          const IntersectionScenario sc(hyps);
          if (formula == "thm41") return milnor_thm41(sc);
          if (formula == "cor11") return milnor_cor11(sc);
          if (formula == "cor12") return milnor_cor12(sc);
          if (formula == "pp_ais") return milnor_pp_type(sc, PPMode::PerStratumAis);
          if (formula == "pp_full") return milnor_pp_type(sc, PPMode::FullExpansion);
          if (formula == "leformula") return milnor_le_formula(sc);
          if (formula == "aluffi") return milnor_aluffi_cor(sc);
          throw Error("unknown formula '" + formula + "'");
        },
        py::arg("hypersurfaces"), py::arg("formula") = "thm41");
  m.def("run_scenario_json", &run_text, py::arg("text"), py::arg("formula") = "all");
  m.def("run_example_json", &run_example, py::arg("name"));
  m.def("list_examples", &list_fixtures);
  m.def("verify", &verify, py::arg("suite") = "all", py::arg("seed") = 0);
}
