#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dhecke/json_io.hpp"
#include "dhecke/regime.hpp"
#include "dhecke/suites.hpp"

namespace py = pybind11;
using namespace dhecke;

namespace {

ToralContext context(const std::string& group, Int q, Int ell, int r) {
  RootDatum rd = build_root_datum(group);
  CoeffRing s(ell, r);
  require_regime(rd, s, q);
  return ToralContext::for_q(rd, q, s);
}

RunConfig config_from(const py::dict& kw) {
  RunConfig c;
  for (auto item : kw) {
    auto key = item.first.cast<std::string>();
    auto v = item.second;
    if (key == "group") c.group = v.cast<std::string>();
    else if (key == "q") c.q = v.cast<Int>();
    else if (key == "ell") c.ell = v.cast<Int>();
    else if (key == "r") c.r = v.cast<int>();
    else if (key == "max_degree") c.max_degree = v.cast<int>();
    else if (key == "support") c.support = v.cast<int>();
    else if (key == "depth") c.depth = v.cast<int>();
    else if (key == "precision") c.precision = v.cast<int>();
    else if (key == "vars") c.vars = v.cast<int>();
    else if (key == "chi") c.chi = v.cast<std::vector<Int>>();
    else if (key == "samples") c.samples = v.cast<int>();
    else if (key == "seed") c.seed = v.cast<unsigned>();
    else if (key == "manifold") c.manifold = parse_json(v.cast<std::string>(), "manifold");
    else throw InputError("unknown option '" + key + "'");
  }
  return c;
}

}  // namespace

PYBIND11_MODULE(_dhecke, m) {
  m.doc() = "exact derived Hecke algebra computations";
  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<RegimeError>(m, "RegimeError", error.ptr());
  py::register_exception<InputError>(m, "InputError", error.ptr());

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, py::kwargs kw) { return run_suite(name, config_from(kw)).to_json().dump(); },
      py::arg("name"));

  m.def(
      "validate_regime",
      [](const std::string& group, Int q, Int ell, int r) {
        auto rep = validate_regime(build_root_datum(group), CoeffRing(ell, r), q);
        return py::make_tuple(rep.pass, rep.reason);
      },
      py::arg("group"), py::arg("q"), py::arg("ell"), py::arg("r") = 1);

  m.def(
      "satake_multiply",
      [](const std::string& a, const std::string& b, const std::string& group, Int q, Int ell, int r) {
        auto ctx = context(group, q, ell, r);
        auto fa = toral_element_from_json(parse_json(a, "a"), ctx);
        auto fb = toral_element_from_json(parse_json(b, "b"), ctx);
        return to_json(toral_convolve(fa, fb, ProductBounds::unbounded())).dump();
      },
      py::arg("a"), py::arg("b"), py::arg("group"), py::arg("q"), py::arg("ell"), py::arg("r") = 1);

  m.def(
      "invariant_dims",
      [](const std::string& group, Int q, Int ell, int r, Int support, int max_degree) {
        return invariant_dims(context(group, q, ell, r), support, max_degree).totals;
      },
      py::arg("group"), py::arg("q"), py::arg("ell"), py::arg("r") = 1, py::arg("support") = 2,
      py::arg("max_degree") = 2);
}
