#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cmreal/calogero_moser.hpp"
#include "cmreal/cherednik.hpp"
#include "cmreal/harness.hpp"
#include "cmreal/io.hpp"
#include "cmreal/quasi_exp.hpp"
#include "cmreal/schur.hpp"
#include "cmreal/tau_wave.hpp"

namespace py = pybind11;
using namespace cmreal;

namespace {

// Structured results cross the boundary as JSON text; the package wrapper
// decodes them, so the Python side sees the same schemas as the CLI.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) {
  if (py::isinstance<py::str>(o)) return parse_json_text(o.cast<std::string>());
  return parse_json_text(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

std::vector<Gq> scalars(const std::vector<std::string>& v) {
  std::vector<Gq> out;
  for (const auto& s : v) out.push_back(parse_gq(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(_cmreal, m) {
  m.doc() = "Calogero-Moser pairs, tau functions and reality tests";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NotCMPairError>(m, "NotCMPairError", PyExc_ValueError);
  py::register_exception<CounterexampleAlarm>(m, "CounterexampleAlarm", PyExc_RuntimeError);

  m.def("validate", [](const py::object& pair) { return to_py(to_json(cmpair_from_json(from_py(pair)))); },
        "Parse and validate a pair; raises NotCMPairError if rank([X,Z] + I) != 1.", py::arg("pair"));

  m.def("chart_to_pair", [](const py::object& chart) { return to_py(to_json(from_chart(cmchart_from_json(from_py(chart))))); },
        py::arg("chart"));

  m.def(
      "pair_to_chart",
      [](const py::object& pair) {
        CMPair p = cmpair_from_json(from_py(pair));
        if (auto c = to_chart_exact(p)) return to_py(to_json(*c));
        return to_py(to_json(to_chart(p)));
      },
      py::arg("pair"));

  m.def(
      "tau",
      [](const py::object& pair, int order) { return to_string(tau_from_cm(cmpair_from_json(from_py(pair)), order).poly); },
      "tau(t_1..t_m) as text, normalized so the t_1^n coefficient is 1.", py::arg("pair"), py::arg("m"));

  m.def(
      "wave",
      [](const py::object& pair, int order) {
        std::vector<std::string> out;
        for (const RatFunc& f : wave_from_cm(cmpair_from_json(from_py(pair)), order).a) out.push_back(f.str());
        return out;
      },
      py::arg("pair"), py::arg("m"));

  m.def("bispectral_symmetric",
        [](const py::object& pair, int order) { return bispectral_symmetric(cmpair_from_json(from_py(pair)), order); },
        py::arg("pair"), py::arg("order") = 6);

  m.def(
      "fiber",
      [](const std::vector<cplx>& x, const std::vector<cplx>& z) {
        std::vector<std::pair<std::vector<cplx>, std::vector<cplx>>> out;
        for (const CMChartC& c : fiber_solve(x, z).points) out.emplace_back(c.lambda, c.alpha);
        return out;
      },
      "Charts (lambda, alpha) over spec X = x, spec Z = z for n <= 3.", py::arg("x"), py::arg("z"));

  m.def(
      "realify",
      [](const py::object& pair, bool real_spectra) {
        RealifyResult r = realify_regular(cmpair_from_json(from_py(pair)), real_spectra);
        return to_py(r.pair ? to_json(*r.pair) : to_json(r.pair_approx));
      },
      py::arg("pair"), py::arg("real_spectra") = false);

  m.def(
      "normalized_wronskian",
      [](const py::object& space) { return to_string(normalized_wronskian(quasi_exp_from_json(from_py(space)))); },
      py::arg("space"));

  m.def("real_span", [](const py::object& space) { return real_span_test(quasi_exp_from_json(from_py(space))); },
        py::arg("space"));

  m.def("schur", [](const std::vector<int>& parts) { return to_string(schur_function(make_partition(parts)), "p"); },
        py::arg("parts"));

  m.def(
      "coro_schur",
      [](const std::vector<int>& parts, const std::vector<std::string>& c) {
        CoroSchurReport r = coro_schur_harness(make_partition(parts), scalars(c));
        return py::dict(py::arg("vacuous") = r.vacuous, py::arg("hypothesis") = r.hypothesis,
                        py::arg("conclusion") = r.conclusion, py::arg("depended") = r.depended,
                        py::arg("specialization") = to_string(r.specialization));
      },
      py::arg("parts"), py::arg("c"));

  m.def(
      "dunkl",
      [](const std::vector<std::string>& lambda, const std::vector<std::string>& mu) {
        DunklRep rep = build_dunkl_rep(scalars(lambda), scalars(mu));
        CherednikReport r = reality_harness(rep);
        return py::dict(py::arg("dim") = rep.dim(), py::arg("relations_violated") = check_relations(rep),
                        py::arg("pair") = to_py(to_json(extract_cm_pair(rep))), py::arg("evaluated") = r.evaluated,
                        py::arg("hypothesis") = r.hypothesis, py::arg("conclusion") = r.conclusion);
      },
      py::arg("lambda_"), py::arg("mu"));

  m.def(
      "run_criterion",
      [](int criterion, std::uint64_t seed, int threads) {
        HarnessConfig cfg;
        cfg.seed = seed;
        cfg.threads = threads;
        SuiteReport s;
        {
          py::gil_scoped_release release;
          s = run_criterion(criterion, cfg);
        }
        return to_py(render_summary({s}, cfg)["suites"][0]);
      },
      "Summary of one acceptance suite (1..13).", py::arg("criterion"), py::arg("seed") = 7, py::arg("threads") = 0);
}
