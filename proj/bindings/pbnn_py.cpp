// Python module exposing the main operations: stepping, canonical
// identifiers, exhaustive orbit decomposition, the evolutionary search and
// the hardware emitters. States cross the boundary as packed integer words
// (bit i-1 set <=> x_i = +1), permutations as 1-based identifier lists.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "pbnn/attractor.hpp"
#include "pbnn/evolve.hpp"
#include "pbnn/hdlgen.hpp"
#include "pbnn/net.hpp"
#include "pbnn/permutation.hpp"
#include "pbnn/report.hpp"
#include "pbnn/state.hpp"
#include "pbnn/version.hpp"

namespace py = pybind11;
using namespace pbnn;

namespace {

Permutation make_perm(const std::vector<int>& ids) { return Permutation(ids); }

py::dict orbit_dict(int n, const Orbit& o) {
  py::dict d;
  d["min_state"] = o.min_state;
  d["min_state_hex"] = BinaryState(n, o.min_state).to_hex();
  d["period"] = o.period;
  d["basin_size"] = o.basin_size;
  d["contains_endpoint"] = o.contains_endpoint;
  d["f1_num"] = f1_numerator(o);
  d["states"] = o.states;
  return d;
}

py::dict report_dict(const AttractorReport& r) {
  py::dict d;
  d["n"] = r.net().n();
  d["cn"] = r.net().cn();
  d["permutation"] = r.net().sigma().ids();
  py::list orbits;
  for (const Orbit& o : r.orbits()) orbits.append(orbit_dict(r.net().n(), o));
  d["orbits"] = orbits;
  d["f1_best_num"] = r.f1_best_num();
  d["best_index"] = r.best_index();
  d["is_gbpo"] = r.is_gbpo();
  if (const auto p = r.gbpo_period()) {
    d["gbpo_period"] = *p;
  } else {
    d["gbpo_period"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(pbnn, m) {
  m.doc() = "Permutation binary neural networks: simulation, orbit "
            "decomposition, evolutionary search and hardware emission";
  m.attr("__version__") = kToolVersion;

  m.def("weights_for_cn", [](int cn) {
    const WeightTriple w = weights_for_cn(cn);
    return py::make_tuple(w.wa, w.wb, w.wc);
  }, py::arg("cn"), "Weight triple (w_a, w_b, w_c) for a connection number");

  m.def("truth_table", [](int cn) { return truth_table(cn); }, py::arg("cn"),
        "8-bit neighborhood truth table of the weight triple");

  m.def("step", [](int n, int cn, const std::vector<int>& perm, std::uint64_t bits) {
    const Pbnn net(n, cn, make_perm(perm));
    return step(BinaryState(n, bits), net).bits();
  }, py::arg("n"), py::arg("cn"), py::arg("perm"), py::arg("bits"),
        "One synchronous update of the packed state word");

  m.def("trajectory", [](int n, int cn, const std::vector<int>& perm,
                         std::uint64_t bits, std::int64_t steps) {
    const Pbnn net(n, cn, make_perm(perm));
    std::vector<std::uint64_t> out;
    for (const BinaryState& x : trajectory(BinaryState(n, bits), net, steps)) {
      out.push_back(x.bits());
    }
    return out;
  }, py::arg("n"), py::arg("cn"), py::arg("perm"), py::arg("bits"),
        py::arg("steps"), "States x^0 .. x^steps as packed words");

  m.def("parse_state", [](const std::string& text, int n) {
    return BinaryState::parse(text, n).bits();
  }, py::arg("text"), py::arg("n") = 0,
        "Parse a +/- string or hex word into a packed state");

  m.def("state_to_pm", [](int n, std::uint64_t bits) {
    return BinaryState(n, bits).to_pm_string();
  }, py::arg("n"), py::arg("bits"));

  m.def("shift", [](const std::vector<int>& perm) {
    return shift(make_perm(perm)).ids();
  }, py::arg("perm"), "Rotation-conjugate wiring (one shift application)");

  m.def("equivalence_class", [](const std::vector<int>& perm) {
    std::vector<std::vector<int>> out;
    for (const Permutation& p : equivalence_class(make_perm(perm))) {
      out.push_back(p.ids());
    }
    return out;
  }, py::arg("perm"));

  m.def("cpid", [](const std::vector<int>& perm) {
    return canonicalize(make_perm(perm)).ids();
  }, py::arg("perm"), "Canonical (shift-minimal) identifier");

  m.def("is_canonical", [](const std::vector<int>& perm) {
    return is_canonical(make_perm(perm));
  }, py::arg("perm"));

  m.def("analyze", [](int n, int cn, const std::vector<int>& perm, int max_dimension) {
    AnalyzeOptions opts;
    opts.max_dimension = max_dimension;
    return report_dict(analyze(Pbnn(n, cn, make_perm(perm)), opts));
  }, py::arg("n"), py::arg("cn"), py::arg("perm"),
        py::arg("max_dimension") = AnalyzeOptions{}.max_dimension,
        "Exhaustive orbit decomposition of the full state space");

  m.def("search", [](int n, int cn, int m, std::int64_t g_m1, int m_e,
                     std::int64_t g_max, std::uint64_t seed, int threads) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.cn = cn;
    cfg.m = m;
    cfg.g_m1 = g_m1;
    cfg.m_e = m_e;
    cfg.g_max = g_max;
    cfg.seed = seed;
    cfg.threads = threads;
    const SearchResult r = run_search(cfg);
    py::dict d;
    d["part1_found"] = r.part1_found;
    d["part1_generations"] = r.part1_generations;
    py::list ep;
    for (const ArchiveEntry& e : r.ep.entries()) {
      py::dict row;
      row["cpid"] = e.id.perm().ids();
      row["period"] = e.period;
      row["f1_num"] = e.f1_num;
      row["generation"] = e.generation;
      row["part"] = e.part;
      row["seed"] = e.seed;
      ep.append(row);
    }
    d["ep"] = ep;
    py::list log;
    for (const GenerationLogRow& row : r.log) {
      log.append(py::make_tuple(row.part, row.generation, row.best_f1_num,
                                row.ep_size, row.cache_hits));
    }
    d["log"] = log;
    return d;
  }, py::arg("n") = 17, py::arg("cn") = 1, py::arg("m") = 50,
        py::arg("g_m1") = 1000, py::arg("m_e") = 50, py::arg("g_max") = 1000,
        py::arg("seed") = 0, py::arg("threads") = 1,
        "Two-stage evolutionary search; returns the archive and the log");

  m.def("cumulative_distribution", [](const std::vector<std::int64_t>& periods,
                                      bool distinct_periods) {
    const PeriodDistribution d =
        cumulative_distribution(periods, distinct_periods);
    return py::make_tuple(d.points, d.p_max);
  }, py::arg("periods"), py::arg("distinct_periods") = false,
        "((period, cumulative) list, p_max)");

  m.def("raster_text", [](int n, const std::vector<std::uint64_t>& states) {
    std::vector<BinaryState> traj;
    traj.reserve(states.size());
    for (const std::uint64_t bits : states) traj.emplace_back(n, bits);
    return raster_text(traj);
  }, py::arg("n"), py::arg("states"));

  m.def("emit_hidden_layer", &emit_hidden_layer, py::arg("n"), py::arg("cn"));

  m.def("emit_output_layer", [](int n, const std::vector<int>& perm) {
    return emit_output_layer(n, make_perm(perm));
  }, py::arg("n"), py::arg("perm"));

  m.def("strip_banner", &strip_banner, py::arg("source"));

  m.def("interpret_emitted", [](int n, int cn, const std::vector<int>& perm,
                                std::uint64_t bits) {
    return interpret_emitted(n, cn, make_perm(perm), BinaryState(n, bits)).bits();
  }, py::arg("n"), py::arg("cn"), py::arg("perm"), py::arg("bits"),
        "Evaluate the emitted design's combinational semantics");

  m.def("undeclared_identifiers", &undeclared_identifiers, py::arg("source"),
        py::arg("external_modules") = std::vector<std::string>{});

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<BoundError>(m, "BoundError", PyExc_RuntimeError);
}
