#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stabsim/circuit.hpp"
#include "stabsim/cost.hpp"
#include "stabsim/database.hpp"
#include "stabsim/engines.hpp"
#include "stabsim/ensemble.hpp"
#include "stabsim/layered.hpp"

namespace py = pybind11;
using namespace stabsim;

namespace {

EngineOptions make_options(int threads, std::uint64_t mem_cap, bool prune) {
  EngineOptions o;
  o.threads = threads;
  o.mem_cap = mem_cap;
  o.prune = prune;
  return o;
}

py::dict trace_dict(const ExecutionTrace& t) {
  py::dict d;
  d["inner_product_count"] = t.inner_product_count;
  d["leaf_count"] = t.leaf_count;
  d["max_live_terms"] = t.max_live_terms;
  d["peak_bytes"] = t.peak_bytes;
  d["wall_ms"] = t.wall_ms;
  d["branch_counts"] = t.branch_counts;
  return d;
}

}  // namespace

PYBIND11_MODULE(_stabsim, m) {
  m.doc() = "stabilizer-projector strong simulation";

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("n", [](const Circuit& c) { return c.n; })
      .def("gate_count", &Circuit::gate_count)
      .def("non_clifford_count", &Circuit::non_clifford_count)
      .def("depth", &Circuit::depth)
      .def("__str__", [](const Circuit& c) { return serialize(c); });

  py::class_<LayeredCircuit>(m, "LayeredCircuit")
      .def_property_readonly("d_nc", &LayeredCircuit::d_nc)
      .def("padded_kappa", &LayeredCircuit::padded_kappa);

  m.def("parse", [](const std::string& text) { return parse(text); }, py::arg("text"));
  m.def("parse_file", &parse_file, py::arg("path"));
  m.def("serialize", &serialize, py::arg("circuit"));
  m.def("layerize", &layerize, py::arg("circuit"));
  m.def("compress_diagonal_layers", &compress_diagonal_layers, py::arg("layered"));

  m.def("generate",
        [](const std::string& family, std::uint32_t n, unsigned cycles, double p, std::uint64_t seed) {
          return ensemble_generate(ensemble_family_from_name(family), n, cycles, p, seed);
        },
        py::arg("family"), py::arg("n"), py::arg("cycles"), py::arg("p") = 1.0 / 3.0,
        py::arg("seed") = 1);

  m.def("amplitude_dense",
        [](const Circuit& c, const std::string& x) { return amplitude_dense(c, x); }, py::arg("circuit"),
        py::arg("x"));

  m.def("amplitude_spir",
        [](const LayeredCircuit& lc, const std::string& x, int threads) {
          auto [amp, trace] = amplitude_spir(lc, parse_bitstring(x, lc.n), make_options(threads, 1ULL << 22, false));
          return py::make_tuple(amp, trace_dict(trace));
        },
        py::arg("layered"), py::arg("x"), py::arg("threads") = 1);

  m.def("amplitude_spc",
        [](const LayeredCircuit& lc, const std::string& x, int threads, std::uint64_t mem_cap, bool prune) {
          auto [amp, trace] = amplitude_spc(lc, parse_bitstring(x, lc.n), make_options(threads, mem_cap, prune));
          return py::make_tuple(amp, trace_dict(trace));
        },
        py::arg("layered"), py::arg("x"), py::arg("threads") = 1,
        py::arg("mem_cap") = std::uint64_t(1) << 22, py::arg("prune") = false);

  m.def("amplitude_spc_soc",
        [](const LayeredCircuit& lc, const std::string& x) {
          auto [amp, trace] = amplitude_spc_soc(lc, parse_bitstring(x, lc.n));
          return py::make_tuple(amp, trace_dict(trace));
        },
        py::arg("layered"), py::arg("x"));

  m.def("amplitude_cut",
        [](const Circuit& c, unsigned cut_at, const std::string& x) {
          auto plan = make_cut_plan(c, (1ULL << cut_at) - 1);
          auto [amp, trace] = amplitude_cut_hybrid(c, plan, parse_bitstring(x, c.n));
          py::dict t = trace_dict(trace);
          t["cut_count"] = plan.cut_count();
          return py::make_tuple(amp, t);
        },
        py::arg("circuit"), py::arg("cut_at"), py::arg("x"));

  m.def("decomposition_rank",
        [](const std::string& gate) { return builtin_decomposition(gate).rank(); }, py::arg("gate"));
  m.def("verify_decomposition",
        [](const std::string& gate, double tol) {
          const auto& e = database().entry(gate);
          auto rep = verify_decomposition(e.decomp, e.target, tol);
          py::dict d;
          d["rank"] = rep.rank;
          d["max_error"] = rep.max_error;
          d["pass"] = rep.pass;
          return d;
        },
        py::arg("gate"), py::arg("tol") = 1e-9);

  m.def("threshold_p",
        [](const std::string& family, double d_nc) {
          return threshold_p(family == "cs" ? GateFamily::Cs : GateFamily::Cz, d_nc);
        },
        py::arg("family"), py::arg("d_nc"));
  m.def("crossover_dnc",
        [](const std::string& family, double p) -> py::object {
          auto v = crossover_dnc(family == "cs" ? GateFamily::Cs : GateFamily::Cz, p);
          if (!v) return py::none();
          return py::cast(*v);
        },
        py::arg("family"), py::arg("p"));
  m.def("supremacy_cycle_log2_kappa", [] {
    return supremacy_cycle_log2_kappa(SupremacyCensus{});
  });
}
