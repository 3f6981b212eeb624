#include <algorithm>
#include <chrono>

#include "stabsim/engines.hpp"
#include "stabsim/errors.hpp"

namespace stabsim {

namespace {

struct PatchOp {
  bool is_proj = false;
  Gate gate;           // when !is_proj
  unsigned proj_qubit = 0;  // patch-local qubit
  std::size_t cut_index = 0;
  bool z_side = false;  // true: apply Z^b, false: apply |b><b| projector
};

struct Patch {
  std::uint32_t n = 0;
  std::vector<PatchOp> ops;
  std::vector<unsigned> local_of_global;
};

cdouble patch_amplitude(const Patch& patch, std::uint64_t assignment, std::uint64_t x_bits,
                        const EngineOptions& opts, ExecutionTrace& trace) {
  std::vector<std::pair<cdouble, StabilizerState>> terms;
  terms.push_back({cdouble(1, 0), StabilizerState::basis_state(patch.n, 0)});

  // Evolve gate runs with the layered SPC machinery; apply cut projections
  // between the runs.
  std::size_t i = 0;
  while (i < patch.ops.size()) {
    if (patch.ops[i].is_proj) {
      const auto& op = patch.ops[i];
      const bool bit = (assignment >> op.cut_index) & 1;
      if (op.z_side) {
        if (bit)
          for (auto& [c, st] : terms) st.z(op.proj_qubit);
      } else {
        const auto pz = PauliOperator::z(patch.n, op.proj_qubit);
        for (auto& [c, st] : terms) st.project_pauli_inplace(pz, bit ? -1 : +1);
      }
      ++i;
      continue;
    }
    Circuit run;
    run.n = patch.n;
    while (i < patch.ops.size() && !patch.ops[i].is_proj) run.gates.push_back(patch.ops[i++].gate);
    LayeredCircuit lrun = layerize(run);
    detail::apply_clifford_gates(terms, lrun.clifford_layers.front());
    for (std::size_t l = 0; l < lrun.nc_layers.size(); ++l) {
      detail::project_onto_layer(terms, lrun.padded_view(l), opts, static_cast<int>(l), trace);
      detail::apply_clifford_gates(terms, lrun.clifford_layers[l + 1]);
    }
  }
  cdouble value(0, 0);
  for (const auto& [c, st] : terms) {
    ++trace.inner_product_count;
    value += c * st.amplitude(x_bits).to_complex();
  }
  return value;
}

}  // namespace

CutPlan make_cut_plan(const Circuit& c, std::uint64_t patch_a_mask) {
  const std::uint64_t all = c.n == 64 ? ~0ULL : ((1ULL << c.n) - 1);
  patch_a_mask &= all;
  if (patch_a_mask == 0 || patch_a_mask == all)
    throw InputError("cut plan needs a nonempty partition of the qubits");
  CutPlan plan;
  plan.patch_a_mask = patch_a_mask;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const auto& g = c.gates[i];
    if (g.qubits.size() < 2) continue;
    bool in_a = (patch_a_mask >> g.qubits[0]) & 1;
    bool other_a = (patch_a_mask >> g.qubits[1]) & 1;
    if (in_a == other_a) continue;
    if (g.kind != GateKind::Cz)
      throw InputError("cross-patch gate '" + g.name() + "' is not a CZ; cannot cut here");
    plan.cut_gates.push_back(i);
  }
  return plan;
}

std::pair<cdouble, ExecutionTrace> amplitude_cut_hybrid(const Circuit& c, const CutPlan& plan,
                                                        std::uint64_t x, const EngineOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  ExecutionTrace trace;

  Patch a, b;
  a.local_of_global.assign(c.n, 0);
  b.local_of_global.assign(c.n, 0);
  for (unsigned q = 0; q < c.n; ++q) {
    if ((plan.patch_a_mask >> q) & 1) a.local_of_global[q] = a.n++;
    else b.local_of_global[q] = b.n++;
  }
  if (a.n == 0 || b.n == 0) throw InputError("cut plan needs two nonempty patches");

  std::size_t next_cut = 0;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const auto& g = c.gates[i];
    if (g.kind == GateKind::Barrier) continue;
    const bool is_cut = next_cut < plan.cut_gates.size() && plan.cut_gates[next_cut] == i;
    if (is_cut) {
      unsigned qa = (plan.patch_a_mask >> g.qubits[0]) & 1 ? g.qubits[0] : g.qubits[1];
      unsigned qb = qa == g.qubits[0] ? g.qubits[1] : g.qubits[0];
      PatchOp pa{true, {}, a.local_of_global[qa], next_cut, false};
      PatchOp pb{true, {}, b.local_of_global[qb], next_cut, true};
      a.ops.push_back(pa);
      b.ops.push_back(pb);
      ++next_cut;
      continue;
    }
    bool in_a = (plan.patch_a_mask >> g.qubits[0]) & 1;
    for (unsigned q : g.qubits)
      if ((bool)((plan.patch_a_mask >> q) & 1) != in_a)
        throw InputError("cross-patch gate not listed in the cut plan");
    Patch& patch = in_a ? a : b;
    Gate local = g;
    for (auto& q : local.qubits) q = patch.local_of_global[q];
    patch.ops.push_back({false, std::move(local), 0, 0, false});
  }
  if (next_cut != plan.cut_gates.size()) throw InputError("cut plan does not match the circuit");

  std::uint64_t xa = 0, xb = 0;
  for (unsigned q = 0; q < c.n; ++q) {
    if (!((x >> q) & 1)) continue;
    if ((plan.patch_a_mask >> q) & 1) xa |= 1ULL << a.local_of_global[q];
    else xb |= 1ULL << b.local_of_global[q];
  }

  // Lexicographic sum over the 2^x patched configurations.
  cdouble value(0, 0);
  const unsigned x_count = plan.cut_count();
  for (std::uint64_t assignment = 0; assignment < (1ULL << x_count); ++assignment) {
    cdouble va = patch_amplitude(a, assignment, xa, opts, trace);
    if (va == cdouble(0, 0)) continue;
    cdouble vb = patch_amplitude(b, assignment, xb, opts, trace);
    value += va * vb;
  }
  trace.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return {value, trace};
}

}  // namespace stabsim
