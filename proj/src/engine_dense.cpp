#include "stabsim/engines.hpp"
#include "stabsim/errors.hpp"

namespace stabsim {

void ExecutionTrace::merge(const ExecutionTrace& o) {
  inner_product_count += o.inner_product_count;
  leaf_count += o.leaf_count;
  max_live_terms = std::max(max_live_terms, o.max_live_terms);
  peak_bytes = std::max(peak_bytes, o.peak_bytes);
  if (branch_counts.size() < o.branch_counts.size()) branch_counts.resize(o.branch_counts.size(), 0);
  for (std::size_t i = 0; i < o.branch_counts.size(); ++i) branch_counts[i] += o.branch_counts[i];
}

std::uint64_t parse_bitstring(const std::string& x, std::uint32_t n) {
  if (x.size() != n)
    throw InputError("bitstring length " + std::to_string(x.size()) + " does not match qubit count " +
                     std::to_string(n));
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == '1') v |= 1ULL << i;
    else if (x[i] != '0') throw InputError("bitstring must be 0/1 only: " + x);
  }
  return v;
}

CVec dense_state(const Circuit& c) {
  if (c.n > 14) throw InputError("dense engine limited to 14 qubits");
  CVec psi(std::size_t(1) << c.n, cdouble(0, 0));
  psi[0] = 1.0;
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::Barrier) continue;
    apply_gate_statevec(psi, g.qubits, g.matrix());
  }
  return psi;
}

cdouble amplitude_dense(const Circuit& c, std::uint64_t x) {
  auto psi = dense_state(c);
  if (x >= psi.size()) throw InputError("bitstring out of range");
  return psi[x];
}

cdouble amplitude_dense(const Circuit& c, const std::string& x) {
  return amplitude_dense(c, parse_bitstring(x, c.n));
}

}  // namespace stabsim
