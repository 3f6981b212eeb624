#ifndef STABSIM_GATES_HPP
#define STABSIM_GATES_HPP

#include <optional>
#include <string>
#include <vector>

#include "stabsim/dense_math.hpp"
#include "stabsim/stabilizer_state.hpp"

namespace stabsim {

enum class GateKind {
  H, S, Sdg, X, Y, Z, Sx, Sy, Cx, Cz, Swap, ISwap,  // Clifford
  T, Tdg, Cs, W, FSim,                              // non-Clifford
  Barrier,
};

const std::string& gate_name(GateKind k);
std::optional<GateKind> gate_kind_from_name(const std::string& name);
unsigned gate_arity(GateKind k);
bool gate_is_clifford(GateKind k);
bool gate_is_diagonal(GateKind k);

// Dense matrix in the gate's own index space; index bit j = j-th listed qubit.
const CMat& gate_matrix(GateKind k);

struct Gate {
  GateKind kind;
  std::vector<unsigned> qubits;

  bool is_clifford() const { return gate_is_clifford(kind); }
  bool is_diagonal() const { return gate_is_diagonal(kind); }
  const std::string& name() const { return gate_name(kind); }
  const CMat& matrix() const { return gate_matrix(kind); }
  bool operator==(const Gate& o) const = default;
};

// Exact Clifford application (global phase included).  Throws on non-Clifford.
void apply_clifford_gate(StabilizerState& state, const Gate& g);
void apply_clifford_gate_inverse(StabilizerState& state, const Gate& g);

// Named-gate entry point: dispatches on the gate name, returns a new state.
StabilizerState apply_clifford(const StabilizerState& state, const std::string& name,
                               const std::vector<unsigned>& qubits);

}  // namespace stabsim

#endif
