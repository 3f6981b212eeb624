#ifndef STABSIM_LAYERED_HPP
#define STABSIM_LAYERED_HPP

#include <string>
#include <vector>

#include "stabsim/circuit.hpp"
#include "stabsim/decomposition.hpp"

namespace stabsim {

// A composite non-Clifford gate: one or more fused primitive gates acting on
// a common qubit set, with its projector decomposition resolved.
struct Placement {
  std::vector<unsigned> qubits;      // sorted ascending
  std::vector<Gate> primitive_gates; // original gates in circuit order
  bool diagonal = false;
  CVec diag;                         // 2^k entries when diagonal
  CMat matrix;                       // composite matrix (arity <= 2, or any diagonal)
  ProjectorDecomposition decomp;
};

struct NonCliffordLayer {
  std::vector<Placement> placements;
};

// Alternating structure C_0 N_0 C_1 N_1 ... N_{d-1} C_d (gates of C_k apply
// before N_k).  Clifford gates commute backward over disjoint open placements
// during construction, so recomposition preserves the circuit unitary.
struct LayeredCircuit {
  std::uint32_t n = 0;
  Circuit source;
  std::vector<std::vector<Gate>> clifford_layers;  // d_nc + 1 entries
  std::vector<NonCliffordLayer> nc_layers;

  unsigned d_nc() const { return static_cast<unsigned>(nc_layers.size()); }
  std::vector<GatePlacement> gate_placements(std::size_t layer) const;
  PaddedLayerView padded_view(std::size_t layer) const;
  std::uint64_t padded_kappa(std::size_t layer) const;
};

// Greedy maximal Clifford layers; adjacent non-Clifford gates on overlapping
// qubits fuse into composite placements resolved against the decomposition
// database (diagonal / database / search fallbacks).
LayeredCircuit layerize(const Circuit& c);

// Merge runs of all-diagonal non-Clifford layers separated only by diagonal
// (or empty) Clifford layers; the circuit unitary is preserved.
LayeredCircuit compress_diagonal_layers(const LayeredCircuit& lc);

struct CircuitStats {
  unsigned n = 0;
  std::size_t m = 0;   // gate count
  unsigned d = 0;      // circuit depth
  unsigned d_nc = 0;   // non-Clifford depth
  std::size_t t = 0;   // non-Clifford gate count
  std::vector<double> kappa_log2;  // per non-Clifford layer, padded
  double spir_log2_time = 0.0;
  double spir_log2_space = 0.0;
  double spc_log2_time = 0.0;
  double spc_log2_space = 0.0;
};

CircuitStats stats(const LayeredCircuit& lc);

}  // namespace stabsim

#endif
