#ifndef STABSIM_ENGINES_HPP
#define STABSIM_ENGINES_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stabsim/circuit.hpp"
#include "stabsim/layered.hpp"

namespace stabsim {

struct ExecutionTrace {
  std::uint64_t inner_product_count = 0;
  std::uint64_t leaf_count = 0;
  std::uint64_t max_live_terms = 0;
  std::uint64_t peak_bytes = 0;
  double wall_ms = 0.0;
  std::vector<std::uint64_t> branch_counts;  // SPIR: per recursion level

  void merge(const ExecutionTrace& o);
};

enum class SplitRule { Middle, Leftmost, Rightmost };

struct EngineOptions {
  int threads = 1;
  std::uint64_t mem_cap = 1ULL << 22;  // max live terms in a layer
  bool prune = false;                  // drop |coeff| < 1e-12 terms in SPC
  SplitRule split = SplitRule::Middle;
};

// q0 is the leftmost character.
std::uint64_t parse_bitstring(const std::string& x, std::uint32_t n);

// Dense statevector oracle, n <= 14.
cdouble amplitude_dense(const Circuit& c, std::uint64_t x);
cdouble amplitude_dense(const Circuit& c, const std::string& x);
CVec dense_state(const Circuit& c);  // full final statevector

// Stabilizer path-integral recursion: polynomial space, splits at the middle
// non-Clifford layer.
std::pair<cdouble, ExecutionTrace> amplitude_spir(const LayeredCircuit& lc, std::uint64_t x,
                                                  const EngineOptions& opts = {});

struct StabilizerSum {
  std::vector<std::pair<cdouble, StabilizerState>> terms;
};

// Stabilizer projector contraction: the whole state as a kappa-term sum.
std::pair<StabilizerSum, ExecutionTrace> evolve_spc(const LayeredCircuit& lc,
                                                    const EngineOptions& opts = {});
std::pair<cdouble, ExecutionTrace> amplitude_spc(const LayeredCircuit& lc, std::uint64_t x,
                                                 const EngineOptions& opts = {});

// Sum-over-Cliffords prefix, switching to SPC at the first layer whose rank
// is below the running Clifford term count.
std::pair<cdouble, ExecutionTrace> amplitude_spc_soc(const LayeredCircuit& lc, std::uint64_t x,
                                                     const EngineOptions& opts = {});

// Two-patch circuit cutting over cross-patch CZ gates.
struct CutPlan {
  std::uint64_t patch_a_mask = 0;
  std::vector<std::size_t> cut_gates;  // indices into Circuit::gates
  unsigned cut_count() const { return static_cast<unsigned>(cut_gates.size()); }
};

CutPlan make_cut_plan(const Circuit& c, std::uint64_t patch_a_mask);
std::pair<cdouble, ExecutionTrace> amplitude_cut_hybrid(const Circuit& c, const CutPlan& plan,
                                                        std::uint64_t x, const EngineOptions& opts = {});

// Work predictions used to budget randomized suites: the exact inner-product
// count of the SPIR recursion (zero short-circuiting aside) and the SPC
// layer-to-layer product count.
double spir_inner_product_estimate(const LayeredCircuit& lc, SplitRule rule = SplitRule::Middle);
double spc_inner_product_estimate(const LayeredCircuit& lc);

namespace detail {
void apply_clifford_gates(std::vector<std::pair<cdouble, StabilizerState>>& terms,
                          const std::vector<Gate>& gates);
void project_onto_layer(std::vector<std::pair<cdouble, StabilizerState>>& terms,
                        const PaddedLayerView& view, const EngineOptions& opts, int layer_index,
                        ExecutionTrace& trace);
StabilizerState apply_layer(const std::vector<Gate>& gates, StabilizerState st);
StabilizerState apply_layer_inverse(const std::vector<Gate>& gates, StabilizerState st);
}  // namespace detail

}  // namespace stabsim

#endif
