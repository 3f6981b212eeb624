#ifndef STABSIM_COST_HPP
#define STABSIM_COST_HPP

#include <cstdint>
#include <optional>
#include <ostream>

namespace stabsim {

enum class CostMethod { Direct, Feynman, Hybrid, RecursivePath, StabilizerRank, Spir, Spc };
enum class GateFamily { Cz, Cs };

// Inputs for the closed-form scaling rows; k is log2 of the per-layer
// projector rank, x the cross-patch entangling-gate count, t the
// non-Clifford gate count.
struct CostQuery {
  CostMethod method = CostMethod::Direct;
  double n = 0;
  double m = 0;
  double d = 0;
  double d_nc = 0;
  double k = 0;
  std::optional<double> x;
  std::optional<double> t;
};

struct CostEstimate {
  double log2_time = 0;
  double log2_space = 0;
};

CostEstimate predicted_cost(const CostQuery& q);

// Threshold density of single-qubit non-Clifford gates above which the
// path-recursion scaling beats the 2^{0.47 t} stabilizer-rank scaling.
double threshold_p(GateFamily family, double d_nc);

// Smallest integer non-Clifford depth (>= 2) with threshold_p <= p.
std::optional<std::uint64_t> crossover_dnc(GateFamily family, double p, std::uint64_t limit = 1000000);

// Average-case per-cycle rank accounting for supremacy-style circuits.
struct SupremacyCensus {
  double fsim_w1 = 10;      // fsim * sqrt(W) on one leg (rank 12)
  double fsim_c = 10;       // fsim * Clifford (rank 4)
  double fsim_w1w2 = 2;     // fsim * sqrt(W) on both legs (rank 10)
  double lone_w_pairs = 1;  // leftover sqrt(W) gates taken in pairs (rank 6)
  double lone_w_singles = 1;  // leftover single sqrt(W) (rank 3)
};
double supremacy_cycle_log2_kappa(const SupremacyCensus& census);

// CSV columns: d_nc, p_threshold_cz, p_threshold_cs.
void emit_threshold_csv(std::ostream& out, unsigned lo, unsigned hi);

}  // namespace stabsim

#endif
