#ifndef STABSIM_SOC_HPP
#define STABSIM_SOC_HPP

#include <string>
#include <vector>

#include "stabsim/dense_math.hpp"
#include "stabsim/gates.hpp"

namespace stabsim {

// One term of a Sum-over-Cliffords expansion U = sum_j a_j K_j; the word's
// gates apply in vector order (index 0 first).
struct CliffordSumTerm {
  cdouble coefficient;
  std::vector<Gate> word;
};

// Entries for t, tdg, w, fsim, cs, diag_pi6; qubit indices in the words are
// 0 (and 1 for two-qubit gates).
const std::vector<CliffordSumTerm>& sum_over_clifford(const std::string& gate_name);
bool has_sum_over_clifford(GateKind k);

// Dense reconstruction for verification.
CMat reconstruct_soc(const std::vector<CliffordSumTerm>& terms, unsigned arity);

}  // namespace stabsim

#endif
