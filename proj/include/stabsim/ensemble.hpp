#ifndef STABSIM_ENSEMBLE_HPP
#define STABSIM_ENSEMBLE_HPP

#include <string>

#include "stabsim/circuit.hpp"

namespace stabsim {

enum class EnsembleFamily { Cz, Cs, SupremacyLike };

EnsembleFamily ensemble_family_from_name(const std::string& name);

// Alternating single-qubit and two-qubit rounds on a 1-D brickwork layout:
// even cycles pair (0,1),(2,3),..., odd cycles pair (1,2),(3,4),...
//
// cz / cs families: each qubit draws T with probability p, else a uniform
// Clifford from {h, s, sx, sy}; the two-qubit round applies cz / cs.
// supremacy_like: p is ignored; single-qubit gates are uniform over
// {sx, sy, w} with no repeat on the same qubit in consecutive cycles, and the
// two-qubit gate is fsim.
//
// Deterministic for a fixed seed: each qubit consumes its own SplitMix64
// stream, one draw per cycle.
Circuit ensemble_generate(EnsembleFamily family, std::uint32_t n, unsigned cycles, double p,
                          std::uint64_t seed);

}  // namespace stabsim

#endif
