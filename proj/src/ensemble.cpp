#include "stabsim/ensemble.hpp"

#include "stabsim/errors.hpp"
#include "stabsim/rng.hpp"

namespace stabsim {

EnsembleFamily ensemble_family_from_name(const std::string& name) {
  if (name == "cz") return EnsembleFamily::Cz;
  if (name == "cs") return EnsembleFamily::Cs;
  if (name == "supremacy_like") return EnsembleFamily::SupremacyLike;
  throw InputError("unknown ensemble family '" + name + "' (cz, cs, supremacy_like)");
}

Circuit ensemble_generate(EnsembleFamily family, std::uint32_t n, unsigned cycles, double p,
                          std::uint64_t seed) {
  if (n < 1 || n > kMaxQubits) throw InputError("qubit count out of range");
  if (p < 0.0 || p > 1.0) throw InputError("p must lie in [0, 1]");

  Circuit c;
  c.n = n;
  std::vector<SplitMix64> stream;
  stream.reserve(n);
  for (unsigned q = 0; q < n; ++q) stream.push_back(SplitMix64::stream(seed, q));

  static const GateKind clifford_pool[4] = {GateKind::H, GateKind::S, GateKind::Sx, GateKind::Sy};
  static const GateKind supremacy_pool[3] = {GateKind::Sx, GateKind::Sy, GateKind::W};
  std::vector<int> prev(n, -1);

  for (unsigned cycle = 0; cycle < cycles; ++cycle) {
    for (unsigned q = 0; q < n; ++q) {
      if (family == EnsembleFamily::SupremacyLike) {
        // never the same gate twice in a row on one qubit
        int pick;
        if (prev[q] < 0) {
          pick = static_cast<int>(stream[q].next_below(3));
        } else {
          pick = static_cast<int>(stream[q].next_below(2));
          if (pick >= prev[q]) ++pick;
        }
        prev[q] = pick;
        c.gates.push_back({supremacy_pool[pick], {q}});
      } else {
        std::uint64_t word = stream[q].next();
        double u = static_cast<double>(word >> 11) * (1.0 / 9007199254740992.0);
        if (u < p) c.gates.push_back({GateKind::T, {q}});
        else c.gates.push_back({clifford_pool[word & 3], {q}});
      }
    }
    GateKind two = family == EnsembleFamily::Cz ? GateKind::Cz
                   : family == EnsembleFamily::Cs ? GateKind::Cs
                                                  : GateKind::FSim;
    for (unsigned q = cycle % 2; q + 1 < n; q += 2) c.gates.push_back({two, {q, q + 1}});
  }
  return c;
}

}  // namespace stabsim
