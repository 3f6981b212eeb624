#ifndef STABSIM_TEST_HELPERS_HPP
#define STABSIM_TEST_HELPERS_HPP

#include <complex>
#include <vector>

#include "stabsim/dense_math.hpp"
#include "stabsim/gates.hpp"
#include "stabsim/rng.hpp"
#include "stabsim/stabilizer_state.hpp"

namespace stabsim::testing {

inline double max_abs_diff_vec(const CVec& a, const CVec& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Random word over the full supported Clifford set, applied in parallel to a
// StabilizerState and (via dense matrices) to a statevector.
struct CliffordWord {
  std::vector<Gate> gates;
};

inline CliffordWord random_clifford_word(unsigned n, unsigned len, std::uint64_t seed) {
  static const GateKind pool1[] = {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X,
                                   GateKind::Y, GateKind::Z, GateKind::Sx, GateKind::Sy};
  static const GateKind pool2[] = {GateKind::Cx, GateKind::Cz, GateKind::Swap, GateKind::ISwap};
  SplitMix64 rng(seed);
  CliffordWord w;
  for (unsigned i = 0; i < len; ++i) {
    if (n >= 2 && rng.next_below(3) == 0) {
      unsigned a = static_cast<unsigned>(rng.next_below(n));
      unsigned b = static_cast<unsigned>(rng.next_below(n - 1));
      if (b >= a) ++b;
      w.gates.push_back({pool2[rng.next_below(4)], {a, b}});
    } else {
      unsigned q = static_cast<unsigned>(rng.next_below(n));
      w.gates.push_back({pool1[rng.next_below(8)], {q}});
    }
  }
  return w;
}

inline void apply_word(StabilizerState& st, const CliffordWord& w) {
  for (const auto& g : w.gates) apply_clifford_gate(st, g);
}

inline void apply_word_dense(CVec& psi, const CliffordWord& w) {
  for (const auto& g : w.gates) apply_gate_statevec(psi, g.qubits, g.matrix());
}

inline CVec dense_basis(unsigned n, std::uint64_t bits) {
  CVec v(std::size_t(1) << n, 0.0);
  v[bits] = 1.0;
  return v;
}

}  // namespace stabsim::testing

#endif
