#include "stabsim/soc.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "stabsim/errors.hpp"

namespace stabsim {

namespace {
constexpr double kPi = std::numbers::pi_v<double>;

std::map<std::string, std::vector<CliffordSumTerm>> build_table() {
  using std::exp;
  const cdouble i1(0, 1);
  std::map<std::string, std::vector<CliffordSumTerm>> m;

  // T = c (I + e^{-i pi/4} S), c = e^{i pi/8} / (2 cos(pi/8)).
  const cdouble ct = exp(i1 * (kPi / 8)) / (2 * std::cos(kPi / 8));
  m["t"] = {{ct, {}}, {ct * exp(-i1 * (kPi / 4)), {{GateKind::S, {0}}}}};
  m["tdg"] = {{std::conj(ct), {}}, {std::conj(ct) * exp(i1 * (kPi / 4)), {{GateKind::Sdg, {0}}}}};

  // CS = ((1+i)/2)(I - i CZ).
  m["cs"] = {{cdouble(0.5, 0.5), {}}, {cdouble(0.5, -0.5), {{GateKind::Cz, {0, 1}}}}};

  // diag(1,1,1,e^{i pi/6}) = cos(pi/12) e^{i pi/12} (I - i tan(pi/12) CZ).
  const cdouble cd = std::cos(kPi / 12) * exp(i1 * (kPi / 12));
  m["diag_pi6"] = {{cd, {}}, {cd * (-i1) * std::tan(kPi / 12), {{GateKind::Cz, {0, 1}}}}};

  // sqrt(W) = T sqrt(X) Tdg expanded through the two-term T forms: four words.
  const double cw = 1.0 / (2.0 + std::sqrt(2.0));  // |c_T|^2
  const Gate sx0{GateKind::Sx, {0}}, s0{GateKind::S, {0}}, sdg0{GateKind::Sdg, {0}};
  m["w"] = {
      {cw, {sx0}},
      {cw * exp(i1 * (kPi / 4)), {sdg0, sx0}},        // sqrt(X) Sdg
      {cw * exp(-i1 * (kPi / 4)), {sx0, s0}},         // S sqrt(X)
      {cw, {sdg0, sx0, s0}},                          // S sqrt(X) Sdg
  };

  // fsim = iswap^dag diag(1,1,1,e^{-i pi/6}); two Clifford words.
  const cdouble cf = std::cos(kPi / 12) * exp(-i1 * (kPi / 12));
  const std::vector<Gate> iswapdg = {{GateKind::Sdg, {0}}, {GateKind::Sdg, {1}},
                                     {GateKind::Swap, {0, 1}}, {GateKind::Cz, {0, 1}}};
  std::vector<Gate> cz_then_iswapdg = {{GateKind::Cz, {0, 1}}};
  cz_then_iswapdg.insert(cz_then_iswapdg.end(), iswapdg.begin(), iswapdg.end());
  m["fsim"] = {{cf, iswapdg}, {cf * i1 * std::tan(kPi / 12), cz_then_iswapdg}};

  return m;
}

const std::map<std::string, std::vector<CliffordSumTerm>>& table() {
  static const auto t = build_table();
  return t;
}
}  // namespace

const std::vector<CliffordSumTerm>& sum_over_clifford(const std::string& gate_name) {
  auto it = table().find(gate_name);
  if (it == table().end()) throw InputError("no Sum-over-Cliffords entry for '" + gate_name + "'");
  return it->second;
}

bool has_sum_over_clifford(GateKind k) {
  switch (k) {
    case GateKind::T: case GateKind::Tdg: case GateKind::Cs:
    case GateKind::W: case GateKind::FSim: return true;
    default: return false;
  }
}

CMat reconstruct_soc(const std::vector<CliffordSumTerm>& terms, unsigned arity) {
  const std::size_t dim = std::size_t(1) << arity;
  CMat acc(dim);
  for (const auto& t : terms) {
    CMat word = CMat::identity(dim);
    for (const auto& g : t.word) {
      CMat full = embed_gate(arity, g.qubits, g.matrix());
      word = mat_mul(full, word);
    }
    acc = mat_add(acc, mat_scale(word, t.coefficient));
  }
  return acc;
}

}  // namespace stabsim
