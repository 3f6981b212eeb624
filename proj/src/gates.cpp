#include "stabsim/gates.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "stabsim/errors.hpp"

namespace stabsim {

namespace {
constexpr double kPi = std::numbers::pi_v<double>;
const double kInv2 = 0.70710678118654752440;

struct GateInfo {
  std::string name;
  unsigned arity;
  bool clifford;
  bool diagonal;
};

const std::array<GateInfo, 18>& table() {
  static const std::array<GateInfo, 18> t = {{
      {"h", 1, true, false},
      {"s", 1, true, true},
      {"sdg", 1, true, true},
      {"x", 1, true, false},
      {"y", 1, true, false},
      {"z", 1, true, true},
      {"sx", 1, true, false},
      {"sy", 1, true, false},
      {"cx", 2, true, false},
      {"cz", 2, true, true},
      {"swap", 2, true, false},
      {"iswap", 2, true, false},
      {"t", 1, false, true},
      {"tdg", 1, false, true},
      {"cs", 2, false, true},
      {"w", 1, false, false},
      {"fsim", 2, false, false},
      {"barrier", 0, true, true},
  }};
  return t;
}

CMat build_matrix(GateKind k) {
  using std::exp;
  const cdouble i1(0, 1);
  switch (k) {
    case GateKind::H: return CMat(2, {kInv2, kInv2, kInv2, -kInv2});
    case GateKind::S: return CMat(2, {1, 0, 0, i1});
    case GateKind::Sdg: return CMat(2, {1, 0, 0, -i1});
    case GateKind::X: return CMat(2, {0, 1, 1, 0});
    case GateKind::Y: return CMat(2, {0, -i1, i1, 0});
    case GateKind::Z: return CMat(2, {1, 0, 0, -1});
    case GateKind::Sx: return CMat(2, {kInv2, -i1 * kInv2, -i1 * kInv2, kInv2});
    case GateKind::Sy: return CMat(2, {kInv2, -kInv2, kInv2, kInv2});
    case GateKind::Cx: return CMat(4, {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0});
    case GateKind::Cz: return CMat(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
    case GateKind::Swap: return CMat(4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
    case GateKind::ISwap: return CMat(4, {1, 0, 0, 0, 0, 0, i1, 0, 0, i1, 0, 0, 0, 0, 0, 1});
    case GateKind::T: return CMat(2, {1, 0, 0, exp(i1 * (kPi / 4))});
    case GateKind::Tdg: return CMat(2, {1, 0, 0, exp(-i1 * (kPi / 4))});
    case GateKind::Cs: return CMat(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, i1});
    case GateKind::W:
      // sqrt(W) = T sqrt(X) Tdg, W = (X+Y)/sqrt2; eigenvalues e^{+-i pi/4}.
      return CMat(2, {kInv2, -exp(i1 * (kPi / 4)) * kInv2, exp(-i1 * (kPi / 4)) * kInv2, kInv2});
    case GateKind::FSim:
      return CMat(4, {1, 0, 0, 0, 0, 0, -i1, 0, 0, -i1, 0, 0, 0, 0, 0, exp(-i1 * (kPi / 6))});
    case GateKind::Barrier: return CMat::identity(1);
  }
  throw ConsistencyError("unknown gate kind");
}
}  // namespace

const std::string& gate_name(GateKind k) { return table()[static_cast<std::size_t>(k)].name; }

std::optional<GateKind> gate_kind_from_name(const std::string& name) {
  static const std::unordered_map<std::string, GateKind> lookup = [] {
    std::unordered_map<std::string, GateKind> m;
    for (std::size_t i = 0; i < table().size(); ++i) m[table()[i].name] = static_cast<GateKind>(i);
    return m;
  }();
  auto it = lookup.find(name);
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

unsigned gate_arity(GateKind k) { return table()[static_cast<std::size_t>(k)].arity; }
bool gate_is_clifford(GateKind k) { return table()[static_cast<std::size_t>(k)].clifford; }
bool gate_is_diagonal(GateKind k) { return table()[static_cast<std::size_t>(k)].diagonal; }

const CMat& gate_matrix(GateKind k) {
  static const std::array<CMat, 18> mats = [] {
    std::array<CMat, 18> m;
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = build_matrix(static_cast<GateKind>(i));
    return m;
  }();
  return mats[static_cast<std::size_t>(k)];
}

void apply_clifford_gate(StabilizerState& state, const Gate& g) {
  const auto& q = g.qubits;
  switch (g.kind) {
    case GateKind::H: state.h(q[0]); return;
    case GateKind::S: state.s(q[0]); return;
    case GateKind::Sdg: state.sdg(q[0]); return;
    case GateKind::X: state.x(q[0]); return;
    case GateKind::Y: state.y(q[0]); return;
    case GateKind::Z: state.z(q[0]); return;
    case GateKind::Sx: state.sx(q[0]); return;
    case GateKind::Sy: state.sy(q[0]); return;
    case GateKind::Cx: state.cx(q[0], q[1]); return;
    case GateKind::Cz: state.cz(q[0], q[1]); return;
    case GateKind::Swap: state.swap(q[0], q[1]); return;
    case GateKind::ISwap: state.iswap(q[0], q[1]); return;
    case GateKind::Barrier: return;
    default: throw InputError("apply_clifford on non-Clifford gate " + g.name());
  }
}

void apply_clifford_gate_inverse(StabilizerState& state, const Gate& g) {
  const auto& q = g.qubits;
  switch (g.kind) {
    case GateKind::H: state.h(q[0]); return;
    case GateKind::S: state.sdg(q[0]); return;
    case GateKind::Sdg: state.s(q[0]); return;
    case GateKind::X: state.x(q[0]); return;
    case GateKind::Y: state.y(q[0]); return;
    case GateKind::Z: state.z(q[0]); return;
    case GateKind::Sx:  // sx^-1 = S H S
      state.s(q[0]); state.h(q[0]); state.s(q[0]); return;
    case GateKind::Sy:  // sy^-1 = Z H
      state.h(q[0]); state.z(q[0]); return;
    case GateKind::Cx: state.cx(q[0], q[1]); return;
    case GateKind::Cz: state.cz(q[0], q[1]); return;
    case GateKind::Swap: state.swap(q[0], q[1]); return;
    case GateKind::ISwap:  // iswap^-1 = CZ SWAP Sdg Sdg
      state.sdg(q[0]); state.sdg(q[1]); state.swap(q[0], q[1]); state.cz(q[0], q[1]); return;
    case GateKind::Barrier: return;
    default: throw InputError("apply_clifford on non-Clifford gate " + g.name());
  }
}

StabilizerState apply_clifford(const StabilizerState& state, const std::string& name,
                               const std::vector<unsigned>& qubits) {
  auto kind = gate_kind_from_name(name);
  if (!kind || !gate_is_clifford(*kind) || *kind == GateKind::Barrier)
    throw InputError("unknown or non-Clifford gate: " + name);
  if (qubits.size() != gate_arity(*kind)) throw InputError("gate " + name + " arity mismatch");
  if (qubits.size() == 2 && qubits[0] == qubits[1]) throw InputError("gate qubits must be distinct");
  StabilizerState out = state;
  apply_clifford_gate(out, Gate{*kind, qubits});
  return out;
}

}  // namespace stabsim
