#include "stabsim/state_catalog.hpp"

#include <cmath>

#include "stabsim/errors.hpp"

namespace stabsim {

namespace {

// z -> a basis change on one qubit of a state.
void base_change(StabilizerState& st, unsigned q, char axis) {
  switch (axis) {
    case 'z': break;
    case 'x': st.h(q); break;
    case 'y': st.h(q); st.s(q); break;  // |0> -> |+i>, |1> -> |-i>
    default: throw InputError(std::string("bad axis '") + axis + "'");
  }
}

char axis_of(char c) {
  switch (c) {
    case 'z': case 'Z': return 'z';
    case 'x': case 'X': return 'x';
    case 'y': case 'Y': return 'y';
    default: throw InputError(std::string("bad state label letter '") + c + "'");
  }
}

bool is_bar(char c) { return c == 'Z' || c == 'X' || c == 'Y'; }

StabilizerState single(char c) {
  auto st = StabilizerState::basis_state(1, is_bar(c) ? 1 : 0);
  base_change(st, 0, axis_of(c));
  return st;
}

StabilizerState pair_state(const std::string& label) {
  // "Phi<s>_ab" or "Psi<s>_ab"
  auto us = label.find('_');
  if (us == std::string::npos || us + 3 != label.size() || label.size() < 6)
    throw InputError("bad pair label: " + label);
  std::string head = label.substr(0, us);
  bool phi = head.rfind("Phi", 0) == 0;
  if (!phi && head.rfind("Psi", 0) != 0) throw InputError("bad pair label: " + label);
  std::string s = head.substr(3);
  char a = label[us + 1], b = label[us + 2];

  auto st = StabilizerState::basis_state(2, 0);
  st.h(0);
  st.cx(0, 1);  // (|00> + |11>)/sqrt2
  if (s == "-") st.z(0);
  else if (s == "+i") st.s(0);
  else if (s == "-i") st.sdg(0);
  else if (s != "+") throw InputError("bad pair sign in label: " + label);
  if (!phi) st.x(1);  // -> (|01> + s|10>)/sqrt2
  // bars flip the computational pattern before the base change
  if (is_bar(a)) st.x(0);
  if (is_bar(b)) st.x(1);
  base_change(st, 0, axis_of(a));
  base_change(st, 1, axis_of(b));
  return st;
}

}  // namespace

StabilizerState labeled_state(const std::string& label) {
  if (label.size() == 1) return single(label[0]);
  if (label.size() == 2) {
    auto st = StabilizerState::basis_state(2, (is_bar(label[0]) ? 1 : 0) | (is_bar(label[1]) ? 2 : 0));
    base_change(st, 0, axis_of(label[0]));
    base_change(st, 1, axis_of(label[1]));
    return st;
  }
  return pair_state(label);
}

namespace {
std::vector<CatalogEntry> build_one_qubit() {
  std::vector<CatalogEntry> v;
  for (char c : std::string("zZxXyY")) v.push_back({std::string(1, c), single(c)});
  return v;
}

std::vector<CatalogEntry> build_two_qubit() {
  std::vector<CatalogEntry> v;
  const std::string letters = "zZxXyY";
  for (char a : letters)
    for (char b : letters) v.push_back({std::string{a, b}, labeled_state(std::string{a, b})});
  // 24 entangled states; the +-i pair labels collide across bases, dedupe.
  auto overlaps_existing = [&](const StabilizerState& st) {
    for (const auto& e : v)
      if (std::abs(std::abs(inner_product(e.state, st).to_complex()) - 1.0) < 1e-9) return true;
    return false;
  };
  for (const char* kind : {"Phi", "Psi"})
    for (const char* s : {"+", "-", "+i", "-i"})
      for (char a : std::string("zxy"))
        for (char b : std::string("zxy")) {
          std::string name = std::string(kind) + s + "_" + a + b;
          auto st = labeled_state(name);
          if (!overlaps_existing(st)) v.push_back({name, st});
        }
  if (v.size() != 60) throw ConsistencyError("two-qubit stabilizer catalog must have 60 states");
  return v;
}
}  // namespace

const std::vector<CatalogEntry>& one_qubit_catalog() {
  static const std::vector<CatalogEntry> v = build_one_qubit();
  return v;
}

const std::vector<CatalogEntry>& two_qubit_catalog() {
  static const std::vector<CatalogEntry> v = build_two_qubit();
  return v;
}

}  // namespace stabsim
