#include "stabsim/pauli.hpp"

#include "stabsim/errors.hpp"

namespace stabsim {

std::string PauliOperator::to_string() const {
  static const char* signs[4] = {"+", "+i", "-", "-i"};
  int y_count = __builtin_popcountll(x_bits & z_bits);
  std::string s = signs[(phase - y_count) & 3];
  for (unsigned q = 0; q < n; ++q) {
    bool xb = (x_bits >> q) & 1, zb = (z_bits >> q) & 1;
    s += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return s;
}

PauliOperator PauliOperator::from_string(std::uint32_t n, const std::string& s) {
  PauliOperator p = PauliOperator::identity(n);
  std::size_t i = 0;
  int sign_phase = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign_phase = 2;
    ++i;
    if (i < s.size() && s[i] == 'i') { sign_phase += 1; ++i; }
  }
  unsigned q = 0;
  int y_count = 0;
  for (; i < s.size(); ++i, ++q) {
    if (q >= n) throw InputError("pauli string longer than qubit count: " + s);
    switch (s[i]) {
      case 'I': case 'i': break;
      case 'X': p.x_bits |= 1ULL << q; break;
      case 'Z': p.z_bits |= 1ULL << q; break;
      case 'Y': p.x_bits |= 1ULL << q; p.z_bits |= 1ULL << q; ++y_count; break;
      default: throw InputError(std::string("bad pauli letter '") + s[i] + "' in " + s);
    }
  }
  if (q != n) throw InputError("pauli string shorter than qubit count: " + s);
  p.phase = static_cast<std::uint8_t>((sign_phase + y_count) & 3);
  return p;
}

std::vector<std::complex<double>> PauliOperator::to_dense() const {
  const std::uint64_t dim = 1ULL << n;
  std::vector<std::complex<double>> m(dim * dim, 0.0);
  static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (std::uint64_t col = 0; col < dim; ++col)
    m[(col ^ x_bits) * dim + col] = ipow[phase_at(col)];
  return m;
}

}  // namespace stabsim
