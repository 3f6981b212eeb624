#ifndef STABSIM_PAULI_HPP
#define STABSIM_PAULI_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace stabsim {

inline constexpr unsigned kMaxQubits = 64;

// n-qubit Pauli operator  i^phase * X^x_bits * Z^z_bits  (Z factors act
// first; per-qubit factors commute across qubits).  Qubit j lives in bit j.
struct PauliOperator {
  std::uint32_t n = 0;
  std::uint64_t x_bits = 0;
  std::uint64_t z_bits = 0;
  std::uint8_t phase = 0;  // power of i, mod 4

  static PauliOperator identity(std::uint32_t n) { return {n, 0, 0, 0}; }
  // Single-qubit embeddings.
  static PauliOperator x(std::uint32_t n, unsigned q) { return {n, 1ULL << q, 0, 0}; }
  static PauliOperator z(std::uint32_t n, unsigned q) { return {n, 0, 1ULL << q, 0}; }
  static PauliOperator y(std::uint32_t n, unsigned q) { return {n, 1ULL << q, 1ULL << q, 1}; }

  bool commutes_with(const PauliOperator& o) const {
    return (popcount_parity(x_bits & o.z_bits) ^ popcount_parity(z_bits & o.x_bits)) == 0;
  }

  PauliOperator operator*(const PauliOperator& o) const {
    PauliOperator r;
    r.n = n;
    r.x_bits = x_bits ^ o.x_bits;
    r.z_bits = z_bits ^ o.z_bits;
    r.phase = static_cast<std::uint8_t>((phase + o.phase + 2 * popcount_parity(z_bits & o.x_bits)) & 3);
    return r;
  }

  // phase = popcount(x&z) mod 2 is the Hermiticity condition.
  bool is_hermitian() const { return ((phase ^ popcount_parity(x_bits & z_bits)) & 1) == 0; }

  bool is_identity_up_to_phase() const { return x_bits == 0 && z_bits == 0; }

  // P|y> = i^k |y ^ x_bits>;  returns k mod 4.
  int phase_at(std::uint64_t y) const { return (phase + 2 * popcount_parity(z_bits & y)) & 3; }

  PauliOperator negated() const { return {n, x_bits, z_bits, static_cast<std::uint8_t>((phase + 2) & 3)}; }

  bool operator==(const PauliOperator& o) const = default;

  // "+XYZI" style; leftmost letter is qubit 0.  Sign prefix +, -, +i, -i.
  std::string to_string() const;
  static PauliOperator from_string(std::uint32_t n, const std::string& s);

  // Dense 2^n x 2^n matrix, row-major, index = sum of bit_j << j.  Tests only.
  std::vector<std::complex<double>> to_dense() const;

  static int popcount_parity(std::uint64_t v) { return __builtin_parityll(v); }
};

}  // namespace stabsim

#endif
