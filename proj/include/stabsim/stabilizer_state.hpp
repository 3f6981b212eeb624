#ifndef STABSIM_STABILIZER_STATE_HPP
#define STABSIM_STABILIZER_STATE_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stabsim/exact_scalar.hpp"
#include "stabsim/pauli.hpp"

namespace stabsim {

// Phase-exact stabilizer ket:  dense(state) = scalar * |u>, where |u> is the
// unit ket fixed by the n commuting generators together with a ket witness
// (a support point `pivot` and its exact amplitude in |u>).  Projections
// produce unnormalized states; the norm lives in `scalar`.
class StabilizerState {
 public:
  StabilizerState() = default;

  static StabilizerState basis_state(std::uint32_t n, std::uint64_t bits);
  static StabilizerState basis_state(const std::string& bits);  // "101", q0 first
  static StabilizerState zero_state(std::uint32_t n);           // the zero vector
  // Build from generators; the ket phase is fixed by declaring the amplitude
  // at `pivot` positive real.  Validates commutation, independence,
  // Hermiticity and that the pivot lies in the support.
  static StabilizerState from_generators(std::uint32_t n, std::vector<PauliOperator> gens,
                                         std::uint64_t pivot);
  // No validation; for callers assembling states from already-valid parts.
  static StabilizerState unchecked(std::uint32_t n, std::vector<PauliOperator> gens,
                                   std::uint64_t pivot, const ExactScalar& pivot_amp);

  std::uint32_t num_qubits() const { return n_; }
  bool is_zero() const { return zero_; }
  const ExactScalar& scalar() const { return scalar_; }
  void set_scalar(const ExactScalar& s) { scalar_ = s; }
  std::uint64_t pivot() const { return pivot_; }
  const ExactScalar& pivot_amp() const { return pivot_amp_; }
  const std::vector<PauliOperator>& generators() const { return gens_; }

  // All generators diagonal <=> the state is |pivot> up to scalar.
  bool is_basis_state() const;

  // ---- Clifford gates, in place, exact global phase ----
  void h(unsigned q);
  void s(unsigned q);
  void sdg(unsigned q);
  void x(unsigned q);
  void y(unsigned q);
  void z(unsigned q);
  void sx(unsigned q);  // sqrt(X) = Sdg H Sdg
  void sy(unsigned q);  // sqrt(Y) = H Z
  void cx(unsigned c, unsigned t);
  void cz(unsigned a, unsigned b);
  void swap(unsigned a, unsigned b);
  void iswap(unsigned a, unsigned b);

  // (I + sign*P)/2, exact; P must be Hermitian.
  void project_pauli_inplace(const PauliOperator& p, int sign);

  // <y|state>, including scalar.
  ExactScalar amplitude(std::uint64_t y) const;

  std::vector<std::complex<double>> to_dense(unsigned limit = 14) const;

  bool same_state(const StabilizerState& o) const;  // representation equality

 private:
  friend class AmplitudeOracle;
  friend ExactScalar inner_product(const StabilizerState&, const StabilizerState&);

  void check_qubit(unsigned q) const;
  // amp_u(pivot ^ v) = i^t * amp_u(pivot); nullopt when outside the support.
  std::optional<int> rel_phase(std::uint64_t v) const;
  // Witness update shared by h/sx/sy: the gate's 2x2 acts on qubit q with
  // entries i^{e[r][c]} / sqrt2 (all four entries nonzero for h, sx, sy).
  void superpose_witness(unsigned q, const int e[2][2]);

  std::uint32_t n_ = 0;
  bool zero_ = false;
  std::vector<PauliOperator> gens_;
  std::uint64_t pivot_ = 0;
  ExactScalar pivot_amp_ = ExactScalar::one();
  ExactScalar scalar_ = ExactScalar::one();
};

// ---- free operations (pure; return new states) ----

StabilizerState basis_state(const std::string& bits);

ExactScalar inner_product(const StabilizerState& bra, const StabilizerState& ket);

StabilizerState project_pauli(const StabilizerState& state, const PauliOperator& p, int sign);

// (|target><target| (x) I_rest) * state; target lives on `qubits`.
StabilizerState project_subsystem(const StabilizerState& state,
                                  const StabilizerState& target,
                                  const std::vector<unsigned>& qubits);

std::vector<std::complex<double>> to_dense(const StabilizerState& state, unsigned limit = 14);

// Random basis state pushed through a word of ~2n^2 gates from {h, s, cx}.
StabilizerState random_stabilizer_state(std::uint32_t n, std::uint64_t seed);

// Embed a k-qubit Pauli at the given qubit positions of an n-qubit register.
PauliOperator embed_pauli(const PauliOperator& p, std::uint32_t n,
                          const std::vector<unsigned>& qubits);

// Repeated-amplitude queries against one state: builds the GF(2) echelon of
// the generators' X parts once, then each query costs O(n) word operations.
class AmplitudeOracle {
 public:
  explicit AmplitudeOracle(const StabilizerState& state);
  ExactScalar amplitude(std::uint64_t y) const;  // includes the state scalar

 private:
  struct Row {
    std::uint64_t x;
    PauliOperator p;
  };
  bool zero_;
  std::uint64_t pivot_;
  ExactScalar base_;  // scalar * pivot_amp
  std::vector<Row> rows_;
  int pivot_of_bit_[kMaxQubits];
};

}  // namespace stabsim

#endif
