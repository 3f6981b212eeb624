#include "stabsim/stabilizer_state.hpp"

#include <algorithm>
#include <cassert>

#include "stabsim/errors.hpp"
#include "stabsim/rng.hpp"

namespace stabsim {

namespace {

int highest_bit(std::uint64_t v) { return 63 - __builtin_clzll(v); }

// GF(2) echelon over the generators' X parts.  Each row carries the group
// element realizing that X part, so span queries return the full Pauli.
// Fixed-capacity storage: this sits on the hot path of every projection.
struct XSpan {
  struct Row {
    std::uint64_t x;
    PauliOperator p;
  };
  Row rows[kMaxQubits];
  unsigned row_count = 0;
  int pivot_of_bit[kMaxQubits];

  explicit XSpan(const std::vector<PauliOperator>& gens) {
    std::fill(std::begin(pivot_of_bit), std::end(pivot_of_bit), -1);
    for (const auto& g : gens) insert(g);
  }

  void insert(const PauliOperator& g) {
    std::uint64_t v = g.x_bits;
    PauliOperator acc = g;
    while (v) {
      int h = highest_bit(v);
      int r = pivot_of_bit[h];
      if (r < 0) {
        pivot_of_bit[h] = static_cast<int>(row_count);
        rows[row_count++] = {v, acc};
        return;
      }
      v ^= rows[r].x;
      acc = acc * rows[r].p;
    }
    // Pure-Z group element; contributes nothing to the X span.
  }

  std::optional<PauliOperator> solve(std::uint32_t n, std::uint64_t v) const {
    PauliOperator acc = PauliOperator::identity(n);
    while (v) {
      int r = pivot_of_bit[highest_bit(v)];
      if (r < 0) return std::nullopt;
      v ^= rows[r].x;
      acc = acc * rows[r].p;
    }
    return acc;
  }
};

}  // namespace

StabilizerState StabilizerState::basis_state(std::uint32_t n, std::uint64_t bits) {
  if (n == 0 || n > kMaxQubits) throw InputError("qubit count out of range");
  StabilizerState st;
  st.n_ = n;
  st.gens_.reserve(n);
  for (unsigned q = 0; q < n; ++q) {
    PauliOperator g = PauliOperator::z(n, q);
    if ((bits >> q) & 1) g = g.negated();
    st.gens_.push_back(g);
  }
  st.pivot_ = bits & (n == 64 ? ~0ULL : ((1ULL << n) - 1));
  st.pivot_amp_ = ExactScalar::one();
  st.scalar_ = ExactScalar::one();
  return st;
}

StabilizerState StabilizerState::basis_state(const std::string& bits) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') v |= 1ULL << i;
    else if (bits[i] != '0') throw InputError("bad bit string: " + bits);
  }
  return basis_state(static_cast<std::uint32_t>(bits.size()), v);
}

StabilizerState StabilizerState::zero_state(std::uint32_t n) {
  StabilizerState st = basis_state(n, 0);
  st.zero_ = true;
  st.scalar_ = ExactScalar::zero();
  return st;
}

StabilizerState StabilizerState::unchecked(std::uint32_t n, std::vector<PauliOperator> gens,
                                           std::uint64_t pivot, const ExactScalar& pivot_amp) {
  StabilizerState st;
  st.n_ = n;
  st.gens_ = std::move(gens);
  st.pivot_ = pivot;
  st.pivot_amp_ = pivot_amp;
  st.scalar_ = ExactScalar::one();
  return st;
}

StabilizerState StabilizerState::from_generators(std::uint32_t n, std::vector<PauliOperator> gens,
                                                 std::uint64_t pivot) {
  if (n == 0 || n > kMaxQubits) throw InputError("qubit count out of range");
  if (gens.size() != n) throw InputError("need exactly n generators");
  for (const auto& g : gens) {
    if (g.n != n) throw InputError("generator dimension mismatch");
    if (!g.is_hermitian()) throw InputError("generator is not Hermitian: " + g.to_string());
    if (g.is_identity_up_to_phase()) throw InputError("identity is not a valid generator");
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].commutes_with(gens[j]))
        throw InputError("generators do not commute: " + gens[i].to_string() + ", " + gens[j].to_string());

  // X echelon; the leftovers span the pure-Z subgroup.
  XSpan xspan{std::vector<PauliOperator>{}};
  std::vector<PauliOperator> pure_z;
  for (const auto& g : gens) {
    std::uint64_t v = g.x_bits;
    PauliOperator acc = g;
    bool stored = false;
    while (v) {
      int h = highest_bit(v);
      int r = xspan.pivot_of_bit[h];
      if (r < 0) {
        xspan.pivot_of_bit[h] = static_cast<int>(xspan.row_count);
        xspan.rows[xspan.row_count++] = {v, acc};
        stored = true;
        break;
      }
      v ^= xspan.rows[r].x;
      acc = acc * xspan.rows[r].p;
    }
    if (stored) continue;
    if (acc.z_bits == 0) {
      if (acc.phase != 0) throw InputError("generators multiply to -I or +-iI");
      continue;  // exact dependence; the rank count below rejects it
    }
    pure_z.push_back(acc);
  }
  // Z echelon over the pure-Z leftovers: independence + pivot support check.
  std::vector<std::pair<std::uint64_t, PauliOperator>> zrows;
  for (auto p : pure_z) {
    std::uint64_t v = p.z_bits;
    while (v) {
      int h = highest_bit(v);
      auto it = std::find_if(zrows.begin(), zrows.end(),
                             [&](const auto& r) { return highest_bit(r.first) == h; });
      if (it == zrows.end()) break;
      v ^= it->first;
      p = p * it->second;
    }
    if (p.is_identity_up_to_phase()) {
      if (p.phase != 0) throw InputError("generators multiply to -I or +-iI");
      continue;
    }
    zrows.emplace_back(p.z_bits, p);
  }
  if (xspan.row_count + zrows.size() != n) throw InputError("generators are not independent");
  for (const auto& [zb, p] : zrows) {
    (void)zb;
    if (p.phase_at(pivot) != 0) throw InputError("pivot is outside the stabilized support");
  }

  StabilizerState st;
  st.n_ = n;
  st.gens_ = std::move(gens);
  st.pivot_ = pivot;
  st.pivot_amp_ = ExactScalar::make(0, static_cast<int>(xspan.row_count));
  st.scalar_ = ExactScalar::one();
  return st;
}

bool StabilizerState::is_basis_state() const {
  for (const auto& g : gens_)
    if (g.x_bits) return false;
  return true;
}

void StabilizerState::check_qubit(unsigned q) const {
  if (q >= n_) throw InputError("qubit index " + std::to_string(q) + " out of range (qubits " + std::to_string(n_) + ")");
}

std::optional<int> StabilizerState::rel_phase(std::uint64_t v) const {
  XSpan span(gens_);
  auto p = span.solve(n_, v);
  if (!p) return std::nullopt;
  return p->phase_at(pivot_);
}

// ---- primitive gates ----

void StabilizerState::x(unsigned q) {
  check_qubit(q);
  if (zero_) return;
  const std::uint64_t bit = 1ULL << q;
  for (auto& g : gens_)
    if (g.z_bits & bit) g.phase = (g.phase + 2) & 3;
  pivot_ ^= bit;
}

void StabilizerState::z(unsigned q) {
  check_qubit(q);
  if (zero_) return;
  const std::uint64_t bit = 1ULL << q;
  for (auto& g : gens_)
    if (g.x_bits & bit) g.phase = (g.phase + 2) & 3;
  if (pivot_ & bit) pivot_amp_ = pivot_amp_.times_i_pow(2);
}

void StabilizerState::y(unsigned q) {
  // Y = i X Z as an operator; the global i goes into the scalar.
  z(q);
  x(q);
  if (!zero_) scalar_ = scalar_.times_i_pow(1);
}

void StabilizerState::s(unsigned q) {
  check_qubit(q);
  if (zero_) return;
  const std::uint64_t bit = 1ULL << q;
  for (auto& g : gens_)
    if (g.x_bits & bit) {
      g.z_bits ^= bit;
      g.phase = (g.phase + 1) & 3;
    }
  if (pivot_ & bit) pivot_amp_ = pivot_amp_.times_i_pow(1);
}

void StabilizerState::sdg(unsigned q) {
  check_qubit(q);
  if (zero_) return;
  const std::uint64_t bit = 1ULL << q;
  for (auto& g : gens_)
    if (g.x_bits & bit) {
      g.z_bits ^= bit;
      g.phase = (g.phase + 3) & 3;
    }
  if (pivot_ & bit) pivot_amp_ = pivot_amp_.times_i_pow(3);
}

void StabilizerState::cx(unsigned c, unsigned t) {
  check_qubit(c);
  check_qubit(t);
  if (c == t) throw InputError("cx needs distinct qubits");
  if (zero_) return;
  const std::uint64_t cb = 1ULL << c, tb = 1ULL << t;
  // In the global-phase normal form X^a Z^b no reorder sign appears: every
  // move in (X_c X_t)^ac Z_c^bc X_t^at (Z_c Z_t)^bt commutes.
  for (auto& g : gens_) {
    if (g.x_bits & cb) g.x_bits ^= tb;
    if (g.z_bits & tb) g.z_bits ^= cb;
  }
  if (pivot_ & cb) pivot_ ^= tb;
}

void StabilizerState::superpose_witness(unsigned q, const int e[2][2]) {
  // New amplitude at y:  (i^{e[yq][0]} amp(y|q=0) + i^{e[yq][1]} amp(y|q=1)) / sqrt2.
  const std::uint64_t bit = 1ULL << q;
  auto rel = rel_phase(bit);  // amp(pivot^bit) = i^rel * amp(pivot), on the old group
  const int pq = (pivot_ & bit) ? 1 : 0;
  if (!rel) {
    // Partner point is outside the support; pivot survives with a phase.
    pivot_amp_ = pivot_amp_.times_i_pow(e[pq][pq]).times_sqrt2_pow(-1);
    return;
  }
  // Amplitudes at y0 = pivot|q=0 and y1 = pivot|q=1 as i-powers times amp(pivot).
  const int a0 = pq == 0 ? 0 : *rel;  // amp(y0)/amp(pivot)
  const int a1 = pq == 0 ? *rel : 0;
  // amp'(y0) = (i^{e[0][0]} i^{a0} + i^{e[0][1]} i^{a1}) amp(pivot) / sqrt2
  const int t00 = (e[0][0] + a0) & 3, t01 = (e[0][1] + a1) & 3;
  if (((t01 - t00) & 3) != 2) {
    pivot_ &= ~bit;
    pivot_amp_ = pivot_amp_.times_i_pow(t00).times_one_plus_i_pow(t01 - t00).times_sqrt2_pow(-1);
    return;
  }
  const int t10 = (e[1][0] + a0) & 3, t11 = (e[1][1] + a1) & 3;
  assert(((t11 - t10) & 3) != 2);
  pivot_ |= bit;
  pivot_amp_ = pivot_amp_.times_i_pow(t10).times_one_plus_i_pow(t11 - t10).times_sqrt2_pow(-1);
}

void StabilizerState::h(unsigned q) {
  check_qubit(q);
  if (zero_) return;
  static const int e[2][2] = {{0, 0}, {0, 2}};  // H entries: (1,1;1,-1)/sqrt2
  superpose_witness(q, e);
  const std::uint64_t bit = 1ULL << q;
  for (auto& g : gens_) {
    bool xb = g.x_bits & bit, zb = g.z_bits & bit;
    if (xb != zb) {
      g.x_bits ^= bit;
      g.z_bits ^= bit;
    } else if (xb && zb) {
      g.phase = (g.phase + 2) & 3;  // H(XZ)H = ZX = -XZ
    }
  }
}

void StabilizerState::sx(unsigned q) {
  sdg(q);
  h(q);
  sdg(q);
}

void StabilizerState::sy(unsigned q) {
  z(q);
  h(q);
}

void StabilizerState::cz(unsigned a, unsigned b) {
  h(b);
  cx(a, b);
  h(b);
}

void StabilizerState::swap(unsigned a, unsigned b) {
  cx(a, b);
  cx(b, a);
  cx(a, b);
}

void StabilizerState::iswap(unsigned a, unsigned b) {
  cz(a, b);
  swap(a, b);
  s(a);
  s(b);
}

// ---- projection ----

void StabilizerState::project_pauli_inplace(const PauliOperator& p, int sign) {
  if (p.n != n_) throw InputError("pauli dimension mismatch");
  if (!p.is_hermitian()) throw InputError("projection needs a Hermitian Pauli");
  if (p.is_identity_up_to_phase()) {
    // (I +- I)/2 is the identity or the zero map.
    bool plus = (p.phase == 0) == (sign >= 0);
    if (!plus) {
      zero_ = true;
      scalar_ = ExactScalar::zero();
    }
    return;
  }
  if (zero_) return;
  PauliOperator q = sign >= 0 ? p : p.negated();

  int anti = -1;
  for (std::size_t k = 0; k < gens_.size(); ++k)
    if (!gens_[k].commutes_with(q)) {
      anti = static_cast<int>(k);
      break;
    }

  if (anti < 0) {
    // q commutes with the whole group, so q|u> = +-|u>; read the sign off the witness.
    auto rel = rel_phase(q.x_bits);
    if (!rel) throw ConsistencyError("commuting Pauli outside the stabilizer span");
    int t = (q.phase_at(pivot_ ^ q.x_bits) + *rel) & 3;  // <pivot|q|u> = i^t amp(pivot)
    if (t == 0) return;                                  // acts as identity
    if (t == 2) {
      zero_ = true;
      scalar_ = ExactScalar::zero();
      return;
    }
    throw ConsistencyError("non-real eigenvalue in Pauli projection");
  }

  // Witness first: it needs the old group.
  const XSpan span(gens_);
  auto unit_rel = [&](std::uint64_t y) -> std::optional<int> {
    auto pr = span.solve(n_, y ^ pivot_);
    if (!pr) return std::nullopt;
    return pr->phase_at(pivot_);
  };
  const std::uint64_t xg = gens_[anti].x_bits;
  const std::uint64_t cands[4] = {pivot_, pivot_ ^ q.x_bits, pivot_ ^ xg, pivot_ ^ q.x_bits ^ xg};
  std::uint64_t new_pivot = 0;
  ExactScalar new_amp = ExactScalar::zero();
  for (std::uint64_t y : cands) {
    // amp'(y) = (amp(y) + i^{q.phase_at(y^qx)} amp(y^qx)) / sqrt2
    auto t1 = unit_rel(y);
    auto t2 = unit_rel(y ^ q.x_bits);
    std::optional<int> s2;
    if (t2) s2 = (*t2 + q.phase_at(y ^ q.x_bits)) & 3;
    ExactScalar amp;
    if (t1 && s2) {
      amp = pivot_amp_.times_i_pow(*t1).times_one_plus_i_pow(*s2 - *t1).times_sqrt2_pow(-1);
    } else if (t1) {
      amp = pivot_amp_.times_i_pow(*t1).times_sqrt2_pow(-1);
    } else if (s2) {
      amp = pivot_amp_.times_i_pow(*s2).times_sqrt2_pow(-1);
    }
    if (!amp.is_zero()) {
      new_pivot = y;
      new_amp = amp;
      break;
    }
  }
  if (new_amp.is_zero()) throw ConsistencyError("projection lost the ket witness");

  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (static_cast<int>(k) == anti) continue;
    if (!gens_[k].commutes_with(q)) gens_[k] = gens_[k] * gens_[anti];
  }
  gens_[anti] = q;
  pivot_ = new_pivot;
  pivot_amp_ = new_amp;
  scalar_ = scalar_.times_sqrt2_pow(-1);
}

ExactScalar StabilizerState::amplitude(std::uint64_t y) const {
  if (zero_) return ExactScalar::zero();
  if (y == pivot_) return scalar_ * pivot_amp_;
  auto t = rel_phase(y ^ pivot_);
  if (!t) return ExactScalar::zero();
  return (scalar_ * pivot_amp_).times_i_pow(*t);
}

std::vector<std::complex<double>> StabilizerState::to_dense(unsigned limit) const {
  if (n_ > limit) throw InputError("to_dense over the qubit limit");
  std::vector<std::complex<double>> v(1ULL << n_, 0.0);
  if (zero_) return v;
  AmplitudeOracle oracle(*this);
  for (std::uint64_t y = 0; y < v.size(); ++y) v[y] = oracle.amplitude(y).to_complex();
  return v;
}

bool StabilizerState::same_state(const StabilizerState& o) const {
  if (n_ != o.n_) return false;
  if (zero_ || o.zero_) return zero_ == o.zero_;
  return gens_ == o.gens_ && pivot_ == o.pivot_ && pivot_amp_ == o.pivot_amp_ && scalar_ == o.scalar_;
}

// ---- free functions ----

StabilizerState basis_state(const std::string& bits) { return StabilizerState::basis_state(bits); }

ExactScalar inner_product(const StabilizerState& bra, const StabilizerState& ket) {
  if (bra.num_qubits() != ket.num_qubits()) throw InputError("inner product dimension mismatch");
  if (bra.is_zero() || ket.is_zero()) return ExactScalar::zero();
  StabilizerState work = ket;
  work.scalar_ = ExactScalar::one();
  for (const auto& g : bra.gens_) {
    work.project_pauli_inplace(g, +1);
    if (work.is_zero()) return ExactScalar::zero();
  }
  // work = |u_bra> <u_bra|u_ket>; align the phase on bra's pivot.
  auto t = work.pivot_ == bra.pivot_ ? std::optional<int>(0) : work.rel_phase(bra.pivot_ ^ work.pivot_);
  if (!t) throw ConsistencyError("inner product lost the bra pivot");
  ExactScalar unit = work.scalar_ * work.pivot_amp_.times_i_pow(*t).div(bra.pivot_amp_);
  return bra.scalar().conj() * ket.scalar() * unit;
}

StabilizerState project_pauli(const StabilizerState& state, const PauliOperator& p, int sign) {
  StabilizerState out = state;
  out.project_pauli_inplace(p, sign);
  return out;
}

PauliOperator embed_pauli(const PauliOperator& p, std::uint32_t n, const std::vector<unsigned>& qubits) {
  PauliOperator out = PauliOperator::identity(n);
  out.phase = p.phase;
  for (std::size_t j = 0; j < qubits.size(); ++j) {
    if ((p.x_bits >> j) & 1) out.x_bits |= 1ULL << qubits[j];
    if ((p.z_bits >> j) & 1) out.z_bits |= 1ULL << qubits[j];
  }
  return out;
}

StabilizerState project_subsystem(const StabilizerState& state, const StabilizerState& target,
                                  const std::vector<unsigned>& qubits) {
  if (target.num_qubits() != qubits.size()) throw InputError("target arity does not match qubit list");
  std::uint64_t seen = 0;
  for (unsigned q : qubits) {
    if (q >= state.num_qubits()) throw InputError("projection qubit out of range");
    if ((seen >> q) & 1) throw InputError("projection qubits must be distinct");
    seen |= 1ULL << q;
  }
  StabilizerState out = state;
  for (const auto& g : target.generators()) {
    out.project_pauli_inplace(embed_pauli(g, state.num_qubits(), qubits), +1);
    if (out.is_zero()) return out;
  }
  return out;
}

std::vector<std::complex<double>> to_dense(const StabilizerState& state, unsigned limit) {
  return state.to_dense(limit);
}

StabilizerState random_stabilizer_state(std::uint32_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  StabilizerState st = StabilizerState::basis_state(n, rng.next() & (n == 64 ? ~0ULL : ((1ULL << n) - 1)));
  const unsigned words = 2 * n * n + 12;
  for (unsigned i = 0; i < words; ++i) {
    unsigned pick = static_cast<unsigned>(rng.next_below(3));
    unsigned q = static_cast<unsigned>(rng.next_below(n));
    switch (pick) {
      case 0: st.h(q); break;
      case 1: st.s(q); break;
      default: {
        if (n == 1) { st.h(0); break; }
        unsigned t = static_cast<unsigned>(rng.next_below(n - 1));
        if (t >= q) ++t;
        st.cx(q, t);
        break;
      }
    }
  }
  return st;
}

AmplitudeOracle::AmplitudeOracle(const StabilizerState& state)
    : zero_(state.is_zero()), pivot_(state.pivot()), base_(state.scalar() * state.pivot_amp()) {
  std::fill(std::begin(pivot_of_bit_), std::end(pivot_of_bit_), -1);
  if (zero_) return;
  for (const auto& g : state.generators()) {
    std::uint64_t v = g.x_bits;
    PauliOperator acc = g;
    while (v) {
      int h = highest_bit(v);
      int r = pivot_of_bit_[h];
      if (r < 0) {
        pivot_of_bit_[h] = static_cast<int>(rows_.size());
        rows_.push_back({v, acc});
        break;
      }
      v ^= rows_[r].x;
      acc = acc * rows_[r].p;
    }
  }
}

ExactScalar AmplitudeOracle::amplitude(std::uint64_t y) const {
  if (zero_) return ExactScalar::zero();
  std::uint64_t v = y ^ pivot_;
  PauliOperator acc;
  bool have = false;
  while (v) {
    int r = pivot_of_bit_[highest_bit(v)];
    if (r < 0) return ExactScalar::zero();
    v ^= rows_[r].x;
    if (!have) {
      acc = rows_[r].p;
      have = true;
    } else {
      acc = acc * rows_[r].p;
    }
  }
  return have ? base_.times_i_pow(acc.phase_at(pivot_)) : base_;
}

}  // namespace stabsim
