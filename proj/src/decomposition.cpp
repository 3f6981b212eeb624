#include "stabsim/decomposition.hpp"

#include <cmath>
#include <cstdio>

#include "stabsim/errors.hpp"

namespace stabsim {

ProjectorDecomposition diagonal_decomposition(const CVec& diag_entries) {
  const std::size_t dim = diag_entries.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) throw InputError("diagonal length must be a power of two");
  for (const auto& e : diag_entries)
    if (std::abs(std::abs(e) - 1.0) > 1e-9) {
      std::fprintf(stderr, "warning: diagonal entry %g%+gi is not unit modulus\n", e.real(), e.imag());
      break;
    }
  unsigned k = 0;
  while ((std::size_t(1) << k) < dim) ++k;
  ProjectorDecomposition d;
  d.arity = k;
  d.source = "diagonal";
  d.terms.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i)
    d.terms.push_back({diag_entries[i], StabilizerState::basis_state(k, i)});
  return d;
}

ProjectorDecomposition tensor(const ProjectorDecomposition& a, const ProjectorDecomposition& b) {
  ProjectorDecomposition out;
  out.arity = a.arity + b.arity;
  out.source = "tensor";
  out.terms.reserve(a.terms.size() * b.terms.size());
  std::vector<unsigned> qa(a.arity), qb(b.arity);
  for (unsigned j = 0; j < a.arity; ++j) qa[j] = j;
  for (unsigned j = 0; j < b.arity; ++j) qb[j] = a.arity + j;
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) {
      std::vector<PauliOperator> gens;
      gens.reserve(out.arity);
      for (const auto& g : ta.projector_state.generators()) gens.push_back(embed_pauli(g, out.arity, qa));
      for (const auto& g : tb.projector_state.generators()) gens.push_back(embed_pauli(g, out.arity, qb));
      std::uint64_t pivot = ta.projector_state.pivot() | (tb.projector_state.pivot() << a.arity);
      auto st = StabilizerState::from_generators(out.arity, std::move(gens), pivot);
      out.terms.push_back({ta.coefficient * tb.coefficient, std::move(st)});
    }
  return out;
}

PaddedLayerView::PaddedLayerView(std::vector<GatePlacement> placements, unsigned n)
    : placements_(std::move(placements)), n_(n) {
  std::uint64_t covered = 0;
  all_basis_ = true;
  for (const auto& p : placements_) {
    if (p.qubits.size() != p.decomp.arity) throw InputError("placement arity mismatch");
    for (unsigned q : p.qubits) {
      if (q >= n_) throw InputError("placement qubit out of range");
      if ((covered >> q) & 1) throw InputError("overlapping placements");
      covered |= 1ULL << q;
    }
    for (const auto& t : p.decomp.terms)
      if (!t.projector_state.is_basis_state()) all_basis_ = false;
  }
  for (unsigned q = 0; q < n_; ++q)
    if (!((covered >> q) & 1)) untouched_.push_back(q);
  count_ = std::uint64_t(1) << untouched_.size();
  for (const auto& p : placements_) count_ *= p.decomp.rank();
}

std::pair<cdouble, StabilizerState> PaddedLayerView::term(std::uint64_t t) const {
  std::uint64_t rest = t;
  std::uint64_t pad_bits = rest & ((std::uint64_t(1) << untouched_.size()) - 1);
  rest >>= untouched_.size();
  std::vector<std::size_t> digit(placements_.size());
  for (std::size_t pi = placements_.size(); pi-- > 0;) {
    digit[pi] = rest % placements_[pi].decomp.rank();
    rest /= placements_[pi].decomp.rank();
  }
  std::vector<PauliOperator> gens;
  gens.reserve(n_);
  cdouble coeff(1, 0);
  std::uint64_t pivot = 0;
  ExactScalar amp = ExactScalar::one();
  for (std::size_t pi = 0; pi < placements_.size(); ++pi) {
    const auto& term = placements_[pi].decomp.terms[digit[pi]];
    coeff *= term.coefficient;
    amp *= term.projector_state.pivot_amp();
    for (const auto& g : term.projector_state.generators())
      gens.push_back(embed_pauli(g, n_, placements_[pi].qubits));
    std::uint64_t small_pivot = term.projector_state.pivot();
    for (std::size_t j = 0; j < placements_[pi].qubits.size(); ++j)
      if ((small_pivot >> j) & 1) pivot |= 1ULL << placements_[pi].qubits[j];
  }
  for (std::size_t j = 0; j < untouched_.size(); ++j) {
    PauliOperator g = PauliOperator::z(n_, untouched_[j]);
    if ((pad_bits >> j) & 1) {
      g = g.negated();
      pivot |= 1ULL << untouched_[j];
    }
    gens.push_back(g);
  }
  return {coeff, StabilizerState::unchecked(n_, std::move(gens), pivot, amp)};
}

std::pair<cdouble, std::uint64_t> PaddedLayerView::term_basis(std::uint64_t t) const {
  std::uint64_t rest = t;
  std::uint64_t pivot = rest & ((std::uint64_t(1) << untouched_.size()) - 1);
  std::uint64_t pad_bits = pivot;
  pivot = 0;
  for (std::size_t j = 0; j < untouched_.size(); ++j)
    if ((pad_bits >> j) & 1) pivot |= 1ULL << untouched_[j];
  rest >>= untouched_.size();
  cdouble coeff(1, 0);
  std::vector<std::size_t> digit(placements_.size());
  for (std::size_t pi = placements_.size(); pi-- > 0;) {
    digit[pi] = rest % placements_[pi].decomp.rank();
    rest /= placements_[pi].decomp.rank();
  }
  for (std::size_t pi = 0; pi < placements_.size(); ++pi) {
    const auto& term = placements_[pi].decomp.terms[digit[pi]];
    coeff *= term.coefficient;
    std::uint64_t small_pivot = term.projector_state.pivot();
    for (std::size_t j = 0; j < placements_[pi].qubits.size(); ++j)
      if ((small_pivot >> j) & 1) pivot |= 1ULL << placements_[pi].qubits[j];
  }
  return {coeff, pivot};
}

ProjectorDecomposition pad_layer(const std::vector<GatePlacement>& placements, unsigned n) {
  PaddedLayerView view(placements, n);
  ProjectorDecomposition out;
  out.arity = n;
  out.source = "padded";
  out.terms.reserve(view.term_count());
  for (std::uint64_t t = 0; t < view.term_count(); ++t) {
    auto [coeff, state] = view.term(t);
    out.terms.push_back({coeff, std::move(state)});
  }
  return out;
}

CMat reconstruct(const ProjectorDecomposition& d) {
  if (d.arity > 6) throw InputError("reconstruction limited to arity <= 6");
  CMat acc(std::size_t(1) << d.arity);
  for (const auto& t : d.terms) {
    auto v = to_dense(t.projector_state);
    for (std::size_t r = 0; r < acc.dim; ++r) {
      if (v[r] == cdouble(0, 0)) continue;
      for (std::size_t c = 0; c < acc.dim; ++c) acc.at(r, c) += t.coefficient * v[r] * std::conj(v[c]);
    }
  }
  return acc;
}

VerifyReport verify_decomposition(const ProjectorDecomposition& d, const CMat& target, double tol) {
  if (target.dim != (std::size_t(1) << d.arity)) throw InputError("target dimension mismatch");
  VerifyReport rep;
  rep.rank = d.rank();
  rep.max_error = max_abs_diff(reconstruct(d), target);
  rep.pass = rep.max_error <= tol;
  return rep;
}

RefitOutcome refit_coefficients(const ProjectorDecomposition& d, const CMat& target) {
  if (d.arity > 4) throw InputError("refit limited to arity <= 4");
  const std::size_t dim = std::size_t(1) << d.arity;
  const std::size_t rows = dim * dim, cols = d.terms.size();
  CVec a(rows * cols);
  for (std::size_t j = 0; j < cols; ++j) {
    auto v = to_dense(d.terms[j].projector_state);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) a[(r * dim + c) * cols + j] = v[r] * std::conj(v[c]);
  }
  auto solved = lstsq(a, rows, cols, target.a);
  RefitOutcome out;
  out.residual = solved.residual;
  if (solved.rank_deficient && solved.residual > 1e-9) {
    out.flagged = true;
    out.decomp = d;
    return out;
  }
  out.decomp = d;
  out.decomp.source = "refit";
  for (std::size_t j = 0; j < cols; ++j) out.decomp.terms[j].coefficient = solved.x[j];
  return out;
}

}  // namespace stabsim
