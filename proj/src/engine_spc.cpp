#include <chrono>
#include <cmath>
#include <thread>

#include "stabsim/engines.hpp"
#include "stabsim/errors.hpp"
#include "stabsim/soc.hpp"

namespace stabsim {

namespace detail {

void apply_clifford_gates(std::vector<std::pair<cdouble, StabilizerState>>& terms,
                          const std::vector<Gate>& gates) {
  for (auto& [c, st] : terms)
    for (const auto& g : gates) apply_clifford_gate(st, g);
}

void project_onto_layer(std::vector<std::pair<cdouble, StabilizerState>>& terms,
                        const PaddedLayerView& view, const EngineOptions& opts, int layer_index,
                        ExecutionTrace& trace) {
  const std::uint64_t kappa = view.term_count();
  if (kappa > opts.mem_cap) throw CapacityError(layer_index, kappa);

  const std::size_t old_count = terms.size();
  std::vector<std::pair<cdouble, StabilizerState>> next(kappa);

  // Basis-projector layers reduce every inner product to an amplitude query.
  std::vector<AmplitudeOracle> oracles;
  const bool fast = view.all_basis();
  if (fast)
    for (const auto& [c, st] : terms) oracles.emplace_back(st);

  auto work = [&](std::uint64_t i) {
    auto [ci, phi] = view.term(i);
    cdouble s(0, 0);
    if (fast) {
      const std::uint64_t b = phi.pivot();
      for (std::size_t j = 0; j < old_count; ++j)
        s += terms[j].first * oracles[j].amplitude(b).to_complex();
    } else {
      for (std::size_t j = 0; j < old_count; ++j) {
        if (terms[j].first == cdouble(0, 0)) continue;
        s += terms[j].first * inner_product(phi, terms[j].second).to_complex();
      }
    }
    next[i] = {ci * s, std::move(phi)};
  };

  const unsigned nthreads = static_cast<unsigned>(
      std::min<std::uint64_t>(std::max(opts.threads, 1), kappa));
  if (nthreads <= 1) {
    for (std::uint64_t i = 0; i < kappa; ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < nthreads; ++w)
      pool.emplace_back([&, w] {
        for (std::uint64_t i = w; i < kappa; i += nthreads) work(i);
      });
    for (auto& th : pool) th.join();
  }
  trace.inner_product_count += kappa * old_count;

  if (opts.prune) {
    std::vector<std::pair<cdouble, StabilizerState>> kept;
    for (auto& t : next)
      if (std::abs(t.first) >= 1e-12) kept.push_back(std::move(t));
    next = std::move(kept);
  }
  terms = std::move(next);
  trace.max_live_terms = std::max<std::uint64_t>(trace.max_live_terms, terms.size());
  const std::uint64_t state_bytes = 24ULL * view.width() + 64;
  trace.peak_bytes = std::max(trace.peak_bytes, terms.size() * state_bytes);
}

}  // namespace detail

std::pair<StabilizerSum, ExecutionTrace> evolve_spc(const LayeredCircuit& lc, const EngineOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  ExecutionTrace trace;
  StabilizerSum sum;
  sum.terms.push_back({cdouble(1, 0), StabilizerState::basis_state(lc.n, 0)});
  trace.max_live_terms = 1;

  detail::apply_clifford_gates(sum.terms, lc.clifford_layers.front());
  for (std::size_t l = 0; l < lc.nc_layers.size(); ++l) {
    detail::project_onto_layer(sum.terms, lc.padded_view(l), opts, static_cast<int>(l), trace);
    detail::apply_clifford_gates(sum.terms, lc.clifford_layers[l + 1]);
  }
  trace.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return {std::move(sum), trace};
}

std::pair<cdouble, ExecutionTrace> amplitude_spc(const LayeredCircuit& lc, std::uint64_t x,
                                                 const EngineOptions& opts) {
  auto [sum, trace] = evolve_spc(lc, opts);
  cdouble value(0, 0);
  for (const auto& [c, st] : sum.terms) {
    ++trace.inner_product_count;
    value += c * st.amplitude(x).to_complex();
  }
  return {value, trace};
}

namespace {

// Expand one non-Clifford primitive through its Sum-over-Cliffords entry.
void soc_expand_gate(std::vector<std::pair<cdouble, StabilizerState>>& terms, const Gate& g,
                     std::uint64_t mem_cap, int layer_index) {
  const auto& soc = sum_over_clifford(g.name());
  if (terms.size() * soc.size() > mem_cap)
    throw CapacityError(layer_index, terms.size() * soc.size());
  std::vector<std::pair<cdouble, StabilizerState>> next;
  next.reserve(terms.size() * soc.size());
  for (const auto& [a, st] : terms)
    for (const auto& term : soc) {
      StabilizerState copy = st;
      for (const auto& wg : term.word) {
        Gate mapped = wg;
        for (auto& q : mapped.qubits) q = g.qubits[q];
        apply_clifford_gate(copy, mapped);
      }
      next.push_back({a * term.coefficient, std::move(copy)});
    }
  terms = std::move(next);
}

}  // namespace

std::pair<cdouble, ExecutionTrace> amplitude_spc_soc(const LayeredCircuit& lc, std::uint64_t x,
                                                     const EngineOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  ExecutionTrace trace;
  std::vector<std::pair<cdouble, StabilizerState>> terms;
  terms.push_back({cdouble(1, 0), StabilizerState::basis_state(lc.n, 0)});
  trace.max_live_terms = 1;

  bool soc_mode = true;
  detail::apply_clifford_gates(terms, lc.clifford_layers.front());
  for (std::size_t l = 0; l < lc.nc_layers.size(); ++l) {
    const std::uint64_t kappa = lc.padded_kappa(l);
    if (soc_mode && terms.size() > kappa) soc_mode = false;  // switchover
    if (soc_mode) {
      for (const auto& p : lc.nc_layers[l].placements)
        for (const auto& g : p.primitive_gates) {
          soc_expand_gate(terms, g, opts.mem_cap, static_cast<int>(l));
          trace.max_live_terms = std::max<std::uint64_t>(trace.max_live_terms, terms.size());
        }
    } else {
      detail::project_onto_layer(terms, lc.padded_view(l), opts, static_cast<int>(l), trace);
    }
    detail::apply_clifford_gates(terms, lc.clifford_layers[l + 1]);
  }

  cdouble value(0, 0);
  for (const auto& [c, st] : terms) {
    ++trace.inner_product_count;
    value += c * st.amplitude(x).to_complex();
  }
  trace.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return {value, trace};
}

}  // namespace stabsim
