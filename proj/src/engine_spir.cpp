#include <chrono>
#include <thread>

#include "stabsim/engines.hpp"
#include "stabsim/errors.hpp"

namespace stabsim {

namespace detail {

StabilizerState apply_layer(const std::vector<Gate>& gates, StabilizerState st) {
  for (const auto& g : gates) apply_clifford_gate(st, g);
  return st;
}

StabilizerState apply_layer_inverse(const std::vector<Gate>& gates, StabilizerState st) {
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) apply_clifford_gate_inverse(st, *it);
  return st;
}

}  // namespace detail

namespace {

struct SpirCtx {
  const LayeredCircuit* lc;
  std::vector<PaddedLayerView> views;
  SplitRule split;
};

// <bra| N_hi C_{hi} ... C_{lo+1} N_lo |ket> over non-Clifford layers [lo, hi];
// C_lo and C_{hi+1} are already absorbed into the boundary states.
cdouble eval(const SpirCtx& ctx, int lo, int hi, const StabilizerState& ket,
             const StabilizerState& bra, unsigned level, ExecutionTrace& trace) {
  if (trace.branch_counts.size() <= level) trace.branch_counts.resize(level + 1, 0);
  if (lo > hi) {
    ++trace.inner_product_count;
    ++trace.leaf_count;
    ++trace.branch_counts[level];
    return inner_product(bra, ket).to_complex();
  }
  if (lo == hi) {
    // base layer: sum_i c_i <bra|phi_i><phi_i|ket>, one count per term
    const auto& view = ctx.views[lo];
    ++trace.leaf_count;
    trace.branch_counts[level] += view.term_count();
    cdouble acc(0, 0);
    if (view.all_basis()) {
      AmplitudeOracle ket_oracle(ket), bra_oracle(bra);
      for (std::uint64_t t = 0; t < view.term_count(); ++t) {
        auto [c, pivot] = view.term_basis(t);
        ++trace.inner_product_count;
        auto a_ket = ket_oracle.amplitude(pivot);
        if (a_ket.is_zero()) continue;
        auto a_bra = bra_oracle.amplitude(pivot);
        if (a_bra.is_zero()) continue;
        acc += c * a_ket.to_complex() * std::conj(a_bra.to_complex());
      }
      return acc;
    }
    for (std::uint64_t t = 0; t < view.term_count(); ++t) {
      auto [c, phi] = view.term(t);
      ++trace.inner_product_count;
      auto s_ket = inner_product(phi, ket);
      if (s_ket.is_zero()) continue;
      auto s_bra = inner_product(bra, phi);
      if (s_bra.is_zero()) continue;
      acc += c * s_bra.to_complex() * s_ket.to_complex();
    }
    return acc;
  }

  int m;
  switch (ctx.split) {
    case SplitRule::Leftmost: m = lo; break;
    case SplitRule::Rightmost: m = hi; break;
    default: m = lo + (hi - lo + 2) / 2 - 1; break;  // ceil(d/2)-th layer
  }
  const auto& view = ctx.views[m];
  trace.branch_counts[level] += view.term_count();
  cdouble acc(0, 0);
  for (std::uint64_t t = 0; t < view.term_count(); ++t) {
    auto [c, phi] = view.term(t);
    StabilizerState b_left = m > lo ? detail::apply_layer_inverse(ctx.lc->clifford_layers[m], phi) : phi;
    cdouble left = eval(ctx, lo, m - 1, ket, b_left, level + 1, trace);
    if (left == cdouble(0, 0)) continue;  // zero short-circuits the sibling
    StabilizerState a_right = m < hi ? detail::apply_layer(ctx.lc->clifford_layers[m + 1], phi) : phi;
    cdouble right = eval(ctx, m + 1, hi, a_right, bra, level + 1, trace);
    acc += c * left * right;
  }
  return acc;
}

}  // namespace

std::pair<cdouble, ExecutionTrace> amplitude_spir(const LayeredCircuit& lc, std::uint64_t x,
                                                  const EngineOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  SpirCtx ctx;
  ctx.lc = &lc;
  ctx.split = opts.split;
  for (std::size_t i = 0; i < lc.nc_layers.size(); ++i) ctx.views.push_back(lc.padded_view(i));

  ExecutionTrace trace;
  trace.max_live_terms = 1;
  const int d = static_cast<int>(lc.nc_layers.size());
  StabilizerState ket = detail::apply_layer(lc.clifford_layers.front(), StabilizerState::basis_state(lc.n, 0));
  // with d_nc = 0 the circuit is the single Clifford layer already in `ket`
  StabilizerState bra = d == 0 ? StabilizerState::basis_state(lc.n, x)
                               : detail::apply_layer_inverse(lc.clifford_layers.back(),
                                                             StabilizerState::basis_state(lc.n, x));
  cdouble value(0, 0);

  if (d == 0) {
    value = eval(ctx, 0, -1, ket, bra, 0, trace);
  } else if (d == 1) {
    value = eval(ctx, 0, 0, ket, bra, 0, trace);
  } else {
    // The top split's per-term products land in slots and reduce in canonical
    // term order, so any thread count produces the serial bits.
    int m;
    switch (opts.split) {
      case SplitRule::Leftmost: m = 0; break;
      case SplitRule::Rightmost: m = d - 1; break;
      default: m = (d + 1) / 2 - 1; break;
    }
    const auto& view = ctx.views[m];
    const std::uint64_t kappa = view.term_count();
    std::vector<cdouble> slot(kappa, cdouble(0, 0));
    const unsigned nthreads =
        static_cast<unsigned>(std::min<std::uint64_t>(std::max(opts.threads, 1), kappa));
    std::vector<ExecutionTrace> traces(nthreads);
    auto worker = [&](unsigned w) {
      ExecutionTrace& tr = traces[w];
      for (std::uint64_t t = w; t < kappa; t += nthreads) {
        auto [c, phi] = view.term(t);
        StabilizerState b_left = m > 0 ? detail::apply_layer_inverse(lc.clifford_layers[m], phi) : phi;
        cdouble left = eval(ctx, 0, m - 1, ket, b_left, 1, tr);
        if (left == cdouble(0, 0)) continue;
        StabilizerState a_right =
            m < d - 1 ? detail::apply_layer(lc.clifford_layers[m + 1], phi) : phi;
        cdouble right = eval(ctx, m + 1, d - 1, a_right, bra, 1, tr);
        slot[t] = c * left * right;
      }
    };
    if (nthreads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < nthreads; ++w) pool.emplace_back(worker, w);
      for (auto& th : pool) th.join();
    }
    trace.branch_counts.assign(1, kappa);
    for (const auto& tr : traces) trace.merge(tr);
    for (std::uint64_t t = 0; t < kappa; ++t) value += slot[t];
  }

  trace.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return {value, trace};
}

double spir_inner_product_estimate(const LayeredCircuit& lc, SplitRule rule) {
  const int d = static_cast<int>(lc.nc_layers.size());
  if (d == 0) return 1.0;
  std::vector<double> kappa(d);
  for (int i = 0; i < d; ++i) kappa[i] = static_cast<double>(lc.padded_kappa(i));
  auto rec = [&](auto&& self, int lo, int hi) -> double {
    if (lo > hi) return 1.0;
    if (lo == hi) return kappa[lo];
    int m;
    switch (rule) {
      case SplitRule::Leftmost: m = lo; break;
      case SplitRule::Rightmost: m = hi; break;
      default: m = lo + (hi - lo + 2) / 2 - 1; break;
    }
    return kappa[m] * (self(self, lo, m - 1) + self(self, m + 1, hi));
  };
  return rec(rec, 0, d - 1);
}

double spc_inner_product_estimate(const LayeredCircuit& lc) {
  double total = 0.0, live = 1.0;
  for (std::size_t l = 0; l < lc.nc_layers.size(); ++l) {
    double kappa = static_cast<double>(lc.padded_kappa(l));
    total += live * kappa;
    live = kappa;
  }
  return total + live;
}

}  // namespace stabsim
