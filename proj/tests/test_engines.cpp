#include <cmath>
#include <numbers>

#include "doctest.h"
#include "stabsim/database.hpp"
#include "stabsim/engines.hpp"
#include "stabsim/ensemble.hpp"
#include "stabsim/errors.hpp"
#include "stabsim/layered.hpp"
#include "stabsim/rng.hpp"
#include "test_helpers.hpp"

using namespace stabsim;

namespace {
constexpr double kPi = std::numbers::pi_v<double>;

Circuit random_mixed_circuit(unsigned n, unsigned len, std::uint64_t seed) {
  static const GateKind pool1[] = {GateKind::H,  GateKind::S, GateKind::Sx, GateKind::Sy,
                                   GateKind::T,  GateKind::W, GateKind::T,  GateKind::Tdg};
  static const GateKind pool2[] = {GateKind::Cx, GateKind::Cz, GateKind::FSim, GateKind::Cs};
  SplitMix64 rng(seed);
  Circuit c;
  c.n = n;
  for (unsigned i = 0; i < len; ++i) {
    if (n >= 2 && rng.next_below(3) == 0) {
      unsigned a = static_cast<unsigned>(rng.next_below(n));
      unsigned b = static_cast<unsigned>(rng.next_below(n - 1));
      if (b >= a) ++b;
      c.gates.push_back({pool2[rng.next_below(4)], {a, b}});
    } else {
      c.gates.push_back({pool1[rng.next_below(8)], {static_cast<unsigned>(rng.next_below(n))}});
    }
  }
  return c;
}

// I(0) = 1, I(1) = kappa, I(d) = kappa (I(m-1) + I(d-m)) with m = ceil(d/2).
std::uint64_t spir_count_law(unsigned d, std::uint64_t kappa) {
  if (d == 0) return 1;
  if (d == 1) return kappa;
  unsigned m = (d + 1) / 2;
  return kappa * (spir_count_law(m - 1, kappa) + spir_count_law(d - m, kappa));
}

}  // namespace

TEST_CASE("dense oracle basics") {
  auto h = parse("qubits 1\ngate h 0\n");
  CHECK(std::abs(amplitude_dense(h, std::string("0")) - cdouble(0.7071067811865476, 0)) < 1e-15);

  auto idc = parse("qubits 3\n");
  CHECK(amplitude_dense(idc, std::string("000")) == cdouble(1, 0));

  auto c = random_mixed_circuit(6, 30, 4);
  auto psi = dense_state(c);
  double norm = 0;
  for (auto& v : psi) norm += std::norm(v);
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("spir: analytic one-qubit H T H") {
  auto c = parse("qubits 1\ngate h 0\ngate t 0\ngate h 0\n");
  auto lc = layerize(c);
  auto [amp, trace] = amplitude_spir(lc, 0);
  cdouble want = (1.0 + std::polar(1.0, kPi / 4)) / 2.0;
  CHECK(std::abs(amp - want) < 1e-14);
  CHECK(trace.inner_product_count == 2);  // kappa = 2, d_nc = 1
}

TEST_CASE("spir: pure Clifford base case") {
  auto c = parse("qubits 2\ngate h 0\ngate cx 0 1\n");
  auto [amp, trace] = amplitude_spir(layerize(c), 0);
  CHECK(std::abs(amp - cdouble(0.7071067811865476, 0)) < 1e-15);
  CHECK(trace.inner_product_count == 1);
}

TEST_CASE("spir matches dense on random circuits") {
  SplitMix64 rng(11);
  int ran = 0;
  for (int trial = 0; trial < 80 && ran < 50; ++trial) {
    unsigned n = 2 + trial % 5;  // up to 6
    auto c = random_mixed_circuit(n, 10 + trial % 8, 1000 + trial);
    auto lc = layerize(c);
    if (lc.d_nc() > 4 || spir_inner_product_estimate(lc) > 2e5) continue;
    ++ran;
    std::uint64_t x = rng.next() & ((1ULL << n) - 1);
    auto [amp, trace] = amplitude_spir(lc, x);
    CHECK(std::abs(amp - amplitude_dense(c, x)) <= 1e-8);
  }
  CHECK(ran >= 30);
}

TEST_CASE("spir trace law on uniform-kappa diagonal circuits") {
  for (unsigned d : {1u, 2u, 4u, 8u}) {
    const unsigned n = 2;
    Circuit c;
    c.n = n;
    for (unsigned q = 0; q < n; ++q) c.gates.push_back({GateKind::H, {q}});
    for (unsigned l = 0; l < d; ++l) {
      for (unsigned q = 0; q < n; ++q) c.gates.push_back({GateKind::T, {q}});
      for (unsigned q = 0; q < n; ++q) c.gates.push_back({GateKind::H, {q}});
    }
    auto lc = layerize(c);
    REQUIRE(lc.d_nc() == d);
    REQUIRE(lc.padded_kappa(0) == 4);
    auto [amp, trace] = amplitude_spir(lc, 0);
    CHECK(trace.inner_product_count == spir_count_law(d, 4));
    CHECK(std::abs(amp - amplitude_dense(c, std::uint64_t(0))) < 1e-10);
  }
}

TEST_CASE("spir split point freedom") {
  auto c = random_mixed_circuit(4, 14, 77);
  auto lc = layerize(c);
  if (lc.d_nc() < 2) return;
  EngineOptions mid, left, right;
  left.split = SplitRule::Leftmost;
  right.split = SplitRule::Rightmost;
  auto [a0, t0] = amplitude_spir(lc, 5);
  auto [a1, t1] = amplitude_spir(lc, 5, left);
  auto [a2, t2] = amplitude_spir(lc, 5, right);
  CHECK(std::abs(a0 - a1) < 1e-9);
  CHECK(std::abs(a0 - a2) < 1e-9);
}

TEST_CASE("spc: T on |0> keeps two terms and reconstructs T|0>") {
  auto c = parse("qubits 1\ngate t 0\n");
  auto [sum, trace] = evolve_spc(layerize(c));
  REQUIRE(sum.terms.size() == 2);
  CVec acc(2, 0.0);
  for (const auto& [coeff, st] : sum.terms) {
    auto v = to_dense(st);
    for (int i = 0; i < 2; ++i) acc[i] += coeff * v[i];
  }
  CHECK(std::abs(acc[0] - 1.0) < 1e-14);
  CHECK(std::abs(acc[1]) < 1e-14);
}

TEST_CASE("spc: H then T reconstructs the rotated plus state") {
  auto c = parse("qubits 1\ngate h 0\ngate t 0\n");
  auto [sum, trace] = evolve_spc(layerize(c));
  CVec acc(2, 0.0);
  for (const auto& [coeff, st] : sum.terms) {
    auto v = to_dense(st);
    for (int i = 0; i < 2; ++i) acc[i] += coeff * v[i];
  }
  CHECK(std::abs(acc[0] - 0.7071067811865476) < 1e-12);
  CHECK(std::abs(acc[1] - std::polar(0.7071067811865476, kPi / 4)) < 1e-12);
}

TEST_CASE("spc term-count law and Gram normalization") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    unsigned n = 2 + seed % 4;  // up to 5
    auto c = random_mixed_circuit(n, 8, 500 + seed);
    auto lc = layerize(c);
    if (lc.d_nc() == 0 || lc.d_nc() > 3) continue;
    bool small = true;
    for (unsigned l = 0; l < lc.d_nc(); ++l)
      if (lc.padded_kappa(l) > 256) small = false;
    if (!small) continue;

    StabilizerSum sum;
    sum.terms.push_back({cdouble(1, 0), StabilizerState::basis_state(lc.n, 0)});
    ExecutionTrace trace;
    detail::apply_clifford_gates(sum.terms, lc.clifford_layers.front());
    for (std::size_t l = 0; l < lc.nc_layers.size(); ++l) {
      detail::project_onto_layer(sum.terms, lc.padded_view(l), EngineOptions{}, int(l), trace);
      CHECK(sum.terms.size() == lc.padded_kappa(l));  // pruning off
      detail::apply_clifford_gates(sum.terms, lc.clifford_layers[l + 1]);
    }
    // <psi|psi> = sum_ij ci* cj <phi_i|phi_j> must be 1
    cdouble gram(0, 0);
    for (const auto& [ci, si] : sum.terms)
      for (const auto& [cj, sj] : sum.terms)
        gram += std::conj(ci) * cj * inner_product(si, sj).to_complex();
    CHECK(std::abs(gram - 1.0) <= 1e-9);
  }
}

TEST_CASE("spc equals spir and dense on random circuits") {
  SplitMix64 rng(21);
  int ran = 0;
  for (int trial = 0; trial < 80 && ran < 50; ++trial) {
    unsigned n = 2 + trial % 4;
    auto c = random_mixed_circuit(n, 9, 9000 + trial);
    auto lc = layerize(c);
    if (lc.d_nc() > 3 || spir_inner_product_estimate(lc) > 1e5 ||
        spc_inner_product_estimate(lc) > 1e5)
      continue;
    ++ran;
    std::uint64_t x = rng.next() & ((1ULL << n) - 1);
    auto [a_spir, t1] = amplitude_spir(lc, x);
    auto [a_spc, t2] = amplitude_spc(lc, x);
    CHECK(std::abs(a_spir - a_spc) <= 1e-8);
    CHECK(std::abs(a_spc - amplitude_dense(c, x)) <= 1e-8);
  }
  CHECK(ran >= 30);
}

TEST_CASE("spc capacity error names the offending layer") {
  auto c = parse("qubits 2\ngate t 0\ngate t 1\n");
  auto lc = layerize(c);
  EngineOptions opts;
  opts.mem_cap = 2;  // layer kappa is 4
  try {
    evolve_spc(lc, opts);
    FAIL("expected CapacityError");
  } catch (const CapacityError& e) {
    CHECK(e.layer == 0);
    CHECK(e.kappa == 4);
  }
}

TEST_CASE("spc pruning drops negligible terms without moving the amplitude") {
  // T on |0> leaves the |1> projector with a zero coefficient
  auto c = parse("qubits 2\ngate t 0\ngate t 1\ngate h 0\ngate t 0\n");
  auto lc = layerize(c);
  EngineOptions keep, prune;
  prune.prune = true;
  auto [kept_sum, t1] = evolve_spc(lc, keep);
  auto [pruned_sum, t2] = evolve_spc(lc, prune);
  CHECK(pruned_sum.terms.size() < kept_sum.terms.size());
  for (std::uint64_t x = 0; x < 4; ++x) {
    auto [a, ta] = amplitude_spc(lc, x, keep);
    auto [b, tb] = amplitude_spc(lc, x, prune);
    CHECK(std::abs(a - b) <= 1e-12);
  }
}

TEST_CASE("spc identity circuit amplitude") {
  auto c = parse("qubits 2\n");
  auto [amp, trace] = amplitude_spc(layerize(c), 0);
  CHECK(amp == cdouble(1, 0));
}

TEST_CASE("soc switchover trace: 3 single T layers then a T(x)T layer") {
  Circuit c;
  c.n = 2;
  c.gates = {{GateKind::T, {0}}, {GateKind::Barrier, {}}, {GateKind::T, {1}},
             {GateKind::Barrier, {}}, {GateKind::T, {0}}, {GateKind::Barrier, {}},
             {GateKind::T, {0}}, {GateKind::T, {1}}};
  auto lc = layerize(c);
  REQUIRE(lc.d_nc() == 4);
  auto [amp, trace] = amplitude_spc_soc(lc, 0);
  // Clifford terms reach 8 after three T expansions, exceeding kappa = 4 at
  // the final layer, which is where the collapse happens.
  CHECK(trace.max_live_terms == 8);
  auto [want, t2] = amplitude_spc(lc, 0);
  CHECK(std::abs(amp - want) < 1e-10);
}

TEST_CASE("soc without non-Clifford gates never switches") {
  auto c = parse("qubits 2\ngate h 0\ngate cx 0 1\n");
  auto [amp, trace] = amplitude_spc_soc(layerize(c), 3);
  CHECK(std::abs(amp - cdouble(0.7071067811865476, 0)) < 1e-14);
  CHECK(trace.max_live_terms == 1);
}

TEST_CASE("soc matches dense on random circuits") {
  SplitMix64 rng(31);
  int ran = 0;
  for (int trial = 0; trial < 40 && ran < 20; ++trial) {
    unsigned n = 2 + trial % 4;  // up to 5
    auto c = random_mixed_circuit(n, 8, 40000 + trial);
    auto lc = layerize(c);
    if (lc.d_nc() > 3 || spc_inner_product_estimate(lc) > 1e5) continue;
    ++ran;
    std::uint64_t x = rng.next() & ((1ULL << n) - 1);
    auto [amp, trace] = amplitude_spc_soc(lc, x);
    CHECK(std::abs(amp - amplitude_dense(c, x)) <= 1e-8);
  }
  CHECK(ran >= 12);
}

TEST_CASE("cut: x=1 enumerates two configurations") {
  Circuit c;
  c.n = 4;
  c.gates = {{GateKind::H, {0}}, {GateKind::T, {1}}, {GateKind::Cz, {1, 2}},
             {GateKind::H, {3}}, {GateKind::W, {2}}};
  auto plan = make_cut_plan(c, 0b0011);
  CHECK(plan.cut_count() == 1);
  auto [amp, trace] = amplitude_cut_hybrid(c, plan, 0);
  CHECK(std::abs(amp - amplitude_dense(c, std::uint64_t(0))) <= 1e-9);
}

TEST_CASE("cut: x=0 gives the product of independent patches") {
  Circuit c;
  c.n = 4;
  c.gates = {{GateKind::H, {0}}, {GateKind::T, {0}}, {GateKind::Cx, {0, 1}},
             {GateKind::H, {2}}, {GateKind::W, {3}}};
  auto plan = make_cut_plan(c, 0b0011);
  CHECK(plan.cut_count() == 0);
  for (std::uint64_t x : {0ULL, 5ULL, 10ULL, 15ULL}) {
    auto [amp, trace] = amplitude_cut_hybrid(c, plan, x);
    CHECK(std::abs(amp - amplitude_dense(c, x)) <= 1e-9);
  }
}

TEST_CASE("cut matches dense for x in {1,2,3}") {
  SplitMix64 rng(55);
  for (unsigned want_x = 1; want_x <= 3; ++want_x) {
    for (int trial = 0; trial < 6; ++trial) {
      Circuit c;
      c.n = 6;
      // random local gates + exactly want_x cross CZs at the 3|3 boundary
      for (int i = 0; i < 8; ++i) {
        unsigned q = static_cast<unsigned>(rng.next_below(6));
        static const GateKind pool[] = {GateKind::H, GateKind::S, GateKind::T, GateKind::W};
        c.gates.push_back({pool[rng.next_below(4)], {q}});
      }
      for (unsigned k = 0; k < want_x; ++k) {
        c.gates.push_back({GateKind::Cz, {static_cast<unsigned>(rng.next_below(3)),
                                          static_cast<unsigned>(3 + rng.next_below(3))}});
        static const GateKind mids[] = {GateKind::H, GateKind::S, GateKind::T, GateKind::Sx};
        c.gates.push_back({mids[rng.next_below(4)], {static_cast<unsigned>(rng.next_below(6))}});
      }
      auto plan = make_cut_plan(c, 0b000111);
      REQUIRE(plan.cut_count() == want_x);
      std::uint64_t x = rng.next() & 63;
      auto [amp, trace] = amplitude_cut_hybrid(c, plan, x);
      CHECK(std::abs(amp - amplitude_dense(c, x)) <= 1e-8);
    }
  }
}

TEST_CASE("cut rejects non-CZ cross gates and empty partitions") {
  Circuit c;
  c.n = 2;
  c.gates = {{GateKind::Cx, {0, 1}}};
  CHECK_THROWS_AS(make_cut_plan(c, 0b01), InputError);
  c.gates = {{GateKind::Cz, {0, 1}}};
  CHECK_THROWS_AS(make_cut_plan(c, 0b00), InputError);
  CHECK_THROWS_AS(make_cut_plan(c, 0b11), InputError);
}

TEST_CASE("dense engine rejects oversized circuits") {
  Circuit c;
  c.n = 15;
  CHECK_THROWS_AS(amplitude_dense(c, std::uint64_t(0)), InputError);
}

TEST_CASE("engines are bit-identical across thread counts") {
  auto c = random_mixed_circuit(5, 12, 321);
  auto lc = layerize(c);
  EngineOptions t1, t4;
  t1.threads = 1;
  t4.threads = 4;
  auto [a1, tr1] = amplitude_spir(lc, 9, t1);
  auto [a4, tr4] = amplitude_spir(lc, 9, t4);
  CHECK(a1.real() == a4.real());
  CHECK(a1.imag() == a4.imag());
  auto [b1, sr1] = amplitude_spc(lc, 9, t1);
  auto [b4, sr4] = amplitude_spc(lc, 9, t4);
  CHECK(b1.real() == b4.real());
  CHECK(b1.imag() == b4.imag());
}

TEST_CASE("term permutation leaves amplitudes unchanged") {
  auto c = parse("qubits 2\ngate h 0\ngate w 0\ngate fsim 0 1\ngate h 1\n");
  auto lc = layerize(c);
  auto [a0, t0] = amplitude_spir(lc, 2);
  auto lc2 = lc;
  for (auto& layer : lc2.nc_layers)
    for (auto& p : layer.placements) std::reverse(p.decomp.terms.begin(), p.decomp.terms.end());
  auto [a1, t1] = amplitude_spir(lc2, 2);
  CHECK(std::abs(a0 - a1) < 1e-12);
}
