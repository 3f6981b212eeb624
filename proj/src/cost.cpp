#include "stabsim/cost.hpp"

#include <cmath>

#include "stabsim/errors.hpp"

namespace stabsim {

namespace {
double log2p(double v) { return std::log2(std::max(v, 1.0)); }
}

CostEstimate predicted_cost(const CostQuery& q) {
  CostEstimate e;
  switch (q.method) {
    case CostMethod::Direct:  // m 2^n, space 2^n
      e.log2_time = log2p(q.m) + q.n;
      e.log2_space = q.n;
      return e;
    case CostMethod::Feynman:  // 4^m, space m + n
      e.log2_time = 2 * q.m;
      e.log2_space = log2p(q.m + q.n);
      return e;
    case CostMethod::Hybrid:  // 2^{n/2 + x}, space 2^{n/2 + 1}
      if (!q.x) throw InputError("hybrid cost needs the cut count x");
      e.log2_time = q.n / 2 + *q.x;
      e.log2_space = q.n / 2 + 1;
      return e;
    case CostMethod::RecursivePath:  // d^n, space n log d
      e.log2_time = q.n * log2p(q.d);
      e.log2_space = log2p(q.n * log2p(q.d));
      return e;
    case CostMethod::StabilizerRank:  // n^3 2^{0.47 t}, space 2^{0.47 t}
      if (!q.t) throw InputError("stabilizer-rank cost needs the non-Clifford count t");
      e.log2_time = 3 * log2p(q.n) + 0.47 * *q.t;
      e.log2_space = 0.47 * *q.t;
      return e;
    case CostMethod::Spir:  // n^3 (2 d_nc)^k, space n log d_nc
      if (q.d_nc <= 0) throw InputError("SPIR cost needs d_nc >= 1");
      e.log2_time = 3 * log2p(q.n) + q.k * std::log2(2 * q.d_nc);
      e.log2_space = log2p(q.n * log2p(q.d_nc));
      return e;
    case CostMethod::Spc:  // d_nc 2^{2k} n^3, space 2^k
      if (q.d_nc <= 0) throw InputError("SPC cost needs d_nc >= 1");
      e.log2_time = log2p(q.d_nc) + 2 * q.k + 3 * log2p(q.n);
      e.log2_space = q.k;
      return e;
  }
  throw InputError("unknown cost method");
}

double threshold_p(GateFamily family, double d_nc) {
  if (d_nc < 1) throw InputError("d_nc must be >= 1");
  switch (family) {
    case GateFamily::Cz:
      return std::log2(d_nc) / (0.47 * d_nc);
    case GateFamily::Cs:
      return 2 * (std::log2(d_nc) - d_nc / 4) / (0.47 * d_nc);
  }
  throw InputError("unknown family");
}

std::optional<std::uint64_t> crossover_dnc(GateFamily family, double p, std::uint64_t limit) {
  if (p <= 0) throw InputError("p must be positive");
  for (std::uint64_t d = 2; d <= limit; ++d)
    if (threshold_p(family, static_cast<double>(d)) <= p) return d;
  return std::nullopt;
}

double supremacy_cycle_log2_kappa(const SupremacyCensus& c) {
  if (c.fsim_w1 < 0 || c.fsim_c < 0 || c.fsim_w1w2 < 0 || c.lone_w_pairs < 0 || c.lone_w_singles < 0)
    throw InputError("census counts must be non-negative");
  return c.fsim_w1 * std::log2(12.0) + c.fsim_c * std::log2(4.0) + c.fsim_w1w2 * std::log2(10.0) +
         c.lone_w_pairs * std::log2(6.0) + c.lone_w_singles * std::log2(3.0);
}

void emit_threshold_csv(std::ostream& out, unsigned lo, unsigned hi) {
  if (lo > hi || lo < 1) throw InputError("bad d_nc range");
  out << "d_nc,p_threshold_cz,p_threshold_cs\n";
  char buf[64];
  for (unsigned d = lo; d <= hi; ++d) {
    double cz = threshold_p(GateFamily::Cz, d);
    double cs = threshold_p(GateFamily::Cs, d);
    std::snprintf(buf, sizeof buf, "%u,%.6g,%.6g\n", d, cz, cs);
    out << buf;
  }
}

}  // namespace stabsim
