// stabsim: stabilizer-projector strong simulation of quantum circuits.
//
// Subcommands: simulate, decomp (show|verify|search), gen, cost
// (estimate|thresholds|crossover|supremacy).  Output is key: value lines or
// CSV.  Exit codes: 0 ok, 2 usage/input error, 3 capacity, 4 internal
// consistency failure.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "stabsim/circuit.hpp"
#include "stabsim/cost.hpp"
#include "stabsim/database.hpp"
#include "stabsim/engines.hpp"
#include "stabsim/ensemble.hpp"
#include "stabsim/errors.hpp"
#include "stabsim/layered.hpp"

using namespace stabsim;

namespace {

void print_kv(const char* key, const std::string& value) { std::printf("%s: %s\n", key, value.c_str()); }
void print_kv(const char* key, double value) { std::printf("%s: %.12g\n", key, value); }
void print_kv(const char* key, std::uint64_t value) { std::printf("%s: %" PRIu64 "\n", key, value); }

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int cmd_simulate(const std::string& method, const std::string& circuit_path, const std::string& x,
                 const EngineOptions& opts, unsigned cut_at, const std::string& out_path) {
  Circuit c = parse_file(circuit_path);
  std::uint64_t xbits = parse_bitstring(x, c.n);
  if (!out_path.empty() && out_path != "-" && !std::freopen(out_path.c_str(), "w", stdout))
    throw InputError("cannot write " + out_path);

  cdouble amp(0, 0);
  ExecutionTrace trace;
  if (method == "dense") {
    auto t0 = std::chrono::steady_clock::now();
    amp = amplitude_dense(c, xbits);
    trace.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  } else if (method == "cut") {
    unsigned k = cut_at == 0 ? (c.n + 1) / 2 : cut_at;
    auto plan = make_cut_plan(c, (1ULL << k) - 1);
    std::tie(amp, trace) = amplitude_cut_hybrid(c, plan, xbits, opts);
    print_kv("cut_count", std::uint64_t(plan.cut_count()));
  } else {
    LayeredCircuit lc = layerize(c);
    if (method == "spir") std::tie(amp, trace) = amplitude_spir(lc, xbits, opts);
    else if (method == "spc") std::tie(amp, trace) = amplitude_spc(lc, xbits, opts);
    else if (method == "spc-soc") std::tie(amp, trace) = amplitude_spc_soc(lc, xbits, opts);
    else throw InputError("unknown method '" + method + "'");
    print_kv("d_nc", std::uint64_t(lc.d_nc()));
  }
  print_kv("method", method);
  print_kv("n", std::uint64_t(c.n));
  print_kv("x", x);
  print_kv("amplitude_re", amp.real());
  print_kv("amplitude_im", amp.imag());
  print_kv("probability", std::norm(amp));
  print_kv("inner_products", trace.inner_product_count);
  print_kv("leaf_count", trace.leaf_count);
  print_kv("max_live_terms", trace.max_live_terms);
  print_kv("peak_bytes", trace.peak_bytes);
  print_kv("wall_ms", trace.wall_ms);
  return 0;
}

int cmd_decomp_show(const std::string& gate) {
  const auto& e = database().entry(gate);
  print_kv("entry", e.name);
  print_kv("arity", std::uint64_t(e.decomp.arity));
  print_kv("rank", std::uint64_t(e.decomp.rank()));
  print_kv("source", e.decomp.source);
  if (!e.note.empty()) print_kv("note", e.note);
  for (std::size_t i = 0; i < e.decomp.terms.size(); ++i) {
    const auto& t = e.decomp.terms[i];
    std::ostringstream line;
    line << "(" << fmt12(t.coefficient.real()) << ", " << fmt12(t.coefficient.imag()) << ") pivot ";
    for (unsigned q = 0; q < e.decomp.arity; ++q)
      line << (((t.projector_state.pivot() >> q) & 1) ? '1' : '0');
    for (const auto& g : t.projector_state.generators()) line << " " << g.to_string();
    std::printf("term %zu: %s\n", i, line.str().c_str());
  }
  return 0;
}

int cmd_decomp_verify(const std::string& gate, double tol) {
  const auto& e = database().entry(gate);
  auto rep = verify_decomposition(e.decomp, e.target, tol);
  print_kv("entry", e.name);
  print_kv("rank", std::uint64_t(rep.rank));
  print_kv("max_error", rep.max_error);
  print_kv("pass", std::string(rep.pass ? "true" : "false"));
  return rep.pass ? 0 : 4;
}

CMat read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file: " + path);
  std::size_t dim;
  if (!(in >> dim) || (dim != 2 && dim != 4)) throw InputError("matrix file must start with dimension 2 or 4");
  CMat m(dim);
  for (std::size_t i = 0; i < dim * dim; ++i) {
    double re, im;
    if (!(in >> re >> im)) throw InputError("matrix file needs dim^2 're im' pairs");
    m.a[i] = {re, im};
  }
  return m;
}

int cmd_decomp_search(const std::string& gate, const std::string& matrix_path, unsigned max_rank,
                      std::uint64_t budget, std::uint64_t seed) {
  CMat target = matrix_path.empty() ? database_target(gate) : read_matrix_file(matrix_path);
  auto found = search_decomposition(target, max_rank, budget, seed);
  if (!found) {
    print_kv("found", std::string("false"));
    return 0;
  }
  print_kv("found", std::string("true"));
  print_kv("rank", std::uint64_t(found->rank()));
  for (std::size_t i = 0; i < found->terms.size(); ++i) {
    const auto& t = found->terms[i];
    std::ostringstream line;
    line << "(" << fmt12(t.coefficient.real()) << ", " << fmt12(t.coefficient.imag()) << ")";
    for (const auto& g : t.projector_state.generators()) line << " " << g.to_string();
    std::printf("term %zu: %s\n", i, line.str().c_str());
  }
  return 0;
}

int cmd_gen(const std::string& family, unsigned n, unsigned cycles, double p, std::uint64_t seed,
            const std::string& out_path) {
  auto c = ensemble_generate(ensemble_family_from_name(family), n, cycles, p, seed);
  std::string text = serialize(c);
  if (out_path.empty() || out_path == "-") {
    std::fputs(text.c_str(), stdout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot write " + out_path);
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabilizer-projector simulator"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "evaluate one output amplitude");
  std::string method = "dense", circuit_path, xstr, out_path;
  EngineOptions opts;
  unsigned cut_at = 0;
  std::uint64_t sim_seed = 0;
  double tol = 1e-9;
  sim->add_option("circuit", circuit_path, ".sqc circuit file")->required();
  sim->add_option("--method", method, "dense|spir|spc|spc-soc|cut");
  sim->add_option("--x", xstr, "output bitstring, qubit 0 first")->required();
  sim->add_option("--threads", opts.threads, "worker threads");
  sim->add_option("--mem-cap", opts.mem_cap, "max live terms per layer");
  sim->add_flag("--prune", opts.prune, "drop negligible SPC terms");
  sim->add_option("--cut-at", cut_at, "patch A = first k qubits (cut method)");
  sim->add_option("--out", out_path, "write the report to a file");
  sim->add_option("--seed", sim_seed)->group("");  // reserved

  // decomp show|verify|search
  auto* dec = app.add_subcommand("decomp", "projector decomposition tools");
  dec->require_subcommand(1);
  std::string gate, matrix_path;
  unsigned max_rank = 16;
  std::uint64_t budget = 2'000'000, seed = 1;
  auto* show = dec->add_subcommand("show", "print a database entry");
  show->add_option("gate", gate, "gate name")->required();
  auto* verify = dec->add_subcommand("verify", "reconstruct and compare");
  verify->add_option("gate", gate, "gate name")->required();
  verify->add_option("--tol", tol, "max entry error");
  auto* search = dec->add_subcommand("search", "find a stabilizer projector support");
  search->add_option("--gate", gate, "database gate name");
  search->add_option("--matrix", matrix_path, "dense matrix file (dim, then re im pairs)");
  search->add_option("--max-rank", max_rank, "largest support size");
  search->add_option("--budget", budget, "least-squares solve budget");
  search->add_option("--seed", seed, "sampling seed");

  // gen
  auto* gen = app.add_subcommand("gen", "generate an ensemble circuit");
  std::string family = "cz";
  unsigned n = 4, cycles = 2;
  double p = 1.0 / 3.0;
  std::uint64_t gen_seed = 1;
  gen->add_option("--family", family, "cz|cs|supremacy_like")->required();
  gen->add_option("--n", n, "qubit count")->required();
  gen->add_option("--cycles", cycles, "cycle count")->required();
  gen->add_option("--p", p, "non-Clifford probability (cz/cs)");
  gen->add_option("--seed", gen_seed, "PRNG seed");
  gen->add_option("--out", out_path, "output path (default stdout)");

  // cost estimate|thresholds|crossover|supremacy
  auto* cost = app.add_subcommand("cost", "closed-form scaling model");
  cost->require_subcommand(1);
  auto* est = cost->add_subcommand("estimate", "evaluate one scaling row");
  std::string cost_method = "spir", cost_circuit;
  double qn = 0, qm = 0, qd = 0, qdnc = 0, qk = 0;
  double qx_val = -1, qt_val = -1;
  est->add_option("--method", cost_method, "direct|feynman|hybrid|recursive_path|stabilizer_rank|spir|spc")
      ->required();
  est->add_option("--circuit", cost_circuit, "derive n/m/d/d_nc/k from a circuit");
  est->add_option("--n", qn);
  est->add_option("--m", qm);
  est->add_option("--d", qd);
  est->add_option("--dnc", qdnc);
  est->add_option("--k", qk, "log2 of the per-layer rank");
  est->add_option("--cut-x", qx_val, "cross-patch gate count");
  est->add_option("--t", qt_val, "non-Clifford gate count");

  auto* thr = cost->add_subcommand("thresholds", "emit the threshold CSV");
  unsigned lo = 2, hi = 40;
  thr->add_option("--from", lo, "first d_nc");
  thr->add_option("--to", hi, "last d_nc");
  thr->add_option("--out", out_path, "CSV path (default stdout)");

  auto* cross = cost->add_subcommand("crossover", "first d_nc with threshold <= p");
  std::string cross_family = "cz";
  double cross_p = 1.0 / 3.0;
  cross->add_option("family", cross_family, "cz|cs")->required();
  cross->add_option("p", cross_p, "non-Clifford density")->required();

  auto* sup = cost->add_subcommand("supremacy", "per-cycle rank accounting");
  SupremacyCensus census;
  sup->add_option("--fsim-w1", census.fsim_w1);
  sup->add_option("--fsim-c", census.fsim_c);
  sup->add_option("--fsim-w1w2", census.fsim_w1w2);
  sup->add_option("--lone-w-pairs", census.lone_w_pairs);
  sup->add_option("--lone-w-singles", census.lone_w_singles);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (sim->parsed()) return cmd_simulate(method, circuit_path, xstr, opts, cut_at, out_path);
    if (show->parsed()) return cmd_decomp_show(gate);
    if (verify->parsed()) return cmd_decomp_verify(gate, tol);
    if (search->parsed()) {
      if (gate.empty() && matrix_path.empty())
        throw InputError("decomp search needs --gate or --matrix");
      return cmd_decomp_search(gate, matrix_path, max_rank, budget, seed);
    }
    if (gen->parsed()) return cmd_gen(family, n, cycles, p, gen_seed, out_path);
    if (est->parsed()) {
      CostQuery q;
      if (cost_method == "direct") q.method = CostMethod::Direct;
      else if (cost_method == "feynman") q.method = CostMethod::Feynman;
      else if (cost_method == "hybrid") q.method = CostMethod::Hybrid;
      else if (cost_method == "recursive_path") q.method = CostMethod::RecursivePath;
      else if (cost_method == "stabilizer_rank") q.method = CostMethod::StabilizerRank;
      else if (cost_method == "spir") q.method = CostMethod::Spir;
      else if (cost_method == "spc") q.method = CostMethod::Spc;
      else throw InputError("unknown cost method '" + cost_method + "'");
      if (!cost_circuit.empty()) {
        auto st = stats(layerize(parse_file(cost_circuit)));
        q.n = st.n;
        q.m = static_cast<double>(st.m);
        q.d = st.d;
        q.d_nc = st.d_nc;
        for (double kl : st.kappa_log2) q.k = std::max(q.k, kl);
        q.t = static_cast<double>(st.t);
      } else {
        q.n = qn; q.m = qm; q.d = qd; q.d_nc = qdnc; q.k = qk;
      }
      if (qx_val >= 0) q.x = qx_val;
      if (qt_val >= 0) q.t = qt_val;
      auto e = predicted_cost(q);
      print_kv("method", cost_method);
      print_kv("log2_time", e.log2_time);
      print_kv("log2_space", e.log2_space);
      return 0;
    }
    if (thr->parsed()) {
      if (out_path.empty() || out_path == "-") {
        emit_threshold_csv(std::cout, lo, hi);
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw InputError("cannot write " + out_path);
        emit_threshold_csv(out, lo, hi);
      }
      return 0;
    }
    if (cross->parsed()) {
      GateFamily fam;
      if (cross_family == "cz") fam = GateFamily::Cz;
      else if (cross_family == "cs") fam = GateFamily::Cs;
      else throw InputError("unknown family '" + cross_family + "'");
      auto v = crossover_dnc(fam, cross_p);
      print_kv("family", cross_family);
      print_kv("p", cross_p);
      if (v) print_kv("crossover_dnc", std::uint64_t(*v));
      else print_kv("crossover_dnc", std::string("none"));
      return 0;
    }
    if (sup->parsed()) {
      double k = supremacy_cycle_log2_kappa(census);
      print_kv("log2_kappa", k);
      print_kv("k_per_qubit_n53", k / 53.0);
      print_kv("spir_exponent_coeff", k / 53.0 * std::log2(40.0));
      print_kv("recursive_path_coeff", std::log2(80.0));
      return 0;
    }
  } catch (const CapacityError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const ConsistencyError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  }
  return 2;
}
