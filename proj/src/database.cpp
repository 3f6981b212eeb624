#include "stabsim/database.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "stabsim/errors.hpp"
#include "stabsim/gates.hpp"
#include "stabsim/state_catalog.hpp"

namespace stabsim {

namespace {
constexpr double kPi = std::numbers::pi_v<double>;

struct RawTerm {
  const char* label;
  double re, im;
};

ProjectorDecomposition from_labels(unsigned arity, const char* source,
                                   std::initializer_list<RawTerm> raw) {
  ProjectorDecomposition d;
  d.arity = arity;
  d.source = source;
  for (const auto& t : raw) d.terms.push_back({{t.re, t.im}, labeled_state(t.label)});
  return d;
}

CMat iswap_dg() { return mat_adjoint(gate_matrix(GateKind::ISwap)); }

CMat w_on(unsigned slot) {  // sqrt(W) on qubit `slot` of two
  return embed_gate(2, {slot}, gate_matrix(GateKind::W));
}
}  // namespace

CMat database_target(const std::string& name) {
  if (name == "fsim") return gate_matrix(GateKind::FSim);
  if (name == "t") return gate_matrix(GateKind::T);
  if (name == "tdg") return gate_matrix(GateKind::Tdg);
  if (name == "cs") return gate_matrix(GateKind::Cs);
  if (name == "w") return gate_matrix(GateKind::W);
  if (name == "ww" || name == "ww_d" || name == "ww_e")
    return kron_low(gate_matrix(GateKind::W), gate_matrix(GateKind::W));
  if (name == "fsim_w1") return mat_mul(gate_matrix(GateKind::FSim), w_on(0));
  if (name == "fsim_w2") return mat_mul(gate_matrix(GateKind::FSim), w_on(1));
  if (name == "fsim_w1w2")
    return mat_mul(gate_matrix(GateKind::FSim), mat_mul(w_on(0), w_on(1)));
  if (name == "w2_iswap_cz_w1")
    return mat_mul(w_on(1), mat_mul(iswap_dg(), mat_mul(gate_matrix(GateKind::Cz), w_on(0))));
  throw InputError("no target matrix for database entry '" + name + "'");
}

void Database::add(DbEntry e) {
  auto rep = verify_decomposition(e.decomp, e.target, e.tol);
  if (!rep.pass)
    throw ConsistencyError("database entry '" + e.name + "' fails verification: max error " +
                           std::to_string(rep.max_error) + " > tol " + std::to_string(e.tol));
  entries_[e.name] = std::move(e);
}

const DbEntry& Database::entry(const std::string& name) const {
  std::string key = name == "ww" ? "ww_e" : name;
  auto it = entries_.find(key);
  if (it == entries_.end()) throw InputError("unknown decomposition database gate '" + name + "'");
  return it->second;
}

bool Database::has(const std::string& name) const {
  return entries_.count(name == "ww" ? "ww_e" : name) != 0;
}

std::vector<std::string> Database::names() const {
  std::vector<std::string> v;
  for (const auto& [k, e] : entries_) v.push_back(k);
  return v;
}

Database Database::builtin() {
  Database db;
  const cdouble i1(0, 1);
  const double is2 = 0.70710678118654752440;

  // fsim(pi/2, pi/6): exact four-term expansion over the zz Bell family.
  {
    ProjectorDecomposition d = from_labels(2, "builtin", {});
    d.terms = {{cdouble(1, 0), labeled_state("zz")},
               {std::polar(1.0, -kPi / 6), labeled_state("ZZ")},
               {-i1, labeled_state("Psi+_zz")},
               {i1, labeled_state("Psi-_zz")}};
    db.add({"fsim", d, database_target("fsim"), 1e-12, "exact"});
  }
  // t, tdg, cs: diagonal gates, exact basis-projector expansions.
  db.add({"t", diagonal_decomposition({1.0, std::polar(1.0, kPi / 4)}), database_target("t"), 1e-15, "exact"});
  db.add({"tdg", diagonal_decomposition({1.0, std::polar(1.0, -kPi / 4)}), database_target("tdg"), 1e-15, "exact"});
  db.add({"cs", diagonal_decomposition({1.0, 1.0, 1.0, i1}), database_target("cs"), 1e-15, "exact"});

  // Single sqrt(W): rank-3 support found by search_decomposition, frozen.
  {
    auto d = from_labels(1, "searched",
                         {{"x", is2, 0.0}, {"X", is2, 1.0}, {"y", 0.0, -1.0}});
    db.add({"w", d, database_target("w"), 1e-9, "searched rank-3 support {x, xbar, y}"});
  }

  // sqrt(W) (x) sqrt(W), spectral variant: exact coefficients.
  {
    auto d = from_labels(2, "builtin",
                         {{"Psi-_zz", 1.0, 0.0},
                          {"Phi-i_zz", 1.0, 0.0},
                          {"xx", 0.0, -is2},
                          {"XX", 0.0, is2},
                          {"yy", 0.0, -is2},
                          {"YY", 0.0, is2}});
    db.add({"ww_e", d, database_target("ww"), 1e-12, "spectral construction, rank 6"});
  }
  // sqrt(W) (x) sqrt(W), alternative support; refit coefficients.
  {
    auto d = from_labels(2, "refit",
                         {{"Phi-_zz", 0.0, -1.4142135623730951},
                          {"Psi-_zz", 1.0, 0.0},
                          {"Phi+i_zz", 0.0, is2},
                          {"Phi-i_zz", 1.0, is2},
                          {"xx", 0.0, -1.4142135623730951},
                          {"YY", 0.0, 1.4142135623730951}});
    db.add({"ww_d", d, database_target("ww"), 1e-9, "alternative rank-6 support"});
  }
  // fsim * sqrt(W1): rank 12 (searched support, refit coefficients).
  {
    auto d = from_labels(2, "refit",
                         {{"ZZ", 2.0453851375880152, -0.39644660940672566},
                          {"Zy", -1.0, -1.4142135623730949},
                          {"Xz", 1.0, 0.0},
                          {"XZ", 0.31698729810777992, 0.18301270189221985},
                          {"Xx", -1.0, 1.0},
                          {"yz", 1.0, 0.41421356237309498},
                          {"Yy", 0.0, 1.4142135623730949},
                          {"Phi+i_zy", -1.0, -0.41421356237309537},
                          {"zx", 0.0, -1.0},
                          {"zz", 0.2071067811865473, -0.20710678118654663},
                          {"zZ", 0.93301270189222119, -0.24999999999999906},
                          {"yZ", -1.1830127018922205, 0.31698729810777926}});
    db.add({"fsim_w1", d, database_target("fsim_w1"), 1e-9, "searched rank-12 support"});
  }
  // fsim * sqrt(W2): rank 12 (searched support, refit coefficients).
  {
    auto d = from_labels(2, "refit",
                         {{"Zz", 0.24999999999999822, 1.7377505560165838},
                          {"ZZ", 1.3623724356957936, 0.1770903842367646},
                          {"Zx", -0.31698729810777893, -1.9877505560165849},
                          {"xZ", -1.0, 0.80473785412436505},
                          {"Xx", 0.0, 0.80473785412436682},
                          {"Phi-_xz", 0.0, 0.80473785412436616},
                          {"Phi-_xx", 0.0, -1.6094757082487279},
                          {"Phi-i_yy", 1.0, 1.0},
                          {"Zy", -1.1830127018922196, -0.68301270189221996},
                          {"Yy", 1.0, 0.0},
                          {"zz", 0.20710678118654824, -0.40236892706218313},
                          {"Phi-i_zy", 0.0, -1.0}});
    db.add({"fsim_w2", d, database_target("fsim_w2"), 1e-9, "searched rank-12 support"});
  }
  // fsim * sqrt(W1) sqrt(W2): rank-10 support found by search.
  {
    auto d = from_labels(2, "refit",
                         {{"zz", 0.066987298107781534, 0.2499999999999995},
                          {"Phi+_zx", -0.48296291314453393, -0.57769725863528776},
                          {"Psi+_zz", -1.9084025293215123, -0.25124595938728089},
                          {"Psi-_zz", 0.0, 1.0},
                          {"Phi+i_zz", -0.93301270189221874, 0.25000000000000033},
                          {"XX", 0.93125064922856704, 0.83651630373780062},
                          {"yy", 0.8477423575416918, -0.36112647630851391},
                          {"YY", 1.6842586612795007, 0.12183643683602099},
                          {"Psi+_yy", -0.10936442364485664, -1.0012459593872804},
                          {"Phi+i_zy", 0.83651630373780139, 0.48296291314454182}});
    db.add({"fsim_w1w2", d, database_target("fsim_w1w2"), 1e-9, "rank-10 support"});
  }
  // sqrt(W2) iswap^dag CZ sqrt(W1): rank 10.
  {
    auto d = from_labels(2, "refit",
                         {{"Phi+_yz", 0.0, -0.20710678118654813},
                          {"Phi-_xz", 0.0, 1.2071067811865466},
                          {"Phi-_yz", 0.0, -0.20710678118654521},
                          {"Phi+i_zy", 0.0, -1.0},
                          {"Phi+i_yx", 0.0, -1.0},
                          {"Phi-i_yy", 0.0, 0.20710678118654841},
                          {"zz", 0.5, 0.5},
                          {"ZZ", -0.5, 0.5},
                          {"xy", -0.70710678118654946, 0.5},
                          {"XY", 0.70710678118654602, 0.5}});
    db.add({"w2_iswap_cz_w1", d, database_target("w2_iswap_cz_w1"), 1e-9,
            "standalone composite exhibit, rank 10"});
  }
  return db;
}

// ---- text format ----
//   # comment
//   version 1
//   entry <name>
//   arity <k>
//   source <tag>
//   tol <float>
//   note <free text to end of line>
//   term <re> <im> <pivot bits> <pauli> <pauli> ...
//   end

void Database::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write database file: " + path);
  out << "# stabsim decomposition database\n";
  out << "version 1\n";
  out.precision(17);
  for (const auto& [name, e] : entries_) {
    out << "entry " << name << "\n";
    out << "arity " << e.decomp.arity << "\n";
    out << "source " << e.decomp.source << "\n";
    out << "tol " << e.tol << "\n";
    if (!e.note.empty()) out << "note " << e.note << "\n";
    for (const auto& t : e.decomp.terms) {
      out << "term " << t.coefficient.real() << " " << t.coefficient.imag() << " ";
      for (unsigned q = 0; q < e.decomp.arity; ++q)
        out << (((t.projector_state.pivot() >> q) & 1) ? '1' : '0');
      for (const auto& g : t.projector_state.generators()) out << " " << g.to_string();
      out << "\n";
    }
    out << "end\n";
  }
}

Database Database::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open database file: " + path);
  Database db;
  std::string line;
  int lineno = 0;
  bool versioned = false;
  DbEntry cur;
  bool open = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "version") {
      int v = 0;
      if (!(ls >> v) || v != 1) throw ParseError(lineno, "unsupported database version");
      versioned = true;
    } else if (word == "entry") {
      if (open) throw ParseError(lineno, "missing 'end' before new entry");
      if (!versioned) throw ParseError(lineno, "missing version header");
      cur = DbEntry{};
      if (!(ls >> cur.name)) throw ParseError(lineno, "entry needs a name");
      cur.tol = 1e-9;
      open = true;
    } else if (!open) {
      throw ParseError(lineno, "directive outside an entry: " + word);
    } else if (word == "arity") {
      unsigned a;
      if (!(ls >> a) || a < 1 || a > 6) throw ParseError(lineno, "bad arity");
      cur.decomp.arity = a;
    } else if (word == "source") {
      ls >> cur.decomp.source;
    } else if (word == "tol") {
      if (!(ls >> cur.tol)) throw ParseError(lineno, "bad tol");
    } else if (word == "note") {
      std::getline(ls, cur.note);
      if (!cur.note.empty() && cur.note.front() == ' ') cur.note.erase(0, 1);
    } else if (word == "term") {
      double re, im;
      std::string pivot_bits;
      if (!(ls >> re >> im >> pivot_bits)) throw ParseError(lineno, "malformed term");
      if (pivot_bits.size() != cur.decomp.arity) throw ParseError(lineno, "pivot width != arity");
      std::uint64_t pivot = 0;
      for (std::size_t i = 0; i < pivot_bits.size(); ++i) {
        if (pivot_bits[i] == '1') pivot |= 1ULL << i;
        else if (pivot_bits[i] != '0') throw ParseError(lineno, "bad pivot bits");
      }
      std::vector<PauliOperator> gens;
      std::string pstr;
      while (ls >> pstr) {
        try {
          gens.push_back(PauliOperator::from_string(cur.decomp.arity, pstr));
        } catch (const Error& err) {
          throw ParseError(lineno, err.what());
        }
      }
      try {
        auto st = StabilizerState::from_generators(cur.decomp.arity, std::move(gens), pivot);
        cur.decomp.terms.push_back({{re, im}, std::move(st)});
      } catch (const Error& err) {
        throw ParseError(lineno, err.what());
      }
    } else if (word == "end") {
      try {
        cur.target = database_target(cur.name);
      } catch (const Error& err) {
        throw ParseError(lineno, err.what());
      }
      db.add(std::move(cur));  // throws ConsistencyError when verification fails
      open = false;
    } else {
      throw ParseError(lineno, "unknown directive '" + word + "'");
    }
  }
  if (open) throw ParseError(lineno, "unterminated entry");
  return db;
}

const Database& database() {
  static const Database db = [] {
    if (const char* path = std::getenv("STABSIM_DB")) return Database::load(path);
    return Database::builtin();
  }();
  return db;
}

const ProjectorDecomposition& builtin_decomposition(const std::string& gate_name) {
  return database().entry(gate_name).decomp;
}

}  // namespace stabsim
