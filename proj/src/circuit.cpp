#include "stabsim/circuit.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "stabsim/errors.hpp"

namespace stabsim {

std::size_t Circuit::gate_count() const {
  std::size_t m = 0;
  for (const auto& g : gates)
    if (g.kind != GateKind::Barrier) ++m;
  return m;
}

std::size_t Circuit::non_clifford_count() const {
  std::size_t t = 0;
  for (const auto& g : gates)
    if (!g.is_clifford()) ++t;
  return t;
}

unsigned Circuit::depth() const {
  std::vector<unsigned> frontier(n, 0);
  unsigned d = 0;
  for (const auto& g : gates) {
    if (g.kind == GateKind::Barrier) {
      std::fill(frontier.begin(), frontier.end(), d);
      continue;
    }
    unsigned level = 0;
    for (unsigned q : g.qubits) level = std::max(level, frontier[q]);
    ++level;
    for (unsigned q : g.qubits) frontier[q] = level;
    d = std::max(d, level);
  }
  return d;
}

Circuit parse(const std::string& text) {
  Circuit c;
  bool have_header = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "qubits") {
      long n = -1;
      if (!(ls >> n) || n < 1 || n > static_cast<long>(kMaxQubits))
        throw ParseError(lineno, "qubits must be in 1.." + std::to_string(kMaxQubits));
      if (have_header) throw ParseError(lineno, "duplicate qubits header");
      have_header = true;
      c.n = static_cast<std::uint32_t>(n);
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "trailing text after qubit count");
      continue;
    }
    if (!have_header) throw ParseError(lineno, "expected 'qubits N' before '" + word + "'");
    if (word == "barrier") {
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "trailing text after barrier");
      c.gates.push_back({GateKind::Barrier, {}});
      continue;
    }
    if (word != "gate") throw ParseError(lineno, "unknown directive '" + word + "'");
    std::string name;
    if (!(ls >> name)) throw ParseError(lineno, "missing gate name");
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return std::tolower(ch); });
    auto kind = gate_kind_from_name(name);
    if (!kind || *kind == GateKind::Barrier) throw ParseError(lineno, "unknown gate '" + name + "'");
    Gate g{*kind, {}};
    long q;
    while (ls >> q) {
      if (q < 0 || q >= static_cast<long>(c.n))
        throw ParseError(lineno, "index " + std::to_string(q) + " out of range (qubits " + std::to_string(c.n) + ")");
      g.qubits.push_back(static_cast<unsigned>(q));
    }
    if (!ls.eof()) throw ParseError(lineno, "malformed qubit list");
    if (g.qubits.size() != gate_arity(*kind))
      throw ParseError(lineno, "gate '" + name + "' expects " + std::to_string(gate_arity(*kind)) +
                                   " qubit(s), got " + std::to_string(g.qubits.size()));
    if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1])
      throw ParseError(lineno, "gate '" + name + "' needs distinct qubits");
    c.gates.push_back(std::move(g));
  }
  if (!have_header) throw ParseError(lineno ? lineno : 1, "missing 'qubits N' header");
  return c;
}

Circuit parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open circuit file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string serialize(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.n << "\n";
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::Barrier) {
      out << "barrier\n";
      continue;
    }
    out << "gate " << g.name();
    for (unsigned q : g.qubits) out << ' ' << q;
    out << "\n";
  }
  return out.str();
}

}  // namespace stabsim
