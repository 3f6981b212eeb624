#ifndef STABSIM_CIRCUIT_HPP
#define STABSIM_CIRCUIT_HPP

#include <string>
#include <vector>

#include "stabsim/gates.hpp"

namespace stabsim {

// Ordered gate list over n qubits.  Barriers are kept in the list; they only
// influence layering and are ignored by the dense engine.
struct Circuit {
  std::uint32_t n = 0;
  std::vector<Gate> gates;

  std::size_t gate_count() const;     // barriers excluded
  std::size_t non_clifford_count() const;
  unsigned depth() const;             // standard per-qubit frontier depth
};

// .sqc text format: '# comment', 'qubits N', 'gate <name> <q...>', 'barrier'.
Circuit parse(const std::string& text);
Circuit parse_file(const std::string& path);
std::string serialize(const Circuit& c);

}  // namespace stabsim

#endif
