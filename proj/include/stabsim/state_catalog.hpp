#ifndef STABSIM_STATE_CATALOG_HPP
#define STABSIM_STATE_CATALOG_HPP

#include <string>
#include <vector>

#include "stabsim/stabilizer_state.hpp"

namespace stabsim {

// Single-qubit labels: z=|0>, Z=|1>, x=|+>, X=|->, y=|+i>, Y=|-i>.
// Two-qubit labels: products "ab", and maximally entangled
//   "Phi<s>_ab" = (|ab> + s|a~ b~>)/sqrt2,  "Psi<s>_ab" = (|a b~> + s|a~ b>)/sqrt2
// with s one of +, -, +i, -i and ~ the antipodal label.
StabilizerState labeled_state(const std::string& label);

struct CatalogEntry {
  std::string name;
  StabilizerState state;
};

// Canonical enumerations used by search_decomposition; fixed order.
const std::vector<CatalogEntry>& one_qubit_catalog();  // 6 states
const std::vector<CatalogEntry>& two_qubit_catalog();  // 60 states

}  // namespace stabsim

#endif
