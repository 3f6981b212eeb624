#ifndef STABSIM_DECOMPOSITION_HPP
#define STABSIM_DECOMPOSITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "stabsim/dense_math.hpp"
#include "stabsim/stabilizer_state.hpp"

namespace stabsim {

struct ProjectorTerm {
  cdouble coefficient;
  StabilizerState projector_state;  // normalized, |scalar| = 1
};

// Expansion  U = sum_i c_i |phi_i><phi_i|  over stabilizer projectors.
struct ProjectorDecomposition {
  unsigned arity = 0;
  std::vector<ProjectorTerm> terms;
  std::string source;  // builtin | diagonal | padded | tensor | refit | searched

  std::size_t rank() const { return terms.size(); }
};

// Exact expansion of a diagonal gate over computational-basis projectors.
ProjectorDecomposition diagonal_decomposition(const CVec& diag_entries);

ProjectorDecomposition tensor(const ProjectorDecomposition& a, const ProjectorDecomposition& b);

struct GatePlacement {
  ProjectorDecomposition decomp;
  std::vector<unsigned> qubits;
};

// Full-width layer: placements tensored together, untouched qubits padded
// with the computational-basis expansion of the identity.
ProjectorDecomposition pad_layer(const std::vector<GatePlacement>& placements, unsigned n);

// Lazy enumeration of the padded layer's terms in canonical order (placement
// 0 is the most significant mixed-radix digit, the untouched basis pattern
// the least significant block).  Engines build terms on demand instead of
// materializing all kappa full-width states.
class PaddedLayerView {
 public:
  PaddedLayerView(std::vector<GatePlacement> placements, unsigned n);

  std::uint64_t term_count() const { return count_; }
  unsigned width() const { return n_; }
  // True when every placement is a computational-basis (diagonal) expansion,
  // so every padded term is a basis state.
  bool all_basis() const { return all_basis_; }
  std::pair<cdouble, StabilizerState> term(std::uint64_t t) const;
  // Coefficient and basis pattern without building the state; pre: all_basis().
  std::pair<cdouble, std::uint64_t> term_basis(std::uint64_t t) const;

 private:
  std::vector<GatePlacement> placements_;
  unsigned n_;
  std::vector<unsigned> untouched_;
  std::uint64_t count_;
  bool all_basis_;
};

CMat reconstruct(const ProjectorDecomposition& d);

struct VerifyReport {
  double max_error = 0.0;
  std::size_t rank = 0;
  bool pass = false;
};
VerifyReport verify_decomposition(const ProjectorDecomposition& d, const CMat& target, double tol);

// Least-squares re-solve of the coefficients on the fixed projector support.
struct RefitOutcome {
  ProjectorDecomposition decomp;
  double residual = 0.0;
  bool flagged = false;  // rank-deficient support that cannot meet the target
};
RefitOutcome refit_coefficients(const ProjectorDecomposition& d, const CMat& target);

// Support search over the 6 single-qubit / 60 two-qubit stabilizer states.
std::optional<ProjectorDecomposition> search_decomposition(const CMat& target, unsigned max_rank,
                                                           std::uint64_t budget = 2'000'000,
                                                           std::uint64_t seed = 1);

}  // namespace stabsim

#endif
