#include <algorithm>

#include "stabsim/decomposition.hpp"
#include "stabsim/errors.hpp"
#include "stabsim/rng.hpp"
#include "stabsim/state_catalog.hpp"

namespace stabsim {

namespace {

// Columns of the projector dictionary, vectorized.
struct Dictionary {
  const std::vector<CatalogEntry>* entries;
  std::size_t dim;
  std::vector<CVec> cols;  // dim*dim each
};

Dictionary make_dictionary(unsigned arity) {
  Dictionary d;
  d.entries = arity == 1 ? &one_qubit_catalog() : &two_qubit_catalog();
  d.dim = std::size_t(1) << arity;
  for (const auto& e : *d.entries) {
    auto v = to_dense(e.state);
    CVec col(d.dim * d.dim);
    for (std::size_t r = 0; r < d.dim; ++r)
      for (std::size_t c = 0; c < d.dim; ++c) col[r * d.dim + c] = v[r] * std::conj(v[c]);
    d.cols.push_back(std::move(col));
  }
  return d;
}

std::optional<CVec> try_support(const Dictionary& dict, const std::vector<std::size_t>& support,
                                const CMat& target, double tol) {
  const std::size_t rows = dict.dim * dict.dim, cols = support.size();
  CVec a(rows * cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t r = 0; r < rows; ++r) a[r * cols + j] = dict.cols[support[j]][r];
  auto solved = lstsq(a, rows, cols, target.a);
  if (solved.residual <= tol) return solved.x;
  return std::nullopt;
}

ProjectorDecomposition build(const Dictionary& dict, const std::vector<std::size_t>& support,
                             const CVec& coeffs, unsigned arity) {
  ProjectorDecomposition d;
  d.arity = arity;
  d.source = "searched";
  for (std::size_t j = 0; j < support.size(); ++j)
    d.terms.push_back({coeffs[j], (*dict.entries)[support[j]].state});
  return d;
}

double binom(std::size_t n, std::size_t k) {
  double v = 1;
  for (std::size_t i = 0; i < k; ++i) v = v * double(n - i) / double(i + 1);
  return v;
}

}  // namespace

std::optional<ProjectorDecomposition> search_decomposition(const CMat& target, unsigned max_rank,
                                                           std::uint64_t budget, std::uint64_t seed) {
  unsigned arity;
  if (target.dim == 2) arity = 1;
  else if (target.dim == 4) arity = 2;
  else throw InputError("search supports 1- and 2-qubit targets only");
  if (max_rank > 16) throw InputError("search rank limited to 16");
  const double tol = 1e-9;

  Dictionary dict = make_dictionary(arity);
  const std::size_t nstates = dict.cols.size();
  std::uint64_t spent = 0;

  for (unsigned k = 1; k <= max_rank && spent < budget; ++k) {
    if (binom(nstates, k) <= double(budget - spent)) {
      // Full lexicographic enumeration of the C(nstates, k) supports.
      std::vector<std::size_t> sup(k);
      for (std::size_t j = 0; j < k; ++j) sup[j] = j;
      bool more = true;
      while (more) {
        ++spent;
        auto c = try_support(dict, sup, target, tol);
        if (c) return build(dict, sup, *c, arity);
        more = false;
        for (std::size_t j = k; j-- > 0;) {
          if (sup[j] + (k - j) < nstates) {
            ++sup[j];
            for (std::size_t l = j + 1; l < k; ++l) sup[l] = sup[l - 1] + 1;
            more = true;
            break;
          }
        }
      }
    } else {
      // Seeded random sampling; deterministic under the seed.
      SplitMix64 rng(seed + k);
      std::uint64_t samples = (budget - spent) / (max_rank - k + 1) + 1;
      for (std::uint64_t s = 0; s < samples && spent < budget; ++s) {
        ++spent;
        std::vector<std::size_t> sup;
        while (sup.size() < k) {
          std::size_t cand = rng.next_below(nstates);
          if (std::find(sup.begin(), sup.end(), cand) == sup.end()) sup.push_back(cand);
        }
        std::sort(sup.begin(), sup.end());
        auto c = try_support(dict, sup, target, tol);
        if (c) return build(dict, sup, *c, arity);
      }
    }
  }
  return std::nullopt;
}

}  // namespace stabsim
