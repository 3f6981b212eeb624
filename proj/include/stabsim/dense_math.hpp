#ifndef STABSIM_DENSE_MATH_HPP
#define STABSIM_DENSE_MATH_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace stabsim {

using cdouble = std::complex<double>;
using CVec = std::vector<cdouble>;

// Row-major square complex matrix.
struct CMat {
  std::size_t dim = 0;
  CVec a;

  CMat() = default;
  explicit CMat(std::size_t d) : dim(d), a(d * d, cdouble(0, 0)) {}
  CMat(std::size_t d, std::initializer_list<cdouble> vals) : dim(d), a(vals) {}

  cdouble& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  const cdouble& at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }

  static CMat identity(std::size_t d);
};

CMat mat_mul(const CMat& lhs, const CMat& rhs);
CMat mat_adjoint(const CMat& m);
CMat mat_scale(const CMat& m, cdouble s);
CMat mat_add(const CMat& lhs, const CMat& rhs);
double max_abs_diff(const CMat& lhs, const CMat& rhs);

// Kronecker with `low` acting on the low-order index bits:
// out[r, c] = low[rl, cl] * high[rh, ch], r = rl + low.dim * rh.
CMat kron_low(const CMat& low, const CMat& high);

// |v><v| as a matrix.
CMat outer(const CVec& v);

// Embed a k-qubit gate at `qubits` of an n-qubit register (index bit j of the
// gate's own space = qubits[j]).
CMat embed_gate(unsigned n, const std::vector<unsigned>& qubits, const CMat& g);

// In-place statevector update; psi has length 2^n, qubit j = index bit j.
void apply_gate_statevec(CVec& psi, const std::vector<unsigned>& qubits, const CMat& g);

// Least squares min |A x - b| for a dense complex system (rows x cols,
// row-major), via the normal equations.  Rank-deficient systems get free
// variables pinned to zero (deterministic).  Returns max |A x - b|.
struct LstsqResult {
  CVec x;
  double residual = 0.0;
  bool rank_deficient = false;
};
LstsqResult lstsq(const CVec& a, std::size_t rows, std::size_t cols, const CVec& b);

}  // namespace stabsim

#endif
