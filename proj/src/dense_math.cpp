#include "stabsim/dense_math.hpp"

#include <cmath>
#include <cstdlib>

#include "stabsim/errors.hpp"

namespace stabsim {

CMat CMat::identity(std::size_t d) {
  CMat m(d);
  for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
  return m;
}

CMat mat_mul(const CMat& lhs, const CMat& rhs) {
  CMat out(lhs.dim);
  for (std::size_t r = 0; r < lhs.dim; ++r)
    for (std::size_t k = 0; k < lhs.dim; ++k) {
      cdouble v = lhs.at(r, k);
      if (v == cdouble(0, 0)) continue;
      for (std::size_t c = 0; c < lhs.dim; ++c) out.at(r, c) += v * rhs.at(k, c);
    }
  return out;
}

CMat mat_adjoint(const CMat& m) {
  CMat out(m.dim);
  for (std::size_t r = 0; r < m.dim; ++r)
    for (std::size_t c = 0; c < m.dim; ++c) out.at(c, r) = std::conj(m.at(r, c));
  return out;
}

CMat mat_scale(const CMat& m, cdouble s) {
  CMat out = m;
  for (auto& v : out.a) v *= s;
  return out;
}

CMat mat_add(const CMat& lhs, const CMat& rhs) {
  CMat out = lhs;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += rhs.a[i];
  return out;
}

double max_abs_diff(const CMat& lhs, const CMat& rhs) {
  double m = 0.0;
  for (std::size_t i = 0; i < lhs.a.size(); ++i) m = std::max(m, std::abs(lhs.a[i] - rhs.a[i]));
  return m;
}

CMat kron_low(const CMat& low, const CMat& high) {
  CMat out(low.dim * high.dim);
  for (std::size_t rh = 0; rh < high.dim; ++rh)
    for (std::size_t rl = 0; rl < low.dim; ++rl)
      for (std::size_t ch = 0; ch < high.dim; ++ch)
        for (std::size_t cl = 0; cl < low.dim; ++cl)
          out.at(rl + low.dim * rh, cl + low.dim * ch) = low.at(rl, cl) * high.at(rh, ch);
  return out;
}

CMat outer(const CVec& v) {
  CMat out(v.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out.at(r, c) = v[r] * std::conj(v[c]);
  return out;
}

CMat embed_gate(unsigned n, const std::vector<unsigned>& qubits, const CMat& g) {
  const std::size_t dim = std::size_t(1) << n;
  const std::size_t k = qubits.size();
  CMat out(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t sub_c = 0;
    for (std::size_t j = 0; j < k; ++j) sub_c |= ((col >> qubits[j]) & 1) << j;
    std::size_t base = col;
    for (std::size_t j = 0; j < k; ++j) base &= ~(std::size_t(1) << qubits[j]);
    for (std::size_t sub_r = 0; sub_r < g.dim; ++sub_r) {
      cdouble v = g.at(sub_r, sub_c);
      if (v == cdouble(0, 0)) continue;
      std::size_t row = base;
      for (std::size_t j = 0; j < k; ++j)
        if ((sub_r >> j) & 1) row |= std::size_t(1) << qubits[j];
      out.at(row, col) = v;
    }
  }
  return out;
}

void apply_gate_statevec(CVec& psi, const std::vector<unsigned>& qubits, const CMat& g) {
  const std::size_t k = qubits.size();
  const std::size_t sub_dim = std::size_t(1) << k;
  std::size_t mask = 0;
  for (unsigned q : qubits) mask |= std::size_t(1) << q;
  CVec scratch(sub_dim);
  for (std::size_t base = 0; base < psi.size(); ++base) {
    if (base & mask) continue;
    for (std::size_t s = 0; s < sub_dim; ++s) {
      std::size_t idx = base;
      for (std::size_t j = 0; j < k; ++j)
        if ((s >> j) & 1) idx |= std::size_t(1) << qubits[j];
      scratch[s] = psi[idx];
    }
    for (std::size_t r = 0; r < sub_dim; ++r) {
      cdouble acc(0, 0);
      for (std::size_t c = 0; c < sub_dim; ++c) acc += g.at(r, c) * scratch[c];
      std::size_t idx = base;
      for (std::size_t j = 0; j < k; ++j)
        if ((r >> j) & 1) idx |= std::size_t(1) << qubits[j];
      psi[idx] = acc;
    }
  }
}

LstsqResult lstsq(const CVec& a, std::size_t rows, std::size_t cols, const CVec& b) {
  // Normal equations: (A^H A) x = A^H b.
  CVec m(cols * cols, cdouble(0, 0));
  CVec rhs(cols, cdouble(0, 0));
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      cdouble acc(0, 0);
      for (std::size_t r = 0; r < rows; ++r) acc += std::conj(a[r * cols + i]) * a[r * cols + j];
      m[i * cols + j] = acc;
    }
    cdouble acc(0, 0);
    for (std::size_t r = 0; r < rows; ++r) acc += std::conj(a[r * cols + i]) * b[r];
    rhs[i] = acc;
  }
  // Gaussian elimination with partial pivoting.
  std::vector<std::size_t> perm(cols);
  for (std::size_t i = 0; i < cols; ++i) perm[i] = i;
  LstsqResult out;
  out.x.assign(cols, cdouble(0, 0));
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  double scale = 0.0;
  for (const auto& v : m) scale = std::max(scale, std::abs(v));
  const double tol = scale * 1e-12 + 1e-300;
  for (std::size_t col = 0; col < cols && row < cols; ++col) {
    std::size_t best = row;
    for (std::size_t r = row + 1; r < cols; ++r)
      if (std::abs(m[r * cols + col]) > std::abs(m[best * cols + col])) best = r;
    if (std::abs(m[best * cols + col]) <= tol) {
      out.rank_deficient = true;
      continue;
    }
    if (best != row) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m[best * cols + c], m[row * cols + c]);
      std::swap(rhs[best], rhs[row]);
    }
    for (std::size_t r = 0; r < cols; ++r) {
      if (r == row) continue;
      cdouble f = m[r * cols + col] / m[row * cols + col];
      if (f == cdouble(0, 0)) continue;
      for (std::size_t c = col; c < cols; ++c) m[r * cols + c] -= f * m[row * cols + c];
      rhs[r] -= f * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    out.x[pivot_col[r]] = rhs[r] / m[r * cols + pivot_col[r]];
  double res = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    cdouble acc(0, 0);
    for (std::size_t c = 0; c < cols; ++c) acc += a[r * cols + c] * out.x[c];
    res = std::max(res, std::abs(acc - b[r]));
  }
  out.residual = res;
  return out;
}

}  // namespace stabsim
