#include "stabsim/exact_scalar.hpp"

#include <cmath>

namespace stabsim {

namespace {
const double kInvSqrt2 = 0.70710678118654752440;

// w^m for m in [0,8).  Odd powers are (+-1 +-i)/sqrt2.
std::complex<double> omega_pow(int m) {
  switch (m) {
    case 0: return {1.0, 0.0};
    case 1: return {kInvSqrt2, kInvSqrt2};
    case 2: return {0.0, 1.0};
    case 3: return {-kInvSqrt2, kInvSqrt2};
    case 4: return {-1.0, 0.0};
    case 5: return {-kInvSqrt2, -kInvSqrt2};
    case 6: return {0.0, -1.0};
    default: return {kInvSqrt2, -kInvSqrt2};
  }
}

// 2^(-p/2), exact except for one rounding when p is odd.
double half_pow(int p) {
  int q = p >= 0 ? p / 2 : -((-p + 1) / 2);  // floor(p/2)
  int r = p - 2 * q;                         // 0 or 1
  double mag = std::ldexp(1.0, -q);
  return r ? mag * kInvSqrt2 : mag;
}
}  // namespace

std::complex<double> ExactScalar::to_complex() const {
  if (zero_) return {0.0, 0.0};
  return omega_pow(m_) * half_pow(p_);
}

double ExactScalar::abs() const { return zero_ ? 0.0 : half_pow(p_); }

}  // namespace stabsim
