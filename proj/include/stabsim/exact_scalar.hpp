#ifndef STABSIM_EXACT_SCALAR_HPP
#define STABSIM_EXACT_SCALAR_HPP

#include <complex>
#include <cstdint>

namespace stabsim {

// Element of {0} u {w^m * 2^(-p/2)} with w = exp(i*pi/4), m mod 8, p signed.
// This ring is closed under the products and the support-internal sums that
// appear in Clifford gate application, Pauli projection and stabilizer inner
// products, so amplitudes can be tracked with no floating error at all.
class ExactScalar {
 public:
  constexpr ExactScalar() : zero_(true), m_(0), p_(0) {}  // zero

  static constexpr ExactScalar zero() { return ExactScalar(); }
  static constexpr ExactScalar one() { return ExactScalar(0, 0); }
  // w^m * 2^(-p/2)
  static constexpr ExactScalar make(int m, int p) { return ExactScalar(m, p); }

  bool is_zero() const { return zero_; }
  bool is_one() const { return !zero_ && m_ == 0 && p_ == 0; }
  int omega_exponent() const { return m_; }   // meaningful only if nonzero
  int sqrt2_exponent() const { return p_; }   // value carries 2^(-p/2)

  ExactScalar operator*(const ExactScalar& o) const {
    if (zero_ || o.zero_) return zero();
    return ExactScalar((m_ + o.m_) & 7, p_ + o.p_);
  }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

  // this / o; o must be nonzero.
  ExactScalar div(const ExactScalar& o) const {
    if (zero_) return zero();
    return ExactScalar((m_ - o.m_) & 7, p_ - o.p_);
  }

  ExactScalar conj() const {
    if (zero_) return zero();
    return ExactScalar((8 - m_) & 7, p_);
  }

  ExactScalar times_i_pow(int k) const {  // * i^k
    if (zero_) return zero();
    return ExactScalar((m_ + 2 * (((k % 4) + 4) % 4)) & 7, p_);
  }

  ExactScalar times_sqrt2_pow(int k) const {  // * 2^(k/2)
    if (zero_) return zero();
    return ExactScalar(m_, p_ - k);
  }

  // this * (1 + i^k).  1 + i^k lies in the ring: 2, sqrt2*w, 0, sqrt2*w^7.
  ExactScalar times_one_plus_i_pow(int k) const {
    if (zero_) return zero();
    switch (((k % 4) + 4) % 4) {
      case 0: return ExactScalar(m_, p_ - 2);
      case 1: return ExactScalar((m_ + 1) & 7, p_ - 1);
      case 2: return zero();
      default: return ExactScalar((m_ + 7) & 7, p_ - 1);
    }
  }

  std::complex<double> to_complex() const;
  double abs() const;  // 0 or 2^(-p/2)

  bool operator==(const ExactScalar& o) const {
    if (zero_ || o.zero_) return zero_ == o.zero_;
    return m_ == o.m_ && p_ == o.p_;
  }
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }

 private:
  constexpr ExactScalar(int m, int p) : zero_(false), m_(((m % 8) + 8) % 8), p_(p) {}
  bool zero_;
  int m_;  // power of w, in [0, 8)
  int p_;  // power of 2^(-1/2)
};

}  // namespace stabsim

#endif
