#ifndef STABSIM_RNG_HPP
#define STABSIM_RNG_HPP

#include <cstdint>

namespace stabsim {

// SplitMix64 (Steele, Lea, Flood 2014).  Fixed-increment 64-bit generator;
// identical output on every platform, which is what the circuit generators
// and the seeded tests rely on.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) without modulo bias beyond 2^-64.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  double next_double() {  // [0, 1)
    return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
  }

  bool next_bit() { return next() & 1ULL; }

  // Derive an independent stream; used for per-qubit gate draws.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t stream_id) {
    SplitMix64 mix(seed ^ (0x632be59bd9b4e019ULL * (stream_id + 1)));
    return SplitMix64(mix.next());
  }

 private:
  std::uint64_t state_;
};

}  // namespace stabsim

#endif
