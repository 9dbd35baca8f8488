#pragma once

#include <cstdint>
#include <random>

namespace histotest {

// SplitMix64 finalizer, used to spread seed material.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives a stream seed from a base seed and up to three path components
// (experiment id, grid index, trial index, ...).  Trials seeded this way are
// independent of scheduling order, which is what makes parallel experiment
// output reproducible.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = mix64(base ^ 0x6a09e667f3bcc909ULL);
  s = mix64(s ^ a);
  s = mix64(s ^ b);
  s = mix64(s ^ c);
  return s;
}

// A seeded random stream.  Every sampling operation in the library takes one
// of these explicitly; there is no hidden global generator.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  // Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n).
  std::int64_t below(std::int64_t n) {
    std::uniform_int_distribution<std::int64_t> d(0, n - 1);
    return d(eng_);
  }

  bool coin() { return (eng_() >> 63) != 0; }

  std::int64_t poisson(double rate) {
    if (rate <= 0.0) return 0;
    std::poisson_distribution<std::int64_t> d(rate);
    return d(eng_);
  }

  // Child stream derived from the current state; the parent advances once.
  RngStream fork(std::uint64_t tag) { return RngStream(derive_seed(eng_(), tag)); }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace histotest
