#pragma once

#include <cstdint>

#include "q6j/qarith.hpp"

namespace q6j {

// Deterministic generator (splitmix64) so a seed pins every random suite
// bit-for-bit across runs and platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // uniform integer in [lo, hi] inclusive
  long uniform_int(long lo, long hi) {
    return lo + static_cast<long>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
  }

  // A generic spin value, kept away from half-integers and from the real
  // axis degeneracies by construction.
  cplx regular_color() {
    double re = uniform(0.06, 0.44);
    if (next_u64() & 1) re += 0.5;  // also sample the (1/2,1) band
    double im = uniform(-0.15, 0.15);
    return {re, im};
  }

 private:
  uint64_t state_;
};

}  // namespace q6j
