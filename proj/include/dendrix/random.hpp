#pragma once

#include <cstdint>

#include "dendrix/rational.hpp"

namespace dendrix {

// splitmix64: state += 0x9e3779b97f4a7c15, then two xor-shift-multiply rounds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [lo, hi], rejection-sampled so there is no modulo bias.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }

  // p/q with |p| <= 9 and q in {1,2,3}.
  Rational small_rational();
  Rational nonzero_small_rational();

 private:
  std::uint64_t state_;
};

}  // namespace dendrix
