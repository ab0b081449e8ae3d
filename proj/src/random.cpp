#include "dendrix/random.hpp"

namespace dendrix {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

Rational SplitMix64::small_rational() {
  long p = static_cast<long>(uniform(-9, 9));
  long q = static_cast<long>(uniform(1, 3));
  return Rational(p, q);
}

Rational SplitMix64::nonzero_small_rational() {
  long p = static_cast<long>(uniform(1, 9));
  if (coin()) p = -p;
  long q = static_cast<long>(uniform(1, 3));
  return Rational(p, q);
}

}  // namespace dendrix
