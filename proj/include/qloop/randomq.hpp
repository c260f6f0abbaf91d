#ifndef QLOOP_RANDOMQ_HPP
#define QLOOP_RANDOMQ_HPP

#include <cstdint>

#include "qloop/rational.hpp"

namespace qloop {

// Deterministic pseudo-random rational source (splitmix64 core) used by the
// randomized property checks; fixed seeds keep every report reproducible
// across platforms. Values land exactly in [-2, 2] with denominators <= 64.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  Rational next() {
    const long q = long(next_u64() % 64u) + 1;
    const long p = long(next_u64() % std::uint64_t(4 * q + 1)) - 2 * q;
    Rational r(p, q);
    r.canonicalize();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace qloop

#endif
