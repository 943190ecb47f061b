#pragma once

#include <cstdint>

namespace gq {

// splitmix64: deterministic across platforms, good enough for seeded sampling.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound), bound > 0
  uint64_t below(uint64_t bound) {
    // rejection sampling to avoid modulo bias
    uint64_t threshold = (~bound + 1) % bound;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  bool coin() { return next() & 1; }

 private:
  uint64_t state_;
};

}  // namespace gq
