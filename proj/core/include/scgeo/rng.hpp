#pragma once

#include <cstdint>

namespace scgeo {

// splitmix64 (Steele, Lea, Flood 2014). Chosen because the whole sequence is
// pinned by one 64-bit seed and the algorithm is simple enough to reproduce
// bit-exactly in any language, which keeps generated fixtures portable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0,1), 53 mantissa bits
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace scgeo
