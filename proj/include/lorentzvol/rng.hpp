#pragma once

#include <cstdint>

namespace lorentzvol {

// splitmix64 evaluated at an arbitrary counter position: the state after k
// steps from `seed` is seed + k*gamma, so the k-th output is a pure function
// of (seed, k). Substreams drawn at disjoint counters are independent of
// evaluation order, which is what makes parallel sampling reproducible.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// [0, 1) with 53 random mantissa bits.
inline double uniform01(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// [-1, 1)
inline double uniform_sym(std::uint64_t bits) { return 2.0 * uniform01(bits) - 1.0; }

}  // namespace lorentzvol
