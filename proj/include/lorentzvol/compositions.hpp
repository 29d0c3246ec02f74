#pragma once

#include <cstdint>
#include <vector>

namespace lorentzvol {

// Ordered tuple of positive integers summing to n, plus its partial-sum
// image (0, k_1, k_1+k_2, ..., n). The partial sums are strictly increasing
// and determine the composition uniquely.
struct Composition {
  std::vector<int> parts;
  std::vector<int> partial_sums;
  int n = 0;
  int length = 0;
};

// There are 2^{n-1} compositions of n; enumeration beyond this cap is
// refused with a size estimate.
inline constexpr int kCompositionCap = 24;

inline std::uint64_t composition_count(int n) { return std::uint64_t{1} << (n - 1); }

// Streams the compositions of n in lexicographic order of their parts,
// (1,1,...,1) first and (n) last. One buffer is reused across items.
class CompositionEnumerator {
 public:
  explicit CompositionEnumerator(int n, int cap = kCompositionCap);

  // Fills `out` with the next composition; returns false when exhausted.
  bool next(Composition& out);

 private:
  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> cur_;
};

}  // namespace lorentzvol
