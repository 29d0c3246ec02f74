#pragma once

#include <cstdint>

#include "lorentzvol/lorentz.hpp"

namespace lorentzvol {

// Rejection sampling from the bounding cube stays practical only while the
// acceptance rate vol/2^n is nonvanishing; refuse above this dimension.
inline constexpr int kMcMaxDim = 20;

struct McConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  double confidence = 0.99;
};

struct McEstimate {
  double volume = 0.0;
  double ci_half_width = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  // Normal-approximation CI is unreliable below ~100 hits.
  bool low_hits = false;
};

// Uniform samples from [-1,1]^n counted against the ball; volume =
// 2^n * hits/samples. The ball always fits the cube because the k=1 norm
// term bounds x*_1 by the norm. Identical (config, n, params) reproduce the
// estimate bit-for-bit regardless of thread count.
McEstimate mc_volume(int n, const Params& params, const McConfig& config);

// Same estimator restricted to [0,1]^n; volume = hits/samples.
McEstimate mc_positive_orthant(int n, const Params& params, const McConfig& config);

// Hit-count kernels. The parallel version partitions the sample range into
// deterministic counter substreams and combines counts associatively, so it
// matches the serial one exactly; the serial one is kept as the reference.
std::uint64_t mc_count_hits(int n, const Params& params, const McConfig& config,
                            bool positive_orthant);
std::uint64_t mc_count_hits_serial(int n, const Params& params, const McConfig& config,
                                   bool positive_orthant);

// Inverse standard normal CDF (Acklam's rational approximation polished by
// one Halley step); used for the CI multiplier z = quantile(1 - (1-conf)/2).
double normal_quantile(double prob);

}  // namespace lorentzvol
