#pragma once

#include <string>
#include <vector>

#include "lorentzvol/volume_exact.hpp"

namespace lorentzvol {

// One point of a scaled n-th-root volume sequence. normalized multiplies the
// raw root by the predicted growth factor (n^{1/p}, or log(n+1) when
// p = inf, q = 1), so a correct prediction keeps it in a bounded window.
struct SequencePoint {
  int n = 0;
  double raw = 0.0;
  double normalized = 0.0;
};

struct SequenceResult {
  std::vector<SequencePoint> points;
  Method method = Method::automatic;
  std::vector<std::string> warnings;
};

// Weak-to-Lebesgue volume ratio at one dimension. lower_bound is the
// combinatorial box-family bound, defined for even n and p <= 2 only (NaN
// otherwise); growth is ratio(n)/ratio(n-1) (NaN at n = 1).
struct RatioPoint {
  int n = 0;
  double ratio = 0.0;
  double lower_bound = 0.0;
  double growth = 0.0;
};

struct RatioResult {
  std::vector<RatioPoint> points;
  std::vector<std::string> warnings;
};

// vol(B^n_{p,q})^{1/n} for n = 1..n_max. Requires an exact engine
// (q in {1, inf} or p = q); otherwise falls back to Monte Carlo, which is
// only allowed up to n_max <= 10.
SequenceResult root_volume_sequence(const Params& params, int n_max, const PrecisionContext& ctx,
                                    const McConfig& mc = McConfig{});

// R_{p,n} = vol(B^n_{p,inf}) / vol(B^n_p) for n = 1..n_max, from the
// recursion and the Gamma formula at full precision. Requires p < inf.
RatioResult ratio_sequence(double p, int n_max, const PrecisionContext& ctx);

// Explicit product lower bound on R_{p,n} from the combinatorial family of
// nested coordinate boxes. Defined for even n and 0 < p <= 2.
double ratio_lower_bound(double p, int n, const PrecisionContext& ctx);

}  // namespace lorentzvol
