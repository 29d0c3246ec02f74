#include "lorentzvol/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lorentzvol {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double normalize(double raw, int n, double p, double q) {
  if (p == kInf) return (q == 1.0) ? raw * std::log(n + 1.0) : raw;
  return raw * std::pow(static_cast<double>(n), 1.0 / p);
}

}  // namespace

SequenceResult root_volume_sequence(const Params& params, int n_max, const PrecisionContext& ctx,
                                    const McConfig& mc) {
  if (n_max < 1) throw std::invalid_argument("root_volume_sequence: n_max must be >= 1");
  const double p = params.p(), q = params.q();
  const int bits = ctx.mantissa_bits;

  SequenceResult out;
  out.points.reserve(n_max);

  const bool exact = (q == 1.0) || (p == q) || (q == kInf);
  if (!exact && n_max > 10)
    throw std::invalid_argument(
        "root_volume_sequence: no exact engine for these params; Monte Carlo fallback is capped "
        "at n_max = 10");

  if (q == kInf && p != kInf) {
    // one recursion pass yields every dimension at once
    WeakVolumeTable table = vol_weak_positive_recursive_all(n_max, p, ctx);
    if (table.precision_flagged) out.warnings.push_back("precision: recursion cancellation flag");
    out.method = Method::recursion;
    BigFloat ln2 = log(BigFloat(2L, bits));
    for (int n = 1; n <= n_max; ++n) {
      double log_vol =
          (log(table.values[n]) + BigFloat(static_cast<long>(n), bits) * ln2).to_double();
      double raw = std::exp(log_vol / n);
      out.points.push_back({n, raw, normalize(raw, n, p, q)});
    }
    return out;
  }

  out.method = exact ? (q == 1.0 ? Method::product_q1 : Method::dirichlet) : Method::monte_carlo;
  for (int n = 1; n <= n_max; ++n) {
    double log_vol;
    if (q == 1.0)
      log_vol = vol_q1(n, p, ctx).log_value;
    else if (p == q || q == kInf)
      log_vol = vol_lebesgue(n, p, ctx).log_value;
    else {
      McEstimate est = mc_volume(n, params, mc);
      if (est.low_hits)
        out.warnings.push_back("mc: fewer than 100 hits at n = " + std::to_string(n));
      if (est.hits == 0)
        throw std::runtime_error("root_volume_sequence: Monte Carlo produced zero hits at n = " +
                                 std::to_string(n) + "; increase samples");
      log_vol = std::log(est.volume);
    }
    double raw = std::exp(log_vol / n);
    out.points.push_back({n, raw, normalize(raw, n, p, q)});
  }
  return out;
}

RatioResult ratio_sequence(double p, int n_max, const PrecisionContext& ctx) {
  if (n_max < 1) throw std::invalid_argument("ratio_sequence: n_max must be >= 1");
  if (p == kInf || !(p > 0.0) || std::isnan(p))
    throw std::invalid_argument("ratio_sequence: need 0 < p < inf");
  const int bits = ctx.mantissa_bits;

  RatioResult out;
  out.points.reserve(n_max);

  WeakVolumeTable table = vol_weak_positive_recursive_all(n_max, p, ctx);
  if (table.precision_flagged) out.warnings.push_back("precision: recursion cancellation flag");

  // log R = log W_n + log Gamma(1+n/p) - n log Gamma(1+1/p); the 2^n of both
  // balls cancels.
  BigFloat one(1L, bits);
  BigFloat inv_p = one / BigFloat(p, bits);
  BigFloat lg1p = lngamma(one + inv_p);

  double prev = kNaN;
  for (int n = 1; n <= n_max; ++n) {
    BigFloat nb(static_cast<long>(n), bits);
    BigFloat log_ratio = log(table.values[n]) + lngamma(one + nb * inv_p) - nb * lg1p;
    double ratio = exp(log_ratio).to_double();
    double lb = (n % 2 == 0 && p <= 2.0) ? ratio_lower_bound(p, n, ctx) : kNaN;
    double growth = std::isnan(prev) ? kNaN : ratio / prev;
    out.points.push_back({n, ratio, lb, growth});
    prev = ratio;
  }
  return out;
}

double ratio_lower_bound(double p, int n, const PrecisionContext& ctx) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("ratio_lower_bound: n must be even and >= 2");
  if (!(p > 0.0) || p > 2.0 || std::isnan(p))
    throw std::invalid_argument("ratio_lower_bound: need 0 < p <= 2");
  const int bits = ctx.mantissa_bits;

  // Gamma(1+n/p)/Gamma(1+1/p)^n * C(n, n/2) * (n/2)! *
  //   prod_{i=1}^{n/2} (1/i^{1/p} - 1/(i+1)^{1/p}) * n^{-n/(2p)}
  BigFloat one(1L, bits);
  BigFloat inv_p = one / BigFloat(p, bits);
  BigFloat nb(static_cast<long>(n), bits);

  BigFloat log_acc = lngamma(one + nb * inv_p) - nb * lngamma(one + inv_p);
  log_acc += log(binomial_big(n, n / 2, bits));
  log_acc += log(factorial_big(n / 2, bits));
  BigFloat neg_inv_p = -inv_p;
  for (int i = 1; i <= n / 2; ++i) {
    BigFloat width = pow(BigFloat(static_cast<long>(i), bits), neg_inv_p) -
                     pow(BigFloat(static_cast<long>(i + 1), bits), neg_inv_p);
    log_acc += log(width);
  }
  log_acc += BigFloat(static_cast<long>(n / 2), bits) * neg_inv_p * log(nb);
  return exp(log_acc).to_double();
}

}  // namespace lorentzvol
