#include "lorentzvol/volume_mc.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lorentzvol/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lorentzvol {

namespace {

void validate(int n, const McConfig& config) {
  if (n < 1) throw std::invalid_argument("mc_volume: n must be >= 1");
  if (n > kMcMaxDim)
    throw std::invalid_argument("mc_volume: n = " + std::to_string(n) + " exceeds guard " +
                                std::to_string(kMcMaxDim) + " (acceptance rate too small)");
  if (config.samples < 1000)
    throw std::invalid_argument("mc_volume: need at least 1000 samples");
  if (!(config.confidence > 0.0) || !(config.confidence < 1.0))
    throw std::invalid_argument("mc_volume: confidence must be in (0,1)");
}

// Norm evaluation with the k-weights precomputed once per estimator call.
// Membership compares the q-th power of the norm against 1, which is the
// same predicate without the final root.
struct WeightedNorm {
  int n;
  double q;
  int mode;  // 0: q = inf, 1: q = 1, 2: q = 2, 3: general q
  double w[kMcMaxDim];

  WeightedNorm(int n_, double p, double q_) : n(n_), q(q_) {
    if (q == kInf) {
      mode = 0;
      double inv_p = (p == kInf) ? 0.0 : 1.0 / p;
      for (int k = 1; k <= n; ++k) w[k - 1] = std::pow(static_cast<double>(k), inv_p);
    } else {
      mode = (q == 1.0) ? 1 : (q == 2.0) ? 2 : 3;
      double expo = (p == kInf) ? -1.0 : q / p - 1.0;
      for (int k = 1; k <= n; ++k) w[k - 1] = std::pow(static_cast<double>(k), expo);
    }
  }

  // xs: |entries| sorted non-increasingly
  bool inside(const double* xs) const {
    switch (mode) {
      case 0: {
        for (int k = 0; k < n; ++k)
          if (w[k] * xs[k] > 1.0) return false;
        return true;
      }
      case 1: {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += w[k] * xs[k];
        return s <= 1.0;
      }
      case 2: {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += w[k] * xs[k] * xs[k];
        return s <= 1.0;
      }
      default: {
        double s = 0.0;
        for (int k = 0; k < n; ++k)
          if (xs[k] > 0.0) s += w[k] * std::pow(xs[k], q);
        return s <= 1.0;
      }
    }
  }
};

inline bool sample_hit(std::uint64_t seed, std::uint64_t index, const WeightedNorm& norm,
                       bool positive_orthant, double* buf) {
  const int n = norm.n;
  const std::uint64_t base = index * static_cast<std::uint64_t>(n);
  for (int d = 0; d < n; ++d) {
    std::uint64_t bits = splitmix64_at(seed, base + d);
    buf[d] = positive_orthant ? uniform01(bits) : std::fabs(uniform_sym(bits));
  }
  // insertion sort, descending; n <= 20
  for (int i = 1; i < n; ++i) {
    double v = buf[i];
    int j = i - 1;
    while (j >= 0 && buf[j] < v) {
      buf[j + 1] = buf[j];
      --j;
    }
    buf[j + 1] = v;
  }
  return norm.inside(buf);
}

McEstimate finish(std::uint64_t hits, const McConfig& config, double scale) {
  McEstimate est;
  est.hits = hits;
  est.samples = config.samples;
  est.low_hits = hits < 100;
  double phat = static_cast<double>(hits) / static_cast<double>(config.samples);
  est.volume = scale * phat;
  double z = normal_quantile(1.0 - (1.0 - config.confidence) / 2.0);
  est.ci_half_width =
      z * scale * std::sqrt(phat * (1.0 - phat) / static_cast<double>(config.samples));
  return est;
}

}  // namespace

std::uint64_t mc_count_hits_serial(int n, const Params& params, const McConfig& config,
                                   bool positive_orthant) {
  const WeightedNorm norm(n, params.p(), params.q());
  double buf[kMcMaxDim];
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < config.samples; ++i)
    hits += sample_hit(config.seed, i, norm, positive_orthant, buf);
  return hits;
}

std::uint64_t mc_count_hits(int n, const Params& params, const McConfig& config,
                            bool positive_orthant) {
  const WeightedNorm norm(n, params.p(), params.q());
  std::uint64_t hits = 0;
  const std::int64_t total = static_cast<std::int64_t>(config.samples);
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : hits) schedule(static)
#endif
  for (std::int64_t i = 0; i < total; ++i) {
    double buf[kMcMaxDim];
    hits += sample_hit(config.seed, static_cast<std::uint64_t>(i), norm, positive_orthant, buf);
  }
  return hits;
}

McEstimate mc_volume(int n, const Params& params, const McConfig& config) {
  validate(n, config);
  std::uint64_t hits = mc_count_hits(n, params, config, false);
  return finish(hits, config, std::ldexp(1.0, n));
}

McEstimate mc_positive_orthant(int n, const Params& params, const McConfig& config) {
  validate(n, config);
  std::uint64_t hits = mc_count_hits(n, params, config, true);
  return finish(hits, config, 1.0);
}

double normal_quantile(double prob) {
  if (!(prob > 0.0) || !(prob < 1.0))
    throw std::invalid_argument("normal_quantile: prob must be in (0,1)");

  // Acklam's rational approximation, |rel err| < 1.15e-9.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double x;
  if (prob < plow) {
    double u = std::sqrt(-2.0 * std::log(prob));
    x = (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
        ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
  } else if (prob > 1.0 - plow) {
    double u = std::sqrt(-2.0 * std::log(1.0 - prob));
    x = -(((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
        ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
  } else {
    double u = prob - 0.5;
    double t = u * u;
    x = (((((a[0] * t + a[1]) * t + a[2]) * t + a[3]) * t + a[4]) * t + a[5]) * u /
        (((((b[0] * t + b[1]) * t + b[2]) * t + b[3]) * t + b[4]) * t + 1.0);
  }
  // One Halley refinement against erfc brings this to full double accuracy.
  double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - prob;
  double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
  x = x - u / (1.0 + x * u / 2.0);
  return x;
}

}  // namespace lorentzvol
