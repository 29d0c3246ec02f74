#include "lorentzvol/volume_exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "lorentzvol/compositions.hpp"

namespace lorentzvol {

const char* method_name(Method m) {
  switch (m) {
    case Method::recursion: return "recursion";
    case Method::explicit_sum: return "explicit";
    case Method::integral: return "integral";
    case Method::product_q1: return "product-q1";
    case Method::dirichlet: return "dirichlet";
    case Method::monte_carlo: return "monte-carlo";
    case Method::automatic: return "auto";
  }
  return "?";
}

Method method_from_name(const std::string& name) {
  if (name == "recursion") return Method::recursion;
  if (name == "explicit") return Method::explicit_sum;
  if (name == "integral") return Method::integral;
  if (name == "product-q1") return Method::product_q1;
  if (name == "dirichlet") return Method::dirichlet;
  if (name == "monte-carlo" || name == "mc") return Method::monte_carlo;
  if (name == "auto") return Method::automatic;
  throw std::invalid_argument("unknown method '" + name + "'");
}

namespace {

double log2_ratio(const BigFloat& num, const BigFloat& den) {
  if (num.is_zero() || den.is_zero()) return 0.0;
  BigFloat r = abs(num) / abs(den);
  return log(r).to_double() * 1.4426950408889634;  // / ln 2
}

// Cancellation bookkeeping for one alternating sum: the measured condition
// ratio max(|terms|, |partials|) / |result|, flagged above 2^(bits - 20).
// The ratio saturates once rounding noise dominates (the noisy result
// inflates its own denominator), so the feed-forward engines additionally
// compare against a shadow evaluation at bits + 32; see shadow_gap below.
struct CancelTracker {
  CancelTracker() : max_magnitude(0.0, kTrackBits) {}

  void observe(const BigFloat& term, const BigFloat& partial) {
    BigFloat a = abs(partial);
    if (a > max_magnitude) max_magnitude = a;
    BigFloat t = abs(term);
    if (t > max_magnitude) max_magnitude = t;
  }

  void conclude(const BigFloat& result, int bits, bool& flagged, double& cond_log2) const {
    double c = log2_ratio(max_magnitude, result);
    if (c > cond_log2) cond_log2 = c;
    if (c > static_cast<double>(bits - 20)) flagged = true;
  }

  static constexpr int kTrackBits = 64;  // magnitudes only, no precision needed
  BigFloat max_magnitude;
};

constexpr int kShadowExtraBits = 32;
constexpr double kShadowTolerance = 0x1.0p-20;

// relative disagreement between a value and its higher-precision shadow
double shadow_gap(const BigFloat& value, const BigFloat& shadow) {
  if (shadow.is_zero()) return value.is_zero() ? 0.0 : 1.0;
  return (abs(value - shadow) / abs(shadow)).to_double();
}

BigFloat exponent_term(int base, long k, double p, int bits) {
  // base^{-k/p} = exp(-(k/p) log base); generically irrational, so computed
  // at context precision rather than as a rational.
  BigFloat e = BigFloat(-k, bits) / BigFloat(p, bits);
  return pow(BigFloat(static_cast<long>(base), bits), e);
}

}  // namespace

namespace {

// one full bottom-up pass of the inclusion-exclusion recursion at a fixed
// precision
WeakVolumeTable recursion_pass(int n, double p, int bits) {
  WeakVolumeTable table;
  table.values.reserve(n + 1);
  table.values.emplace_back(1L, bits);  // vol(B^{0,+}) = 1
  if (n >= 1) table.values.emplace_back(1L, bits);

  for (int m = 2; m <= n; ++m) {
    // vol(B^{m,+}) = sum_{j=1}^m (-1)^{j-1} C(m,j) m^{-j/p} vol(B^{m-j,+})
    BigFloat t = exponent_term(m, 1, p, bits);  // m^{-1/p}
    BigFloat factor(1L, bits);
    BigFloat acc(bits);
    CancelTracker tracker;
    for (int j = 1; j <= m; ++j) {
      factor *= t;  // m^{-j/p}
      BigFloat term = binomial_big(m, j, bits) * factor * table.values[m - j];
      if (j % 2 == 1)
        acc += term;
      else
        acc -= term;
      tracker.observe(term, acc);
    }
    tracker.conclude(acc, bits, table.precision_flagged, table.cond_log2);
    table.values.push_back(std::move(acc));
  }
  return table;
}

}  // namespace

WeakVolumeTable vol_weak_positive_recursive_all(int n, double p, const PrecisionContext& ctx) {
  if (n < 0) throw std::invalid_argument("vol_weak_positive_recursive: n must be >= 0");
  if (p == kInf)
    throw std::invalid_argument(
        "vol_weak_positive_recursive: p = inf is the cube; use the dirichlet path");
  if (!(p > 0.0) || std::isnan(p))
    throw std::invalid_argument("vol_weak_positive_recursive: p must be positive");

  WeakVolumeTable table = recursion_pass(n, p, ctx.mantissa_bits);
  WeakVolumeTable shadow = recursion_pass(n, p, ctx.mantissa_bits + kShadowExtraBits);
  for (int m = 0; m <= n; ++m)
    table.observed_rel = std::max(table.observed_rel, shadow_gap(table.values[m], shadow.values[m]));
  if (table.observed_rel > kShadowTolerance) table.precision_flagged = true;
  return table;
}

ExactValue vol_weak_positive_recursive(int n, double p, const PrecisionContext& ctx) {
  WeakVolumeTable table = vol_weak_positive_recursive_all(n, p, ctx);
  return ExactValue{std::move(table.values[n]), table.precision_flagged, table.cond_log2,
                    table.observed_rel};
}

ExactValue vol_weak_positive_explicit(int n, double p, const PrecisionContext& ctx,
                                      ExplicitForm form, int composition_cap) {
  if (n < 1) throw std::invalid_argument("vol_weak_positive_explicit: n must be >= 1");
  if (p == kInf || !(p > 0.0) || std::isnan(p))
    throw std::invalid_argument("vol_weak_positive_explicit: need 0 < p < inf");

  const int bits = ctx.mantissa_bits;

  // base^{-k/p} for all 1 <= base <= n, 1 <= k <= n, shared by every term.
  std::vector<std::vector<BigFloat>> powers(n + 1);
  for (int base = 1; base <= n; ++base) {
    powers[base].reserve(n);
    BigFloat t = exponent_term(base, 1, p, bits);
    BigFloat f(1L, bits);
    for (int k = 1; k <= n; ++k) {
      f *= t;
      powers[base].push_back(f);
    }
  }

  mpz_t coeff, fact;
  mpz_init(coeff);
  mpz_init(fact);

  BigFloat acc(bits);
  CancelTracker tracker;
  CompositionEnumerator en(n, composition_cap);
  Composition comp;
  while (en.next(comp)) {
    // (n choose k_1,...,k_j), exact integer either as a product of
    // binomials over the parts or as n! divided by the block factorials of
    // the partial-sum vector.
    if (form == ExplicitForm::parts) {
      mpz_set_ui(coeff, 1);
      int rem = n;
      for (int part : comp.parts) {
        mpz_bin_uiui(fact, rem, part);
        mpz_mul(coeff, coeff, fact);
        rem -= part;
      }
    } else {
      mpz_fac_ui(coeff, n);
      for (int l = 0; l < comp.length; ++l) {
        mpz_fac_ui(fact, comp.partial_sums[l + 1] - comp.partial_sums[l]);
        mpz_divexact(coeff, coeff, fact);
      }
    }

    BigFloat term = BigFloat::from_mpz(coeff, bits);
    for (int l = 0; l < comp.length; ++l) {
      int base = n - comp.partial_sums[l];
      int k = comp.partial_sums[l + 1] - comp.partial_sums[l];
      term *= powers[base][k - 1];
    }

    if ((n + comp.length) % 2 == 0)
      acc += term;
    else
      acc -= term;
    tracker.observe(term, acc);
  }
  mpz_clear(coeff);
  mpz_clear(fact);

  ExactValue out{std::move(acc)};
  tracker.conclude(out.value, bits, out.precision_flagged, out.cond_log2);
  return out;
}

WeightVector::WeightVector(std::vector<BigFloat> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("WeightVector: must be nonempty");
  if (entries_.back().sign() <= 0)
    throw std::invalid_argument("WeightVector: entries must be positive");
  for (size_t i = 0; i + 1 < entries_.size(); ++i)
    if (!(entries_[i] > entries_[i + 1]))
      throw std::invalid_argument("WeightVector: entries must decrease strictly");
}

WeightVector WeightVector::power_law(int n, double p, const PrecisionContext& ctx) {
  if (n < 1) throw std::invalid_argument("WeightVector::power_law: n must be >= 1");
  if (p == kInf || !(p > 0.0) || std::isnan(p))
    throw std::invalid_argument("WeightVector::power_law: need 0 < p < inf");
  std::vector<BigFloat> a;
  a.reserve(n);
  for (int j = 1; j <= n; ++j) a.push_back(exponent_term(j, 1, p, ctx.mantissa_bits));
  return WeightVector(std::move(a));
}

namespace {

// one evaluation of V^(m)(n, a) at a fixed precision, with the weights
// re-rounded to that precision (exact when widening)
ExactValue v_integral_pass(int m, const WeightVector& a, int bits) {
  const int n = a.size();
  ExactValue out{BigFloat(bits)};

  // V^(0) over suffixes (a_{s+1},...,a_n), shortest first.
  std::vector<BigFloat> v0(n + 1, BigFloat(bits));
  v0[n] = BigFloat(1L, bits);
  mpz_t fact;
  mpz_init(fact);
  for (int s = n - 1; s >= 0; --s) {
    BigFloat acc(bits);
    CancelTracker tracker;
    mpz_set_ui(fact, 1);
    for (int i = 1; i <= n - s; ++i) {
      mpz_mul_ui(fact, fact, i);  // i!
      BigFloat term = pow_ui(a[s + i - 1].at_precision(bits), i) /
                      BigFloat::from_mpz(fact, bits) * v0[s + i];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
      tracker.observe(term, acc);
    }
    tracker.conclude(acc, bits, out.precision_flagged, out.cond_log2);
    v0[s] = std::move(acc);
  }

  if (m == 0) {
    out.value = v0[0];
    mpz_clear(fact);
    return out;
  }

  // V^(m)(n,a) = sum_i (-1)^{i+1} a_i^{m+i} m!/(m+i)! V^(0)(n-i, suffix)
  BigFloat acc(bits);
  CancelTracker tracker;
  mpz_set_ui(fact, 1);  // (m+1)(m+2)...(m+i) accumulates here
  for (int i = 1; i <= n; ++i) {
    mpz_mul_ui(fact, fact, static_cast<unsigned long>(m) + i);
    BigFloat term = pow_ui(a[i - 1].at_precision(bits), static_cast<unsigned long>(m) + i) /
                    BigFloat::from_mpz(fact, bits) * v0[i];
    if (i % 2 == 1)
      acc += term;
    else
      acc -= term;
    tracker.observe(term, acc);
  }
  tracker.conclude(acc, bits, out.precision_flagged, out.cond_log2);
  mpz_clear(fact);
  out.value = std::move(acc);
  return out;
}

}  // namespace

ExactValue v_integral(int m, const WeightVector& a, const PrecisionContext& ctx) {
  if (m < 0) throw std::invalid_argument("v_integral: m must be >= 0");
  ExactValue out = v_integral_pass(m, a, ctx.mantissa_bits);
  ExactValue shadow = v_integral_pass(m, a, ctx.mantissa_bits + kShadowExtraBits);
  out.observed_rel = shadow_gap(out.value, shadow.value);
  if (out.observed_rel > kShadowTolerance) out.precision_flagged = true;
  return out;
}

namespace {

// 1/p - 1 at context precision (p itself is an exact double input).
BigFloat q1_exponent(double p, int bits) {
  if (p == kInf) return BigFloat(-1L, bits);
  return BigFloat(1L, bits) / BigFloat(p, bits) - BigFloat(1L, bits);
}

}  // namespace

BigFloat kappa_big(double p, int k, const PrecisionContext& ctx) {
  if (k < 1) throw std::invalid_argument("kappa_big: k must be >= 1");
  const int bits = ctx.mantissa_bits;
  const BigFloat e = q1_exponent(p, bits);
  BigFloat s(bits);
  for (int j = 1; j <= k; ++j) s += pow(BigFloat(static_cast<long>(j), bits), e);
  return s;
}

namespace {

BigFloat ln2_big(int bits) {
  BigFloat two(2L, bits);
  return log(two);
}

VolumeResult report_exact(const BigFloat& log_value, Method method, int n, const Params& params,
                          double rel_error, int bits, bool flagged) {
  VolumeResult r;
  r.method = method;
  r.n = n;
  r.params = params;
  r.log_value = log_value.to_double();
  r.value = exp(log_value).to_double();
  r.error_bound = r.value * rel_error;
  r.precision_bits = bits;
  r.precision_flagged = flagged;
  return r;
}

}  // namespace

VolumeResult vol_q1(int n, double p, const PrecisionContext& ctx) {
  if (n < 1) throw std::invalid_argument("vol_q1: n must be >= 1");
  if (!(p > 0.0) || std::isnan(p)) throw std::invalid_argument("vol_q1: p must be positive");
  const int bits = ctx.mantissa_bits;

  // log vol = n log 2 - sum_k log kappa_p(k), accumulating the partial sums
  // of kappa incrementally.
  BigFloat kappa_k(bits);
  BigFloat log_sum(bits);
  const BigFloat e = q1_exponent(p, bits);
  for (int k = 1; k <= n; ++k) {
    kappa_k += pow(BigFloat(static_cast<long>(k), bits), e);
    log_sum += log(kappa_k);
  }
  BigFloat log_value = BigFloat(static_cast<long>(n), bits) * ln2_big(bits) - log_sum;

  double rel = 6.0 * n * std::ldexp(1.0, -bits + 1);
  return report_exact(log_value, Method::product_q1, n, Params(p, 1.0), rel, bits, false);
}

VolumeResult vol_lebesgue(int n, double p, const PrecisionContext& ctx) {
  if (n < 1) throw std::invalid_argument("vol_lebesgue: n must be >= 1");
  if (!(p > 0.0) || std::isnan(p))
    throw std::invalid_argument("vol_lebesgue: p must be positive");
  const int bits = ctx.mantissa_bits;

  BigFloat nb(static_cast<long>(n), bits);
  BigFloat log_value = nb * ln2_big(bits);
  if (p != kInf) {
    BigFloat inv_p = BigFloat(1L, bits) / BigFloat(p, bits);
    BigFloat one(1L, bits);
    log_value += nb * lngamma(one + inv_p) - lngamma(one + nb * inv_p);
  }
  double rel = 16.0 * (n + 2) * std::ldexp(1.0, -bits + 1);
  return report_exact(log_value, Method::dirichlet, n, Params(p, p), rel, bits, false);
}

VolumeResult vol_ball(int n, const Params& params, Method method, const PrecisionContext& ctx,
                      const McConfig& mc) {
  if (n < 1) throw std::invalid_argument("vol_ball: n must be >= 1");
  const double p = params.p(), q = params.q();
  const int bits = ctx.mantissa_bits;

  if (method == Method::automatic) {
    if (q == 1.0)
      method = Method::product_q1;
    else if (p == q)
      method = Method::dirichlet;
    else if (q == kInf)
      method = (p == kInf) ? Method::dirichlet : Method::recursion;
    else
      method = Method::monte_carlo;
  }

  switch (method) {
    case Method::recursion:
    case Method::explicit_sum:
    case Method::integral: {
      if (q != kInf || p == kInf)
        throw std::invalid_argument(std::string("method '") + method_name(method) +
                                    "' requires q = inf and p < inf");
      ExactValue positive{BigFloat(bits)};
      double terms;  // accumulation count entering the rounding bound
      if (method == Method::recursion) {
        positive = vol_weak_positive_recursive(n, p, ctx);
        terms = 0.5 * n * n + n;
      } else if (method == Method::explicit_sum) {
        positive = vol_weak_positive_explicit(n, p, ctx);
        terms = std::ldexp(1.0, n - 1) * (n + 2);
      } else {
        positive = v_integral(0, WeightVector::power_law(n, p, ctx), ctx);
        positive.value = positive.value * factorial_big(n, bits);
        terms = 0.5 * n * n + n + 2;
      }
      // full ball = 2^n * positive orthant
      BigFloat log_value =
          log(positive.value) + BigFloat(static_cast<long>(n), bits) * ln2_big(bits);
      double rel = std::min(1.0, std::max(std::exp2(positive.cond_log2 - bits) * terms * 4.0,
                                          4.0 * positive.observed_rel));
      VolumeResult r = report_exact(log_value, method, n, params, rel, bits,
                                    positive.precision_flagged);
      return r;
    }
    case Method::product_q1: {
      if (q != 1.0) throw std::invalid_argument("method 'product-q1' requires q = 1");
      VolumeResult r = vol_q1(n, p, ctx);
      r.params = params;
      return r;
    }
    case Method::dirichlet: {
      if (p != q) throw std::invalid_argument("method 'dirichlet' requires p = q");
      VolumeResult r = vol_lebesgue(n, p, ctx);
      r.params = params;
      return r;
    }
    case Method::monte_carlo: {
      McEstimate est = mc_volume(n, params, mc);
      VolumeResult r;
      r.method = Method::monte_carlo;
      r.n = n;
      r.params = params;
      r.value = est.volume;
      r.log_value = est.volume > 0.0 ? std::log(est.volume)
                                     : -std::numeric_limits<double>::infinity();
      r.error_bound = est.ci_half_width;
      r.precision_bits = 0;
      r.precision_flagged = false;
      r.mc_low_hits = est.low_hits;
      return r;
    }
    case Method::automatic:
      break;
  }
  throw std::invalid_argument("vol_ball: unreachable method");
}

}  // namespace lorentzvol
