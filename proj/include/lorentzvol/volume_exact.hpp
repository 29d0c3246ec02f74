#pragma once

#include <string>
#include <vector>

#include "lorentzvol/bigfloat.hpp"
#include "lorentzvol/compositions.hpp"
#include "lorentzvol/lorentz.hpp"
#include "lorentzvol/volume_mc.hpp"

namespace lorentzvol {

enum class Method {
  recursion,
  explicit_sum,
  integral,
  product_q1,
  dirichlet,
  monte_carlo,
  automatic,
};

const char* method_name(Method m);
Method method_from_name(const std::string& name);

// A computed volume rounded to double at the reporting boundary. For the
// exact engines error_bound is a conservative rounding bound; for Monte
// Carlo it is the CI half-width at the configured confidence.
struct VolumeResult {
  double value = 0.0;
  double log_value = 0.0;
  Method method = Method::automatic;
  int n = 0;
  Params params{1.0, 1.0};
  double error_bound = 0.0;
  int precision_bits = 0;  // 0 for monte-carlo
  bool precision_flagged = false;
  bool mc_low_hits = false;  // CI unreliable below ~100 hits
};

// Full-precision value of one exact engine, with the cancellation diagnosis
// of the alternating sum that produced it. flagged fires when the measured
// condition ratio max|partial sum| / |result| exceeds 2^(mantissa_bits - 20)
// or, for the feed-forward engines, when a +32-bit shadow evaluation
// disagrees beyond 2^-20 relative (the condition ratio alone goes blind once
// rounding noise dominates the result).
struct ExactValue {
  BigFloat value;
  bool precision_flagged = false;
  double cond_log2 = 0.0;      // log2(max|partial| / |result|)
  double observed_rel = 0.0;   // shadow-run relative disagreement
};

// Strictly decreasing positive weights a_1 > ... > a_n > 0.
class WeightVector {
 public:
  explicit WeightVector(std::vector<BigFloat> entries);

  // a_j = j^{-1/p}, the weights whose order cone is the positive orthant of
  // the weak ball.
  static WeightVector power_law(int n, double p, const PrecisionContext& ctx);

  int size() const { return static_cast<int>(entries_.size()); }
  const BigFloat& operator[](int i) const { return entries_[i]; }

 private:
  std::vector<BigFloat> entries_;
};

// Positive-orthant volumes of the weak ball for dimensions 0..n computed
// bottom-up by the inclusion-exclusion recursion; values[0] = values[1] = 1
// by convention. Requires p < inf. Full ball = 2^n * values[n].
struct WeakVolumeTable {
  std::vector<BigFloat> values;
  bool precision_flagged = false;
  double cond_log2 = 0.0;
  double observed_rel = 0.0;  // worst shadow-run disagreement across levels
};

WeakVolumeTable vol_weak_positive_recursive_all(int n, double p, const PrecisionContext& ctx);
ExactValue vol_weak_positive_recursive(int n, double p, const PrecisionContext& ctx);

// Which algebraic form of the composition sum to evaluate: the parts form
// with multinomial coefficients, or its rewriting over partial-sum vectors.
enum class ExplicitForm { parts, partial_sums };

ExactValue vol_weak_positive_explicit(int n, double p, const PrecisionContext& ctx,
                                      ExplicitForm form = ExplicitForm::parts,
                                      int composition_cap = kCompositionCap);

// V^(m)(n, a): iterated integral of x_1^m over the order cone clipped at the
// weights, by the suffix recursion with V^(0)(0, ()) = 1.
ExactValue v_integral(int m, const WeightVector& a, const PrecisionContext& ctx);

// vol(B^n_{p,1}) = 2^n / prod_k kappa_p(k); valid for all 0 < p <= inf.
VolumeResult vol_q1(int n, double p, const PrecisionContext& ctx);

// kappa_p(k) at context precision (the q=1 product building block).
BigFloat kappa_big(double p, int k, const PrecisionContext& ctx);

// vol(B^n_p) = 2^n Gamma(1+1/p)^n / Gamma(1+n/p), evaluated in log-Gamma
// form; p = inf gives the cube 2^n.
VolumeResult vol_lebesgue(int n, double p, const PrecisionContext& ctx);

// Dispatcher. Method::automatic picks the cheapest applicable exact engine
// (dirichlet for p=q, product_q1 for q=1, recursion for q=inf) and falls
// back to Monte Carlo otherwise. Inapplicable explicit methods are rejected.
VolumeResult vol_ball(int n, const Params& params, Method method, const PrecisionContext& ctx,
                      const McConfig& mc = McConfig{});

}  // namespace lorentzvol
