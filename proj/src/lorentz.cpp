#include "lorentzvol/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace lorentzvol {

namespace {

void check_exponent(double v, const char* name) {
  if (std::isnan(v) || v <= 0.0)
    throw std::invalid_argument(std::string("Params: ") + name + " must be positive (inf allowed)");
}

}  // namespace

Params::Params(double p, double q) : p_(p), q_(q) {
  check_exponent(p, "p");
  check_exponent(q, "q");
}

Vector::Vector(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("Vector: length must be >= 1");
  for (double v : entries_)
    if (!std::isfinite(v)) throw std::invalid_argument("Vector: entries must be finite");
}

RearrangedVector rearrange(const Vector& x) {
  std::vector<double> a(x.entries());
  for (double& v : a) v = std::fabs(v);
  std::sort(a.begin(), a.end(), std::greater<double>());
  return RearrangedVector(std::move(a));
}

double lorentz_norm_sorted(const double* xs, int n, double p, double q) {
  if (q == kInf) {
    // max_k k^{1/p} x*_k; the weight is nondecreasing, the entries
    // nonincreasing, so every k must be checked.
    double inv_p = (p == kInf) ? 0.0 : 1.0 / p;
    double best = 0.0;
    for (int k = 1; k <= n; ++k) {
      double t = std::pow(static_cast<double>(k), inv_p) * xs[k - 1];
      if (t > best) best = t;
    }
    return best;
  }
  double expo = (p == kInf) ? -1.0 : q / p - 1.0;
  double s = 0.0;
  for (int k = 1; k <= n; ++k) {
    double xk = xs[k - 1];
    if (xk == 0.0) continue;  // tail is zero too, but keep the scan simple
    s += std::pow(static_cast<double>(k), expo) * std::pow(xk, q);
  }
  return std::pow(s, 1.0 / q);
}

double lorentz_norm(const RearrangedVector& xs, const Params& params) {
  return lorentz_norm_sorted(xs.entries().data(), xs.size(), params.p(), params.q());
}

double lorentz_norm(const Vector& x, const Params& params) {
  return lorentz_norm(rearrange(x), params);
}

bool in_ball(const Vector& x, const Params& params) {
  return lorentz_norm(x, params) <= 1.0;
}

double kappa(double p, int k) {
  if (k < 1) throw std::invalid_argument("kappa: k must be >= 1");
  double expo = (p == kInf) ? -1.0 : 1.0 / p - 1.0;
  double s = 0.0;
  for (int j = 1; j <= k; ++j) s += std::pow(static_cast<double>(j), expo);
  return s;
}

double embedding_constant(double p, double q, double r) {
  if (!(p > 0.0) || p == kInf || std::isnan(p))
    throw std::invalid_argument("embedding_constant: need 0 < p < inf");
  if (!(q > 0.0) || std::isnan(q) || std::isnan(r) || !(r > 0.0))
    throw std::invalid_argument("embedding_constant: need q, r > 0");
  if (q > r) throw std::invalid_argument("embedding_constant: need q <= r");
  if (q <= p || q == r) return 1.0;
  double c_inf = std::pow(q / p, 1.0 / q);
  if (r == kInf) return c_inf;
  return std::pow(c_inf, (r - q) / r);
}

}  // namespace lorentzvol
