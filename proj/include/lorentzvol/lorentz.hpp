#pragma once

#include <limits>
#include <vector>

namespace lorentzvol {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Exponent pair (p, q). Either entry may be +inf; both must be positive and
// not NaN. Validated once at construction so everything downstream can trust
// the pair.
class Params {
 public:
  Params(double p, double q);

  double p() const { return p_; }
  double q() const { return q_; }

 private:
  double p_;
  double q_;
};

// Finite real vector, length fixed at construction (n >= 1, all entries
// finite).
class Vector {
 public:
  explicit Vector(std::vector<double> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  double operator[](int i) const { return entries_[i]; }
  const std::vector<double>& entries() const { return entries_; }

 private:
  std::vector<double> entries_;
};

// Absolute values sorted non-increasingly. Only obtainable through
// rearrange(), which establishes the ordering invariant.
class RearrangedVector {
 public:
  int size() const { return static_cast<int>(entries_.size()); }
  double operator[](int i) const { return entries_[i]; }
  const std::vector<double>& entries() const { return entries_; }

 private:
  friend RearrangedVector rearrange(const Vector&);
  explicit RearrangedVector(std::vector<double> sorted) : entries_(std::move(sorted)) {}
  std::vector<double> entries_;
};

RearrangedVector rearrange(const Vector& x);

double lorentz_norm(const Vector& x, const Params& params);
double lorentz_norm(const RearrangedVector& xs, const Params& params);

// Norm of a buffer already holding |entries| sorted non-increasingly.
// Allocation-free core shared with the Monte Carlo sampler.
double lorentz_norm_sorted(const double* xs, int n, double p, double q);

// Boundary points count as inside; no tolerance is applied.
bool in_ball(const Vector& x, const Params& params);

// kappa_p(k) = sum_{j<=k} j^{1/p-1}; for p = inf this is the harmonic sum.
double kappa(double p, int k);

// Smallest c with ||x||_{p,r} <= c ||x||_{p,q} over all n. Requires
// 0 < p < inf and 0 < q <= r <= inf; equals 1 when q <= p or q = r.
double embedding_constant(double p, double q, double r);

}  // namespace lorentzvol
