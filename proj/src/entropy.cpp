#include "lorentzvol/entropy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>

#include "lorentzvol/volume_exact.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lorentzvol {

namespace {

// Bitmask view of a subset of {0..n-1}.
struct Mask {
  std::vector<std::uint64_t> words;

  explicit Mask(int n) : words((n + 63) / 64, 0) {}
  void set(int u) { words[u >> 6] |= std::uint64_t{1} << (u & 63); }
  bool test(int u) const { return (words[u >> 6] >> (u & 63)) & 1; }

  // |a & b| < k/2 as exact integers (2|a & b| < k), with early exit
  friend bool intersection_below_half(const Mask& a, const Mask& b, int k) {
    int pc = 0;
    for (size_t w = 0; w < a.words.size(); ++w) {
      pc += std::popcount(a.words[w] & b.words[w]);
      if (2 * pc >= k) return false;
    }
    return true;
  }
};

std::vector<int> mask_to_sorted(const Mask& m, int n) {
  std::vector<int> out;
  for (int u = 0; u < n; ++u)
    if (m.test(u)) out.push_back(u);
  return out;
}

}  // namespace

std::uint64_t coding_target(int n, int k) {
  // smallest M with M^2 * (4k)^k >= n^k, i.e. M >= (n/(4k))^{k/2}
  mpz_t num, den, m2, lhs;
  mpz_inits(num, den, m2, lhs, nullptr);
  mpz_ui_pow_ui(num, n, k);
  mpz_ui_pow_ui(den, 4ul * k, k);

  double est = std::pow(static_cast<double>(n) / (4.0 * k), 0.5 * k);
  std::uint64_t m = est < 1.0 ? 1 : static_cast<std::uint64_t>(est);
  auto ge = [&](std::uint64_t cand) {
    mpz_set_ui(m2, cand);
    mpz_mul(m2, m2, m2);
    mpz_mul(lhs, m2, den);
    return mpz_cmp(lhs, num) >= 0;
  };
  while (!ge(m)) ++m;
  while (m > 1 && ge(m - 1)) --m;
  mpz_clears(num, den, m2, lhs, nullptr);
  return m;
}

IndexSetFamily construct_code(int n, int k, std::uint64_t seed, std::uint64_t target_override,
                              std::uint64_t retry_budget) {
  if (k < 1 || k > n) throw std::invalid_argument("construct_code: need 1 <= k <= n");
  const std::uint64_t target = target_override ? target_override : coding_target(n, k);
  if (retry_budget == 0) retry_budget = 50 * target + 1000;

  std::mt19937_64 gen(seed);
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;

  std::vector<Mask> accepted;
  accepted.reserve(target);

  std::uint64_t draws = 0;
  while (accepted.size() < target && draws < retry_budget) {
    ++draws;
    // partial Fisher-Yates: a uniform k-subset in the first k slots
    Mask cand(n);
    for (int i = 0; i < k; ++i) {
      std::uniform_int_distribution<int> pick(i, n - 1);
      std::swap(idx[i], idx[pick(gen)]);
      cand.set(idx[i]);
    }
    bool ok = true;
    for (const Mask& acc : accepted) {
      if (!intersection_below_half(cand, acc, k)) {
        ok = false;
        break;
      }
    }
    if (ok) accepted.push_back(std::move(cand));
  }

  IndexSetFamily family;
  family.n = n;
  family.k = k;
  family.target = target;
  family.sets.reserve(accepted.size());
  for (const Mask& m : accepted) family.sets.push_back(mask_to_sorted(m, n));

  if (accepted.size() < target) {
    family.certified = false;
    throw ConstructionExhausted("construct_code: retry budget spent at " +
                                    std::to_string(accepted.size()) + " of " +
                                    std::to_string(target) + " sets (n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k) + ")",
                                std::move(family));
  }
  family.certified = verify_code(family);
  return family;
}

namespace {

bool verify_code_impl(const IndexSetFamily& family, bool parallel) {
  const int n = family.n, k = family.k;
  if (family.sets.size() < family.target) return false;
  std::vector<Mask> masks;
  masks.reserve(family.sets.size());
  for (const auto& s : family.sets) {
    if (static_cast<int>(s.size()) != k) return false;
    Mask m(n);
    for (int u : s) {
      if (u < 0 || u >= n) return false;
      m.set(u);
    }
    masks.push_back(std::move(m));
  }
  const std::int64_t count = static_cast<std::int64_t>(masks.size());
  std::int64_t bad = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : bad) schedule(dynamic, 16) if (parallel)
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    for (std::int64_t j = i + 1; j < count; ++j) {
      int pc = 0;
      for (size_t w = 0; w < masks[i].words.size(); ++w)
        pc += std::popcount(masks[i].words[w] & masks[j].words[w]);
      if (2 * pc >= k) ++bad;
    }
  }
  return bad == 0;
}

}  // namespace

bool verify_code(const IndexSetFamily& family) { return verify_code_impl(family, true); }
bool verify_code_serial(const IndexSetFamily& family) { return verify_code_impl(family, false); }

PackingFamily build_packing(int n, int mu, int nu, std::uint64_t seed) {
  if (mu < 1 || nu < mu) throw std::invalid_argument("build_packing: need 1 <= mu <= nu");
  // 12 * 4^nu <= n keeps every level's code feasible
  double level_cap = 12.0 * std::ldexp(1.0, 2 * nu);
  if (level_cap > static_cast<double>(n))
    throw std::invalid_argument("build_packing: requires 12 * 4^nu <= n (got n = " +
                                std::to_string(n) + ", nu = " + std::to_string(nu) + ")");

  const std::uint64_t m_common = coding_target(n, 1 << (2 * mu));

  // one code family per level, all truncated to the common count
  std::vector<IndexSetFamily> levels;
  levels.reserve(nu - mu + 1);
  for (int l = mu; l <= nu; ++l) {
    levels.push_back(construct_code(n, 1 << (2 * l), seed + static_cast<std::uint64_t>(l),
                                    m_common));
  }

  PackingFamily fam;
  fam.n = n;
  fam.mu = mu;
  fam.nu = nu;
  fam.family_size = m_common;
  fam.vectors.reserve(m_common);
  fam.level_of.assign(m_common, std::vector<std::int8_t>(n, 0));
  fam.level_sizes.assign(m_common, std::vector<int>(nu - mu + 1, 0));

  for (std::uint64_t j = 0; j < m_common; ++j) {
    // disjointify top-down: T~^l_j = T^l_j minus all lower levels
    auto& level = fam.level_of[j];
    for (int l = mu; l <= nu; ++l) {
      int kept = 0;
      for (int u : levels[l - mu].sets[j]) {
        if (level[u] == 0) {
          level[u] = static_cast<std::int8_t>(l);
          ++kept;
        }
      }
      fam.level_sizes[j][l - mu] = kept;
    }
    std::vector<double> entries(n, 0.0);
    for (int u = 0; u < n; ++u)
      if (level[u] != 0) entries[u] = std::ldexp(1.0, -2 * level[u]);
    fam.vectors.emplace_back(std::move(entries));
  }

  // weak norm per vector: within a constant block the position weight peaks
  // at the block end, so only block ends need checking
  double worst = 0.0;
  for (std::uint64_t j = 0; j < m_common; ++j) {
    long position = 0;
    for (int l = mu; l <= nu; ++l) {
      position += fam.level_sizes[j][l - mu];
      double cand = static_cast<double>(position) * std::ldexp(1.0, -2 * l);
      if (cand > worst) worst = cand;
    }
  }
  fam.weak_norm_bound = worst;

  // pairwise l1 distances as integers scaled by 4^nu
  const std::int64_t count = static_cast<std::int64_t>(m_common);
  std::int64_t min_scaled = std::numeric_limits<std::int64_t>::max();
#ifdef _OPENMP
#pragma omp parallel for reduction(min : min_scaled) schedule(dynamic, 8)
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    for (std::int64_t j2 = i + 1; j2 < count; ++j2) {
      const auto& a = fam.level_of[i];
      const auto& b = fam.level_of[j2];
      std::int64_t d = 0;
      for (int u = 0; u < n; ++u) {
        if (a[u] == b[u]) continue;
        std::int64_t va = a[u] ? (std::int64_t{1} << (2 * (nu - a[u]))) : 0;
        std::int64_t vb = b[u] ? (std::int64_t{1} << (2 * (nu - b[u]))) : 0;
        d += std::llabs(va - vb);
      }
      if (d < min_scaled) min_scaled = d;
    }
  }
  fam.min_pairwise_l1 =
      count > 1 ? std::ldexp(static_cast<double>(min_scaled), -2 * nu) : 0.0;
  return fam;
}

namespace {

bool verify_packing_impl(const PackingFamily& fam, bool parallel) {
  const int n = fam.n, mu = fam.mu, nu = fam.nu;
  const std::int64_t count = static_cast<std::int64_t>(fam.vectors.size());
  if (count != static_cast<std::int64_t>(fam.family_size)) return false;

  for (std::int64_t j = 0; j < count; ++j) {
    // level sets disjoint by construction of level_of; check sizes and the
    // vector entries against the level assignment
    std::vector<int> sizes(nu - mu + 1, 0);
    for (int u = 0; u < n; ++u) {
      int l = fam.level_of[j][u];
      double want = l ? std::ldexp(1.0, -2 * l) : 0.0;
      if (fam.vectors[j][u] != want) return false;
      if (l) {
        if (l < mu || l > nu) return false;
        ++sizes[l - mu];
      }
    }
    if (sizes[0] != (1 << (2 * mu))) return false;  // |T~^mu_j| = 4^mu
    for (int l = mu + 1; l <= nu; ++l)              // 3|T~^l_j| >= 2*4^l
      if (3 * sizes[l - mu] < 2 * (1 << (2 * l))) return false;
    if (sizes != fam.level_sizes[j]) return false;

    // weak norm: 3 * position <= 4^{l+1} at every block end
    long position = 0;
    for (int l = mu; l <= nu; ++l) {
      position += sizes[l - mu];
      if (3 * position > (1L << (2 * (l + 1)))) return false;
    }
  }

  // separation: 8 * D_scaled >= (nu - mu + 1) * 4^nu, exact integers
  const std::int64_t rhs = static_cast<std::int64_t>(nu - mu + 1) * (std::int64_t{1} << (2 * nu));
  std::int64_t bad = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : bad) schedule(dynamic, 8) if (parallel)
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    for (std::int64_t j2 = i + 1; j2 < count; ++j2) {
      const auto& a = fam.level_of[i];
      const auto& b = fam.level_of[j2];
      std::int64_t d = 0;
      for (int u = 0; u < n; ++u) {
        if (a[u] == b[u]) continue;
        std::int64_t va = a[u] ? (std::int64_t{1} << (2 * (nu - a[u]))) : 0;
        std::int64_t vb = b[u] ? (std::int64_t{1} << (2 * (nu - b[u]))) : 0;
        d += std::llabs(va - vb);
      }
      if (8 * d < rhs) ++bad;
    }
  }
  return bad == 0;
}

}  // namespace

bool verify_packing_exact(const PackingFamily& fam) { return verify_packing_impl(fam, true); }
bool verify_packing_exact_serial(const PackingFamily& fam) {
  return verify_packing_impl(fam, false);
}

namespace {

// calibrated against greedy-net covering estimates on small n, then floored
// so the rigorous lower curve can never cross above the fit
constexpr double kCalibratedLogCoeff = 3.0;
constexpr double kCalibratedExpCoeff = 3.5;

}  // namespace

int packing_lower_span(int n, int k) {
  if (n < 1 || k < 1) return 0;
  int nu_max = 0;
  while (12.0 * std::ldexp(1.0, 2 * (nu_max + 1)) <= static_cast<double>(n)) ++nu_max;
  if (nu_max < 1) return 0;
  for (int mu = 1; mu <= nu_max; ++mu) {
    double words = std::ldexp(1.0, 2 * mu);  // 4^mu
    if (static_cast<double>(n) < 4.0 * words) break;
    double log2m = 0.5 * words * std::log2(static_cast<double>(n) / (4.0 * words));
    if (log2m >= static_cast<double>(k - 1)) return nu_max - mu + 1;
  }
  return 0;
}

EntropyBoundCurve entropy_bound_curve(int n, int k_max, const PrecisionContext& ctx) {
  if (n < 1) throw std::invalid_argument("entropy_bound_curve: n must be >= 1");
  if (k_max < 1) throw std::invalid_argument("entropy_bound_curve: k_max must be >= 1");

  EntropyBoundCurve curve;
  curve.n = n;

  // (vol(B^n_{1,inf}) / vol(B^n_1))^{1/n} = (n! W_n)^{1/n}
  const int bits = ctx.mantissa_bits;
  WeakVolumeTable table = vol_weak_positive_recursive_all(n, 1.0, ctx);
  BigFloat log_ratio = log(table.values[n]) + lngamma(BigFloat(static_cast<long>(n + 1), bits));
  const double a = std::exp(log_ratio.to_double() / n);
  curve.vol_ratio_root = a;

  int g = 1;
  while (8.0 * a * std::exp2(-(static_cast<double>(g) * n - 1.0) / n) >= 1.0) ++g;
  curve.gamma = g;

  const double c_log =
      std::max(kCalibratedLogCoeff, a * std::exp2(-(n - 1.0) / n) / std::log(2.0));
  const double c_exp = std::max(kCalibratedExpCoeff, a);
  curve.upper_log_coeff = c_log;
  curve.upper_exp_coeff = c_exp;

  // 2^{-r/n} for r = 0..n-1; the integer part of (k-1)/n goes through ldexp
  // so consecutive same-phase points differ by exactly a power of two
  std::vector<double> phase(n);
  for (int r = 0; r < n; ++r) phase[r] = std::exp2(-static_cast<double>(r) / n);

  curve.points.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) {
    const int m = (k - 1) / n, r = (k - 1) % n;
    double lower = std::ldexp(a * phase[r], -m);  // volume comparison, all k

    if (k <= n) {
      int span = packing_lower_span(n, k);
      if (span > 0) lower = std::max(lower, (3.0 / 64.0) * span);
    }

    double upper = 1.0 + std::log(static_cast<double>(n));
    if (k <= n) upper = std::min(upper, c_log * std::log1p(static_cast<double>(n) / k));
    if (k >= n) upper = std::min(upper, std::ldexp(c_exp * phase[r], -m));
    curve.points.push_back({k, lower, upper});
  }

  // entropy numbers are nonincreasing in k, so bounds transport one-sidedly:
  // any upper bound at k' < k caps k, any lower bound at k' > k floors k
  for (size_t i = 1; i < curve.points.size(); ++i)
    curve.points[i].upper = std::min(curve.points[i].upper, curve.points[i - 1].upper);
  for (size_t i = curve.points.size(); i-- > 1;)
    curve.points[i - 1].lower = std::max(curve.points[i - 1].lower, curve.points[i].lower);

  return curve;
}

std::vector<Vector> greedy_separated_set(const std::vector<Vector>& points, double eps) {
  std::vector<Vector> kept;
  for (const Vector& pt : points) {
    bool far = true;
    for (const Vector& acc : kept) {
      if (acc.size() != pt.size())
        throw std::invalid_argument("greedy_separated_set: mixed dimensions");
      double d = 0.0;
      for (int u = 0; u < pt.size(); ++u) d += std::fabs(pt[u] - acc[u]);
      if (d <= eps) {
        far = false;
        break;
      }
    }
    if (far) kept.push_back(pt);
  }
  return kept;
}

}  // namespace lorentzvol
