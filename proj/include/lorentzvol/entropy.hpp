#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lorentzvol/bigfloat.hpp"
#include "lorentzvol/lorentz.hpp"

namespace lorentzvol {

// Family of k-subsets of {0..n-1} with all pairwise intersections below k/2.
// certified is set only after the target count was reached and every
// property re-verified by direct scan.
struct IndexSetFamily {
  int n = 0;
  int k = 0;
  std::uint64_t target = 0;
  std::vector<std::vector<int>> sets;  // each sorted ascending
  bool certified = false;
};

// ceil((n/(4k))^{k/2}), evaluated in exact integer arithmetic.
std::uint64_t coding_target(int n, int k);

class ConstructionExhausted : public std::runtime_error {
 public:
  ConstructionExhausted(std::string what, IndexSetFamily partial_family)
      : std::runtime_error(std::move(what)), partial(std::move(partial_family)) {}
  IndexSetFamily partial;
};

// Randomized greedy: draw k-subsets, keep those intersecting every accepted
// set in fewer than k/2 points, stop at the target count. Deterministic for
// a fixed seed. Throws ConstructionExhausted (carrying the partial family)
// when the retry budget runs out. target_override = 0 means the coding
// bound; retry_budget = 0 picks a default proportional to the target.
IndexSetFamily construct_code(int n, int k, std::uint64_t seed, std::uint64_t target_override = 0,
                              std::uint64_t retry_budget = 0);

// Quadratic re-verification of sizes, intersections and the count.
bool verify_code(const IndexSetFamily& family);
bool verify_code_serial(const IndexSetFamily& family);

// Layered dyadic vectors x^j = sum_l 4^{-l} on disjointified level sets.
// All entries are powers of 1/4, so norms and distances are exact dyadics;
// the two certified constants are weak norm <= 4/3 and pairwise l1 distance
// >= (nu - mu + 1)/8.
struct PackingFamily {
  int n = 0;
  int mu = 0;
  int nu = 0;
  std::uint64_t family_size = 0;
  std::vector<Vector> vectors;
  // per vector: 0 = coordinate untouched, else its unique level in [mu,nu]
  std::vector<std::vector<std::int8_t>> level_of;
  std::vector<std::vector<int>> level_sizes;  // |T~^l_j|, indexed l - mu
  double weak_norm_bound = 0.0;
  double min_pairwise_l1 = 0.0;
};

// Requires 12 * 4^nu <= n and 1 <= mu <= nu. Codes are built per level with
// k = 4^l, truncated to the common count M = ceil((n/4^{mu+1})^{4^mu/2}),
// then disjointified top-down. ConstructionExhausted propagates.
PackingFamily build_packing(int n, int mu, int nu, std::uint64_t seed);

// Exact integer checks of both packing constants (no floating tolerance):
// 3*m <= 4^{l+1} for every sorted prefix, 8*D >= (nu-mu+1)*4^nu pairwise.
bool verify_packing_exact(const PackingFamily& family);
bool verify_packing_exact_serial(const PackingFamily& family);

struct EntropyCurvePoint {
  int k = 0;
  double lower = 0.0;
  double upper = 0.0;
};

// Two-regime bounds on e_k(id: l^n_{1,inf} -> l^n_1). lower is rigorous
// (volume comparison and the packing count); upper is the calibrated shape
// min(1 + log n, C1 log(1+n/k) for k <= n, C2 2^{-(k-1)/n} for k >= n).
struct EntropyBoundCurve {
  int n = 0;
  std::vector<EntropyCurvePoint> points;  // k = 1..k_max
  double vol_ratio_root = 0.0;            // (vol(B^n_{1,inf})/vol(B^n_1))^{1/n}
  double upper_log_coeff = 0.0;           // C1 in effect
  double upper_exp_coeff = 0.0;           // C2 in effect
  int gamma = 0;  // smallest g with 8 * vol_ratio_root * 2^{-(gn-1)/n} < 1
};

EntropyBoundCurve entropy_bound_curve(int n, int k_max, const PrecisionContext& ctx);

// Width nu - mu + 1 of the widest feasible packing level range at (n, k):
// nu maximal with 12 * 4^nu <= n, mu minimal with the level-mu code count
// still reaching 2^{k-1}. Returns 0 when no packing is feasible.
int packing_lower_span(int n, int k);

// Greedy scan: keep a point iff its l1 distance to everything kept so far
// exceeds eps. The result is maximal for the input cloud.
std::vector<Vector> greedy_separated_set(const std::vector<Vector>& points, double eps);

}  // namespace lorentzvol
