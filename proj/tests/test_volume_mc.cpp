#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lorentzvol/rng.hpp"
#include "lorentzvol/volume_mc.hpp"
#include "support/oracles.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace lorentzvol;
namespace oracle = lorentzvol::testing;

TEST_CASE("counter rng is a pure function of (seed, counter)") {
  for (std::uint64_t seed : {0ull, 1ull, 0xDEADBEEFull}) {
    for (std::uint64_t c : {0ull, 1ull, 17ull, 1000000007ull}) {
      CHECK(splitmix64_at(seed, c) == oracle::ref_splitmix64_at(seed, c));
    }
  }
  // uniform mapping stays in range
  CHECK(uniform01(~0ull) < 1.0);
  CHECK(uniform01(0) == 0.0);
  CHECK(uniform_sym(0) == -1.0);
  CHECK(uniform_sym(~0ull) < 1.0);
}

TEST_CASE("reproducibility and thread independence") {
  McConfig config{200000, 42, 0.99};
  Params params(1.0, kInf);
  std::uint64_t serial = mc_count_hits_serial(3, params, config, false);
  std::uint64_t parallel = mc_count_hits(3, params, config, false);
  CHECK(serial == parallel);
  CHECK(mc_count_hits(3, params, config, false) == parallel);  // repeat run

#ifdef _OPENMP
  int saved = omp_get_max_threads();
  for (int threads : {1, 2, 5}) {
    omp_set_num_threads(threads);
    CHECK(mc_count_hits(3, params, config, false) == serial);
  }
  omp_set_num_threads(saved);
#endif

  McEstimate a = mc_volume(4, Params(2.0, 1.0), config);
  McEstimate b = mc_volume(4, Params(2.0, 1.0), config);
  CHECK(a.hits == b.hits);
  CHECK(a.volume == b.volume);
  CHECK(a.ci_half_width == b.ci_half_width);
}

TEST_CASE("cube coverage is exact") {
  McConfig config{100000, 7, 0.99};
  McEstimate est = mc_volume(5, Params(kInf, kInf), config);
  CHECK(est.hits == est.samples);
  CHECK(est.volume == 32.0);
  CHECK(est.ci_half_width == 0.0);
}

TEST_CASE("positive orthant in one dimension is the unit interval") {
  McConfig config{50000, 3, 0.99};
  McEstimate est = mc_positive_orthant(1, Params(0.7, 2.3), config);
  CHECK(est.hits == est.samples);
  CHECK(est.volume == 1.0);
}

TEST_CASE("estimates cover known volumes") {
  McConfig config{400000, 11, 0.99};

  McEstimate cross = mc_volume(3, Params(1.0, 1.0), config);
  CHECK(std::fabs(cross.volume - 4.0 / 3.0) <= cross.ci_half_width);

  McEstimate disk = mc_volume(2, Params(2.0, 2.0), config);
  CHECK(std::fabs(disk.volume - M_PI) <= disk.ci_half_width);

  McEstimate weak3 = mc_volume(3, Params(1.0, kInf), config);
  CHECK(std::fabs(weak3.volume - 98.0 / 27.0) <= weak3.ci_half_width);

  McEstimate orthant2 = mc_positive_orthant(2, Params(1.0, kInf), config);
  CHECK(std::fabs(orthant2.volume - 0.75) <= orthant2.ci_half_width);

  McEstimate orthant4 = mc_positive_orthant(4, Params(1.0, kInf), config);
  CHECK(std::fabs(orthant4.volume - 1597.0 / 6912.0) <= orthant4.ci_half_width);
}

TEST_CASE("ci arithmetic matches its definition") {
  McConfig config{250000, 9, 0.95};
  McEstimate est = mc_volume(2, Params(1.0, kInf), config);
  double phat = static_cast<double>(est.hits) / est.samples;
  CHECK(est.volume == 4.0 * phat);
  double z = normal_quantile(0.975);
  CHECK(est.ci_half_width ==
        doctest::Approx(z * 4.0 * std::sqrt(phat * (1 - phat) / est.samples)).epsilon(1e-15));
}

TEST_CASE("normal quantile reference values") {
  CHECK(normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
  CHECK(normal_quantile(0.995) == doctest::Approx(2.5758293035489004).epsilon(1e-12));
  CHECK(normal_quantile(0.5) == doctest::Approx(0.0));
  CHECK(normal_quantile(0.0013498980316300946) == doctest::Approx(-3.0).epsilon(1e-10));
  CHECK_THROWS_AS(normal_quantile(0.0), std::invalid_argument);
  CHECK_THROWS_AS(normal_quantile(1.0), std::invalid_argument);
}

TEST_CASE("guards") {
  McConfig ok{1000, 1, 0.99};
  CHECK_THROWS_AS(mc_volume(21, Params(1.0, 1.0), ok), std::invalid_argument);
  CHECK_THROWS_AS(mc_volume(0, Params(1.0, 1.0), ok), std::invalid_argument);
  McConfig small{999, 1, 0.99};
  CHECK_THROWS_AS(mc_volume(2, Params(1.0, 1.0), small), std::invalid_argument);
  McConfig badconf{1000, 1, 1.0};
  CHECK_THROWS_AS(mc_volume(2, Params(1.0, 1.0), badconf), std::invalid_argument);
}

TEST_CASE("sparse hits raise the warning flag") {
  // vol(B^10_{0.5,inf}) / 2^10 is far below 100/5000
  McConfig config{5000, 13, 0.99};
  McEstimate est = mc_volume(10, Params(0.5, kInf), config);
  CHECK(est.low_hits);
}

TEST_CASE("coverage over seeds at 99%") {
  const double exact = 4.0 / 3.0;
  int covered = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    McConfig config{50000, seed, 0.99};
    McEstimate est = mc_volume(3, Params(1.0, 1.0), config);
    if (std::fabs(est.volume - exact) <= est.ci_half_width) ++covered;
  }
  CHECK(covered >= 17);
}

TEST_CASE("quadrature reference agrees with the closed form at n = 2") {
  double chain = oracle::ref_volume_q2(2, 1.0);
  CHECK(chain == doctest::Approx(oracle::ref_volume_q2_n2_closed_form()).epsilon(1e-8));
  // and Monte Carlo corroborates it at n = 4
  McConfig config{400000, 17, 0.99};
  McEstimate est = mc_volume(4, Params(1.0, 2.0), config);
  CHECK(std::fabs(est.volume - oracle::ref_volume_q2(4, 1.0)) <= est.ci_half_width);
}
