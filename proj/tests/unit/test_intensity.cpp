#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "fringe/intensity.hpp"

using fringe::EvalConfig;
using fringe::intensity_exact;
using fringe::intensity_float;

TEST_CASE("exact kernel is the divisibility indicator") {
  for (std::int64_t p : {2, 3, 4, 5, 7, 9, 12, 13, 97}) {
    for (std::int64_t n = -50; n <= 50; ++n) {
      CHECK(intensity_exact(p, n) == (n % p == 0 ? 1 : 0));
    }
  }
  CHECK(intensity_exact(7, 0) == 1);  // every p divides 0
}

TEST_CASE("kernels reject p below 2") {
  CHECK_THROWS_AS(intensity_exact(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(intensity_exact(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(intensity_exact(-3, 5), std::invalid_argument);
  CHECK_THROWS_AS(intensity_float(1, 0.5), std::invalid_argument);
}

TEST_CASE("float kernel at integers: one at multiples, vanishing elsewhere") {
  for (std::int64_t p : {2, 3, 5, 7, 11, 97}) {
    for (std::int64_t n = -30; n <= 30; ++n) {
      const double v = intensity_float(p, static_cast<double>(n));
      if (n % p == 0) {
        CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
      } else {
        CHECK(v < 1e-9);
      }
    }
  }
}

TEST_CASE("float kernel stays within the unit interval") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> xs(-100.0, 100.0);
  for (std::int64_t p : {2, 3, 5, 31}) {
    for (int i = 0; i < 2000; ++i) {
      const double v = intensity_float(p, xs(rng));
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("symmetry: I(-x) equals I(x)") {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> xs(0.0, 1000.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = xs(rng);
    for (std::int64_t p : {2, 5, 13}) {
      CHECK(intensity_float(p, -x) ==
            doctest::Approx(intensity_float(p, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("periodicity: shifting by p changes nothing beyond rounding") {
  std::mt19937_64 rng(888);
  std::uniform_real_distribution<double> xs(-500.0, 500.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = xs(rng);
    for (std::int64_t p : {2, 3, 7, 29}) {
      const double a = intensity_float(p, x);
      const double b = intensity_float(p, x + static_cast<double>(p));
      CHECK(std::abs(a - b) < 1e-10);
    }
  }
}

TEST_CASE("huge arguments reduce exactly") {
  // 1e12 is even; its neighbor is odd. Range reduction keeps full precision.
  CHECK(intensity_float(2, 1e12) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(intensity_float(2, 1e12 + 1.0) < 1e-12);
  CHECK(intensity_float(3, 999999999999.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ratio and phasor routes agree away from the singularity") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> xs(0.05, 0.95);
  for (std::int64_t p : {2, 3, 5, 11}) {
    for (int i = 0; i < 500; ++i) {
      const double x = xs(rng) * static_cast<double>(p);  // clear of multiples of p
      const double r = fringe::detail::intensity_ratio(p, x);
      const double ph = fringe::detail::intensity_phasor(p, x);
      CHECK(r == doctest::Approx(ph).epsilon(1e-11));
    }
  }
}

TEST_CASE("value is continuous across the singularity window edge") {
  const EvalConfig cfg;
  for (std::int64_t p : {2, 5, 13}) {
    const double edge = cfg.singularity_window * static_cast<double>(p);
    const double inside = intensity_float(p, edge * 0.999, cfg);
    const double outside = intensity_float(p, edge * 1.001, cfg);
    CHECK(std::abs(inside - outside) < 1e-9);
  }
}

TEST_CASE("profile grid covers both endpoints") {
  const auto even = fringe::profile(2, 0.0, 1.0, 0.25);
  REQUIRE(even.size() == 5);
  CHECK(even.x.front() == 0.0);
  CHECK(even.x.back() == 1.0);

  // span not a multiple of step: the endpoint is appended
  const auto ragged = fringe::profile(2, 0.0, 1.0, 0.3);
  REQUIRE(ragged.size() == 5);
  CHECK(ragged.x.back() == 1.0);
  CHECK(ragged.x[3] == doctest::Approx(0.9));

  const auto fine = fringe::profile(3, 0.0, 10.0, 0.01);
  CHECK(fine.size() == 1001);
  CHECK(fine.x.back() == 10.0);
}

TEST_CASE("profile rejects degenerate ranges") {
  CHECK_THROWS_AS(fringe::profile(2, 1.0, 0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(fringe::profile(2, 0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(fringe::profile(2, 0.0, 1.0, -0.1), std::invalid_argument);
}

TEST_CASE("config validation") {
  EvalConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK_NOTHROW(cfg.validate_for_max_prime(997));  // 1e-9 < 1/997^2

  cfg.zero_threshold = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

  cfg.zero_threshold = 1e-5;  // too loose for p = 997: 1/997^2 ~ 1e-6
  CHECK_THROWS_AS(cfg.validate_for_max_prime(997), std::invalid_argument);
}
