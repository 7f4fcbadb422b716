#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "fringe/zeta.hpp"

TEST_CASE("zeta at reference points") {
  const double pi = std::numbers::pi;
  CHECK(fringe::zeta(2.0) == doctest::Approx(pi * pi / 6.0).epsilon(1e-13));
  CHECK(fringe::zeta(4.0) == doctest::Approx(pi * pi * pi * pi / 90.0).epsilon(1e-13));
  CHECK(fringe::zeta(3.0) == doctest::Approx(1.2020569031595943).epsilon(1e-13));
  CHECK(fringe::zeta(6.0) == doctest::Approx(1.0173430619844491).epsilon(1e-13));
  CHECK(fringe::zeta(1.5) == doctest::Approx(2.6123753486854883).epsilon(1e-13));
  CHECK(fringe::zeta(20.0) == doctest::Approx(1.0000009539620338).epsilon(1e-13));
  CHECK_THROWS_AS(fringe::zeta(1.0), std::invalid_argument);
  CHECK_THROWS_AS(fringe::zeta(0.5), std::invalid_argument);
}

TEST_CASE("pairwise sum is deterministic and accurate") {
  std::vector<double> terms;
  for (int i = 1; i <= 10001; ++i) terms.push_back(1.0 / i);
  const double a = fringe::pairwise_sum(terms);
  const double b = fringe::pairwise_sum(terms);
  CHECK(a == b);
  long double ref = 0.0L;
  for (double t : terms) ref += t;
  CHECK(a == doctest::Approx(static_cast<double>(ref)).epsilon(1e-14));
  CHECK(fringe::pairwise_sum({}) == 0.0);
  const std::vector<double> one{3.25};
  CHECK(fringe::pairwise_sum(one) == 3.25);
}

TEST_CASE("identity check at s = 2 targets 5/2") {
  const auto rep = fringe::zeta_identity_check(2.0, 1000);
  CHECK(std::abs(rep.target - 2.5) < 1e-12);
  CHECK(rep.n_terms == 1000);
  CHECK(rep.gap > 0.0);
  CHECK(rep.gap == doctest::Approx(std::abs(rep.partial_sum - rep.target)));
}

TEST_CASE("identity gap shrinks with more terms") {
  const std::vector<std::int64_t> cps{100, 1000, 10000};
  const auto reports = fringe::zeta_convergence(2.0, cps);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].gap > reports[1].gap);
  CHECK(reports[1].gap > reports[2].gap);
  for (const auto& r : reports) CHECK(r.s == 2.0);
}

TEST_CASE("partial sums grow with the term count") {
  // every term is positive, so each checkpoint can only add
  const std::vector<std::int64_t> cps{1, 2, 5, 50, 500, 5000};
  const auto reports = fringe::zeta_convergence(2.5, cps);
  CHECK(reports.front().partial_sum == 1.0);  // single term 2^0/1
  for (std::size_t i = 1; i < reports.size(); ++i) {
    CHECK(reports[i].partial_sum > reports[i - 1].partial_sum);
  }
}

TEST_CASE("convergence pass reproduces single-shot checks") {
  const std::vector<std::int64_t> cps{10, 500, 2000};
  const auto reports = fringe::zeta_convergence(3.0, cps);
  REQUIRE(reports.size() == 3);
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const auto solo = fringe::zeta_identity_check(3.0, cps[i]);
    CHECK(reports[i].partial_sum == solo.partial_sum);
    CHECK(reports[i].target == solo.target);
  }
}

TEST_CASE("fast convergence at s = 3") {
  const auto rep = fringe::zeta_identity_check(3.0, 10000);
  CHECK(rep.gap < 1e-6);
}

TEST_CASE("identity check rejects bad arguments") {
  CHECK_THROWS_AS(fringe::zeta_identity_check(1.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(fringe::zeta_identity_check(2.0, 0), std::invalid_argument);
  const std::vector<std::int64_t> unsorted{100, 10};
  CHECK_THROWS_AS(fringe::zeta_convergence(2.0, unsorted), std::invalid_argument);
  const std::vector<std::int64_t> nonpositive{0, 10};
  CHECK_THROWS_AS(fringe::zeta_convergence(2.0, nonpositive), std::invalid_argument);
}
