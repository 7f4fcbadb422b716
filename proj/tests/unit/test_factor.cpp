#include <cstdint>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "fringe/factor.hpp"

using fringe::Factorization;
using fringe::PrimeFactor;

TEST_CASE("is_prime on small integers") {
  CHECK_FALSE(fringe::is_prime(-7));
  CHECK_FALSE(fringe::is_prime(0));
  CHECK_FALSE(fringe::is_prime(1));
  CHECK(fringe::is_prime(2));
  CHECK(fringe::is_prime(3));
  CHECK_FALSE(fringe::is_prime(4));
  CHECK(fringe::is_prime(97));
  CHECK_FALSE(fringe::is_prime(91));  // 7 * 13
  CHECK(fringe::is_prime(1000000007));
}

TEST_CASE("isqrt brackets the true root") {
  for (std::int64_t n = 0; n <= 10000; ++n) {
    const std::int64_t r = fringe::isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
  const std::int64_t big = 3037000499LL;  // floor(sqrt(2^63 - 1))
  CHECK(fringe::isqrt(big * big) == big);
  CHECK(fringe::isqrt(big * big - 1) == big - 1);
  CHECK_THROWS_AS(fringe::isqrt(-1), std::invalid_argument);
}

TEST_CASE("factorize known values") {
  CHECK(fringe::factorize(1).factors.empty());
  CHECK(fringe::factorize(2).factors == std::vector<PrimeFactor>{{2, 1}});
  CHECK(fringe::factorize(12).factors == std::vector<PrimeFactor>{{2, 2}, {3, 1}});
  CHECK(fringe::factorize(360).factors ==
        std::vector<PrimeFactor>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(fringe::factorize(1LL << 40).factors == std::vector<PrimeFactor>{{2, 40}});
  CHECK(fringe::factorize(97LL * 97).factors == std::vector<PrimeFactor>{{97, 2}});
  CHECK(fringe::factorize(1000000007).factors ==
        std::vector<PrimeFactor>{{1000000007, 1}});
  CHECK_THROWS_AS(fringe::factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(fringe::factorize(-6), std::invalid_argument);
}

TEST_CASE("factorize reconstructs n with increasing primes") {
  for (std::int64_t n = 1; n <= 2000; ++n) {
    const Factorization f = fringe::factorize(n);
    std::int64_t product = 1;
    std::int64_t last = 1;
    for (const auto& pf : f.factors) {
      CHECK(pf.prime > last);
      CHECK(pf.exponent >= 1);
      CHECK(fringe::is_prime(pf.prime));
      last = pf.prime;
      for (int e = 0; e < pf.exponent; ++e) product *= pf.prime;
    }
    CHECK(product == n);
  }
}

TEST_CASE("eratosthenes matches trial division") {
  const auto table = fringe::eratosthenes(2000);
  CHECK(table.bound == 2000);
  std::size_t idx = 0;
  for (std::int64_t n = 2; n <= 2000; ++n) {
    if (fringe::is_prime(n)) {
      REQUIRE(idx < table.primes.size());
      CHECK(table.primes[idx] == n);
      ++idx;
    }
  }
  CHECK(idx == table.primes.size());
  CHECK(fringe::eratosthenes(100).primes.size() == 25);
  CHECK_THROWS_AS(fringe::eratosthenes(1), std::invalid_argument);
}

TEST_CASE("prime table membership") {
  const auto table = fringe::eratosthenes(50);
  CHECK(table.contains(2));
  CHECK(table.contains(47));
  CHECK_FALSE(table.contains(49));
  CHECK_FALSE(table.contains(1));
}

TEST_CASE("omega and big omega oracles") {
  CHECK(fringe::omega_oracle(1) == 0);
  CHECK(fringe::big_omega_oracle(1) == 0);
  CHECK(fringe::omega_oracle(12) == 2);
  CHECK(fringe::big_omega_oracle(12) == 3);
  CHECK(fringe::omega_oracle(30) == 3);
  CHECK(fringe::big_omega_oracle(30) == 3);
  CHECK(fringe::omega_oracle(1024) == 1);
  CHECK(fringe::big_omega_oracle(1024) == 10);
}

TEST_CASE("omega never exceeds big omega, equal exactly when squarefree") {
  for (std::int64_t n = 1; n <= 2000; ++n) {
    const auto f = fringe::factorize(n);
    bool squarefree = true;
    for (const auto& pf : f.factors) squarefree = squarefree && pf.exponent == 1;
    const int w = fringe::omega_oracle(n);
    const int big = fringe::big_omega_oracle(n);
    CHECK(w <= big);
    CHECK((w == big) == squarefree);
  }
}

TEST_CASE("sieve membership matches trial division on a large random sample") {
  const auto table = fringe::eratosthenes(1000000);
  CHECK(table.primes.size() == 78498);
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<std::int64_t> ns(1, 1000000);
  for (int i = 0; i < 20000; ++i) {
    const std::int64_t n = ns(rng);
    CHECK(table.contains(n) == fringe::is_prime(n));
  }
}
