#include "fringe/series.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace fringe {

namespace {

// Primes for the sqrt-bounded enumerations, cached per thread. The cache may
// hold more primes than requested; callers bound their own loops.
const std::vector<std::int64_t>& primes_through(std::int64_t bound) {
  thread_local std::vector<std::int64_t> cache;
  thread_local std::int64_t cached_bound = 0;
  if (bound > cached_bound) {
    cached_bound = std::max<std::int64_t>(bound, 2 * cached_bound);
    cache = eratosthenes(std::max<std::int64_t>(cached_bound, 2)).primes;
  }
  return cache;
}

void check_positive(std::int64_t n, const char* who) {
  if (n < 1) {
    throw std::invalid_argument(std::string(who) + ": n must be >= 1");
  }
}

}  // namespace

void require_prime_prefix(std::span<const std::int64_t> primes) {
  if (primes.empty()) {
    throw std::invalid_argument("prime prefix must be nonempty");
  }
  if (primes.front() != 2) {
    throw std::invalid_argument("prime prefix must start at 2");
  }
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i])) {
      throw std::invalid_argument("prime prefix contains a composite: " +
                                  std::to_string(primes[i]));
    }
    if (i > 0) {
      for (std::int64_t q = primes[i - 1] + 1; q < primes[i]; ++q) {
        if (is_prime(q)) {
          throw std::invalid_argument("prime prefix has a gap: missing " +
                                      std::to_string(q));
        }
      }
    }
  }
}

OmegaPartialSum::OmegaPartialSum(std::vector<std::int64_t> primes, EvalConfig cfg)
    : primes_(std::move(primes)), cfg_(cfg) {
  require_prime_prefix(primes_);
  cfg_.validate_for_max_prime(primes_.back());
}

double omega_m_float(const OmegaPartialSum& sum, double x) {
  double acc = 0.0;
  for (std::int64_t p : sum.primes()) acc += intensity_float(p, x, sum.config());
  return acc;
}

int omega_m_exact(std::span<const std::int64_t> primes, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("omega_m_exact: n must be >= 0");
  int count = 0;
  for (std::int64_t p : primes) count += intensity_exact(p, n);
  return count;
}

IntensityProfile omega_m_profile(const OmegaPartialSum& sum, double x_min,
                                 double x_max, double step) {
  IntensityProfile out;
  out.x = detail::make_grid(x_min, x_max, step);
  out.value.reserve(out.x.size());
  for (double x : out.x) out.value.push_back(omega_m_float(sum, x));
  return out;
}

int omega_series(std::int64_t n) {
  check_positive(n, "omega_series");
  if (n == 1) return 0;
  int count = 0;
  std::int64_t rest = n;
  for (std::int64_t p : primes_through(isqrt(n))) {
    if (p * p > n) break;
    // Once every prime factor is accounted for, all remaining indicators
    // vanish and the sum is complete.
    if (rest == 1) break;
    if (intensity_exact(p, n) == 1) {
      ++count;
      while (rest % p == 0) rest /= p;
    }
  }
  // At most one prime factor above sqrt(n) can remain, and it is prime:
  // its single indicator term contributes one unit to the series.
  if (rest > 1) ++count;
  return count;
}

int alpha_series(std::int64_t p, std::int64_t n) {
  check_positive(n, "alpha_series");
  if (!is_prime(p)) {
    throw std::invalid_argument("alpha_series: p must be prime");
  }
  int count = 0;
  std::int64_t power = p;
  while (power <= n) {
    count += intensity_exact(power, n);
    if (power > n / p) break;  // next power would exceed n; those terms vanish
    power *= p;
  }
  return count;
}

int big_omega_series(std::int64_t n) {
  check_positive(n, "big_omega_series");
  if (n == 1) return 0;
  int total = 0;
  std::int64_t rest = n;
  for (std::int64_t p : primes_through(isqrt(n))) {
    if (p * p > n) break;
    if (rest == 1) break;
    if (intensity_exact(p, n) == 1) {
      total += alpha_series(p, n);
      while (rest % p == 0) rest /= p;
    }
  }
  if (rest > 1) total += alpha_series(rest, n);
  return total;
}

Factorization factorize_series(std::int64_t n) {
  check_positive(n, "factorize_series");
  Factorization out;
  out.n = n;
  if (n == 1) return out;
  std::int64_t rest = n;
  for (std::int64_t p : primes_through(isqrt(n))) {
    if (p * p > n) break;
    if (rest == 1) break;
    if (intensity_exact(p, n) == 1) {
      out.factors.push_back({p, alpha_series(p, n)});
      while (rest % p == 0) rest /= p;
    }
  }
  if (rest > 1) out.factors.push_back({rest, alpha_series(rest, n)});
  return out;
}

std::vector<std::int64_t> first_primes(int m) {
  if (m < 1) throw std::invalid_argument("first_primes: m must be >= 1");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(m));
  for (std::int64_t q = 2; static_cast<int>(out.size()) < m; ++q) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

}  // namespace fringe
