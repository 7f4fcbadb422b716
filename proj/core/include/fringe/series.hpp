#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fringe/eval_config.hpp"
#include "fringe/factor.hpp"
#include "fringe/intensity.hpp"

namespace fringe {

/// Throws unless `primes` is a gap-free prefix of the prime sequence
/// starting at 2 ({2}, {2,3}, {2,3,5}, ...).
void require_prime_prefix(std::span<const std::int64_t> primes);

/// The seed set {2, 3, ..., p_m} of the partial sum, plus the evaluation
/// config. Construction validates the gap-free invariant and that the zero
/// threshold is meaningful for the largest prime.
class OmegaPartialSum {
 public:
  explicit OmegaPartialSum(std::vector<std::int64_t> primes, EvalConfig cfg = {});

  const std::vector<std::int64_t>& primes() const { return primes_; }
  const EvalConfig& config() const { return cfg_; }
  std::int64_t max_prime() const { return primes_.back(); }
  int m() const { return static_cast<int>(primes_.size()); }

 private:
  std::vector<std::int64_t> primes_;
  EvalConfig cfg_;
};

/// Floating partial sum: sum of intensity_float over the seed primes.
/// At integers n in [2, p_m] this equals the true number of distinct prime
/// factors; on (p_m, p_m^2] it vanishes exactly at primes.
double omega_m_float(const OmegaPartialSum& sum, double x);

/// Integer partial sum: count of listed primes dividing n. n = 0 gives the
/// full count m (all indicators are 1 there).
int omega_m_exact(std::span<const std::int64_t> primes, std::int64_t n);

/// Samples omega_m_float on the closed grid; same gridding as profile().
IntensityProfile omega_m_profile(const OmegaPartialSum& sum, double x_min,
                                 double x_max, double step);

/// omega(n): number of distinct prime factors, evaluated as the sum of
/// divisibility indicators over the primes. Indicators for primes > n all
/// vanish, so the truncation at n is exact. Rejects n < 1.
int omega_series(std::int64_t n);

/// alpha_p(n): exponent of the prime p in n, as the sum of indicators over
/// p, p^2, ..., p^J with J = floor(log_p n). Rejects composite p and n < 1.
int alpha_series(std::int64_t p, std::int64_t n);

/// Omega(n): total number of prime factors with multiplicity, as the double
/// sum of alpha over the primes dividing n. Rejects n < 1.
int big_omega_series(std::int64_t n);

/// Factorization assembled entirely from the series route: primes located by
/// their indicators, exponents by alpha_series.
Factorization factorize_series(std::int64_t n);

/// The first m primes {2, 3, 5, ...}, m >= 1.
std::vector<std::int64_t> first_primes(int m);

}  // namespace fringe
