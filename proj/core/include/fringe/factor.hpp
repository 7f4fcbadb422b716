#pragma once

#include <cstdint>
#include <vector>

namespace fringe {

// Classical, interference-free ground truth: trial division and the sieve of
// Eratosthenes. Everything the series route produces is checked against this.

struct PrimeFactor {
  std::int64_t prime = 0;
  int exponent = 0;
  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// n = product of prime^exponent, primes strictly increasing. n = 1 has an
/// empty factor list.
struct Factorization {
  std::int64_t n = 1;
  std::vector<PrimeFactor> factors;
};

struct PrimeTable {
  std::int64_t bound = 2;
  std::vector<std::int64_t> primes;
  bool contains(std::int64_t p) const;
};

/// Trial-division primality.
bool is_prime(std::int64_t n);

/// Integer square root, floor(sqrt(n)) for n >= 0.
std::int64_t isqrt(std::int64_t n);

/// Complete factorization by trial division up to sqrt(n). Rejects n < 1.
Factorization factorize(std::int64_t n);

/// All primes <= bound by the classical marking procedure. Rejects bound < 2.
PrimeTable eratosthenes(std::int64_t bound);

/// Number of distinct prime factors.
int omega_oracle(std::int64_t n);

/// Number of prime factors counted with multiplicity.
int big_omega_oracle(std::int64_t n);

}  // namespace fringe
