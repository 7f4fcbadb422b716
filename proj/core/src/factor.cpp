#include "fringe/factor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fringe {

bool PrimeTable::contains(std::int64_t p) const {
  return std::binary_search(primes.begin(), primes.end(), p);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt: n must be >= 0");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while (r < 3037000499LL && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

Factorization factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization out;
  out.n = n;
  std::int64_t rest = n;
  auto strip = [&](std::int64_t p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.factors.push_back({p, e});
  };
  strip(2);
  for (std::int64_t d = 3; d * d <= rest; d += 2) strip(d);
  if (rest > 1) out.factors.push_back({rest, 1});
  return out;
}

PrimeTable eratosthenes(std::int64_t bound) {
  if (bound < 2) throw std::invalid_argument("eratosthenes: bound must be >= 2");
  std::vector<std::uint8_t> composite(static_cast<std::size_t>(bound) + 1, 0);
  // Marking stops once all primes <= sqrt(bound) have been processed.
  for (std::int64_t p = 2; p * p <= bound; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    for (std::int64_t m = p * p; m <= bound; m += p) {
      composite[static_cast<std::size_t>(m)] = 1;
    }
  }
  PrimeTable table;
  table.bound = bound;
  for (std::int64_t n = 2; n <= bound; ++n) {
    if (!composite[static_cast<std::size_t>(n)]) table.primes.push_back(n);
  }
  return table;
}

int omega_oracle(std::int64_t n) {
  return static_cast<int>(factorize(n).factors.size());
}

int big_omega_oracle(std::int64_t n) {
  int total = 0;
  for (const auto& f : factorize(n).factors) total += f.exponent;
  return total;
}

}  // namespace fringe
