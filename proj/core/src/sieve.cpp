#include "fringe/sieve.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace fringe {

namespace {

// Early-exit form of the zero test: the partial sum over `primes` vanishes
// at n iff no listed prime <= prime_limit divides n. Equivalent to
// omega_m_exact(...) == 0 when prime_limit covers every possible factor.
bool any_divides(std::span<const std::int64_t> primes, std::int64_t n,
                 std::int64_t prime_limit) {
  for (std::int64_t p : primes) {
    if (p > prime_limit) break;
    if (n % p == 0) return true;
  }
  return false;
}

void check_state(const SieveState& state) {
  require_prime_prefix(state.known_primes);
  if (state.frontier != state.known_primes.back()) {
    throw std::invalid_argument("SieveState: frontier must equal the last known prime");
  }
  if (state.target < state.frontier) {
    throw std::invalid_argument("SieveState: target below frontier");
  }
}

// min(frontier^2, target) without overflow.
std::int64_t scan_upper(std::int64_t frontier, std::int64_t target) {
  if (frontier > target / frontier) return target;
  return std::min(frontier * frontier, target);
}

}  // namespace

SieveState make_sieve_state(std::vector<std::int64_t> seed, std::int64_t target) {
  SieveState state;
  state.known_primes = std::move(seed);
  state.target = target;
  require_prime_prefix(state.known_primes);
  state.frontier = state.known_primes.back();
  if (target < state.frontier) {
    throw std::invalid_argument("sieve: target below seed frontier");
  }
  return state;
}

SieveState extend_once(const SieveState& state, const SieveTrace& trace) {
  check_state(state);
  const std::int64_t hi = scan_upper(state.frontier, state.target);
  SieveState next = state;
  for (std::int64_t n = state.frontier + 1; n <= hi; ++n) {
    bool zero;
    if (trace) {
      const int v = omega_m_exact(state.known_primes, n);
      trace(n, v);
      zero = v == 0;
    } else {
      zero = !any_divides(state.known_primes, n, state.frontier);
    }
    if (zero) {
      next.known_primes.push_back(n);
      next.frontier = n;
    }
  }
  return next;
}

std::vector<std::int64_t> sieve_to(std::int64_t target,
                                   std::vector<std::int64_t> seed,
                                   const SieveTrace& trace) {
  if (target < 2) throw std::invalid_argument("sieve_to: target must be >= 2");
  SieveState state = make_sieve_state(std::move(seed), target);
  while (state.frontier <= (target - 1) / state.frontier) {
    state = extend_once(state, trace);
  }
  // frontier^2 >= target now, so the known primes <= sqrt(target) witness
  // every composite in the remaining interval.
  const std::int64_t root = isqrt(target);
  std::size_t root_count = 0;
  while (root_count < state.known_primes.size() &&
         state.known_primes[root_count] <= root) {
    ++root_count;
  }
  const std::span<const std::int64_t> small(state.known_primes.data(), root_count);

  std::vector<std::int64_t> out = state.known_primes;
  for (std::int64_t n = state.frontier + 1; n <= target; ++n) {
    bool zero;
    if (trace) {
      const int v = omega_m_exact(small, n);
      trace(n, v);
      zero = v == 0;
    } else {
      zero = !any_divides(small, n, root);
    }
    if (zero) out.push_back(n);
  }
  return out;
}

std::vector<double> locate_zeros_float(const OmegaPartialSum& sum, double lo,
                                       double hi, double grid_step) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw std::invalid_argument("locate_zeros_float: need finite lo < hi");
  }
  if (!std::isfinite(grid_step) || !(grid_step > 0.0)) {
    throw std::invalid_argument("locate_zeros_float: grid_step must be positive");
  }
  const EvalConfig& cfg = sum.config();
  std::vector<double> zeros;
  for (std::int64_t i = 0;; ++i) {
    const double x = lo + grid_step * static_cast<double>(i);
    if (x > hi + grid_step * 1e-9) break;
    if (omega_m_float(sum, x) >= cfg.zero_threshold) continue;
    const double snapped = std::round(x);
    if (std::abs(x - snapped) > cfg.integer_snap) continue;
    if (!(snapped > lo && snapped <= hi)) continue;
    if (zeros.empty() || zeros.back() != snapped) zeros.push_back(snapped);
  }
  return zeros;
}

}  // namespace fringe
