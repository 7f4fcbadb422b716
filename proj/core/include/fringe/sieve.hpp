#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fringe/series.hpp"

namespace fringe {

// The iterative prime-finding procedure: zeros of the partial sum on
// (p_m, p_m^2] are exactly the next consecutive primes, so each pass extends
// the known set until all primes <= sqrt(N) are in hand.

/// Immutable sieve snapshot. known_primes is the complete ordered list of
/// primes <= frontier; frontier is its last element.
struct SieveState {
  std::vector<std::int64_t> known_primes;
  std::int64_t frontier = 2;
  std::int64_t target = 2;
};

/// Observer for trace output: receives every scanned n with the partial-sum
/// value used for its zero test.
using SieveTrace = std::function<void(std::int64_t n, int omega_value)>;

/// Validates the seed (gap-free prime prefix, frontier <= target) and builds
/// the initial state.
SieveState make_sieve_state(std::vector<std::int64_t> seed, std::int64_t target);

/// One extension pass: scans n in (frontier, min(frontier^2, target)] and
/// appends every n whose partial sum over the known primes is zero. The
/// appended integers are exactly the next consecutive primes.
SieveState extend_once(const SieveState& state, const SieveTrace& trace = {});

/// Full run: extends until frontier^2 >= target, then performs the final
/// zero scan of (frontier, target] using the known primes <= sqrt(target).
/// The result is all primes <= target, identical to eratosthenes(target).
std::vector<std::int64_t> sieve_to(std::int64_t target,
                                   std::vector<std::int64_t> seed,
                                   const SieveTrace& trace = {});

/// Demonstration of the continuous picture: grid scan of the floating
/// partial sum over (lo, hi]; samples below the zero threshold are snapped
/// to the nearest integer within the snap tolerance and deduplicated.
/// Intended for figure reproduction, not for the production sieve.
std::vector<double> locate_zeros_float(const OmegaPartialSum& sum, double lo,
                                       double hi, double grid_step);

}  // namespace fringe
