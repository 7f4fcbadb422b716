#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fringe/eval_config.hpp"

namespace fringe {

// Normalized intensity of p equally spaced coherent narrow slits, in the
// rescaled coordinate where the pattern has period p:
//
//   I_p(x) = sin^2(pi x) / (p^2 sin^2(pi x / p))
//
// At integers this is the divisibility indicator: 1 when p | n, else 0.
// The kernel is defined for any integer p >= 2 (prime powers are needed for
// the exponent series), not just primes.

/// Indicator path: 1 when p divides n, else 0. Pure modular arithmetic,
/// no trigonometry. Divisibility of 0 counts (every p divides 0).
int intensity_exact(std::int64_t p, std::int64_t n);

/// Floating path. The argument is range-reduced to r = x mod p with
/// |r| <= p/2, which is exact and keeps sin arguments small. Within
/// cfg.singularity_window * p of a multiple of p the mathematically
/// identical phasor sum (1/p^2) |sum_k exp(2 pi i k x / p)|^2 takes over;
/// it is finite through the removable singularity. The result is clamped
/// to [0, 1] against rounding overshoot below 1e-12 only.
double intensity_float(std::int64_t p, double x, const EvalConfig& cfg = {});

/// A sampled curve, ready for CSV emission.
struct IntensityProfile {
  std::vector<double> x;
  std::vector<double> value;
  std::size_t size() const { return x.size(); }
};

/// Samples intensity_float on the closed grid x_min + i*step. Both endpoints
/// are always included; when the span is not a multiple of step, x_max is
/// appended as the final sample.
IntensityProfile profile(std::int64_t p, double x_min, double x_max,
                         double step, const EvalConfig& cfg = {});

namespace detail {

// The two evaluation routes, exposed for cross-checking. Each reduces its
// argument internally.
double intensity_ratio(std::int64_t p, double x);
double intensity_phasor(std::int64_t p, double x);

// Closed sampling grid shared by the profile builders.
std::vector<double> make_grid(double x_min, double x_max, double step);

}  // namespace detail

}  // namespace fringe
