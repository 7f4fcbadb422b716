#pragma once

#include <cstdint>
#include <stdexcept>

namespace fringe {

/// Tolerances governing floating-point evaluation of the intensity kernels.
struct EvalConfig {
  /// Half-width of the window around a vanishing denominator, in units of
  /// x/p. Inside the window evaluation switches to the phasor sum.
  double singularity_window = 1e-6;
  /// Below this a floating intensity value counts as zero.
  double zero_threshold = 1e-9;
  /// Maximum distance at which a real sample is classified as an integer.
  double integer_snap = 1e-9;

  void validate() const {
    if (!(singularity_window > 0.0) || !(zero_threshold > 0.0) ||
        !(integer_snap > 0.0)) {
      throw std::invalid_argument(
          "EvalConfig: all tolerances must be strictly positive");
    }
  }

  // A unit term of the partial sum can be as small as 1/p_max^2 at a
  // divisible integer; the zero test is meaningful only below that.
  void validate_for_max_prime(std::int64_t p_max) const {
    validate();
    const double unit = 1.0 / (static_cast<double>(p_max) * static_cast<double>(p_max));
    if (!(zero_threshold < unit)) {
      throw std::invalid_argument(
          "EvalConfig: zero_threshold must be below 1/p_max^2");
    }
  }
};

}  // namespace fringe
