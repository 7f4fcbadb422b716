#include "fringe/intensity.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace fringe {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_p(std::int64_t p) {
  if (p < 2) throw std::invalid_argument("intensity: p must be >= 2");
}

// r = x mod p with |r| <= p/2. Both sin^2 factors are invariant under
// x -> x + p (the shift moves each argument by an integer multiple of pi),
// so the reduction is exact and removes the precision loss of evaluating
// sin(pi x) at large x.
double reduce(std::int64_t p, double x) {
  return std::remainder(x, static_cast<double>(p));
}

double clamp_unit(double v) {
  // Absorb rounding overshoot only; larger excursions would be a bug and
  // are returned as-is.
  if (v > 1.0 && v <= 1.0 + 1e-12) return 1.0;
  if (v < 0.0 && v >= -1e-12) return 0.0;
  return v;
}

}  // namespace

int intensity_exact(std::int64_t p, std::int64_t n) {
  check_p(p);
  return n % p == 0 ? 1 : 0;
}

namespace detail {

double intensity_ratio(std::int64_t p, double x) {
  check_p(p);
  const double pd = static_cast<double>(p);
  const double r = reduce(p, x);
  const double num = std::sin(kPi * r);
  const double den = pd * std::sin(kPi * r / pd);
  return clamp_unit((num * num) / (den * den));
}

double intensity_phasor(std::int64_t p, double x) {
  check_p(p);
  const double pd = static_cast<double>(p);
  const double r = reduce(p, x);
  std::complex<double> acc{0.0, 0.0};
  for (std::int64_t k = 0; k < p; ++k) {
    acc += std::polar(1.0, 2.0 * kPi * static_cast<double>(k) * r / pd);
  }
  return clamp_unit(std::norm(acc) / (pd * pd));
}

std::vector<double> make_grid(double x_min, double x_max, double step) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
    throw std::invalid_argument("grid: need finite x_min < x_max");
  }
  if (!std::isfinite(step) || !(step > 0.0)) {
    throw std::invalid_argument("grid: step must be positive");
  }
  const double span = (x_max - x_min) / step;
  auto n_steps = static_cast<std::int64_t>(std::llround(span));
  // Treat the span as an exact multiple of step when it is one up to
  // rounding; otherwise truncate and append x_max separately.
  const bool exact_multiple =
      std::abs(span - static_cast<double>(n_steps)) <= 1e-9 * std::max(1.0, span);
  if (!exact_multiple) n_steps = static_cast<std::int64_t>(std::floor(span));

  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(n_steps) + 2);
  for (std::int64_t i = 0; i <= n_steps; ++i) {
    xs.push_back(x_min + step * static_cast<double>(i));
  }
  if (exact_multiple) {
    xs.back() = x_max;
  } else {
    xs.push_back(x_max);
  }
  return xs;
}

}  // namespace detail

double intensity_float(std::int64_t p, double x, const EvalConfig& cfg) {
  check_p(p);
  cfg.validate();
  if (!std::isfinite(x)) {
    throw std::invalid_argument("intensity_float: x must be finite");
  }
  const double r = reduce(p, x);
  if (std::abs(r) < cfg.singularity_window * static_cast<double>(p)) {
    return detail::intensity_phasor(p, r);
  }
  return detail::intensity_ratio(p, r);
}

IntensityProfile profile(std::int64_t p, double x_min, double x_max,
                         double step, const EvalConfig& cfg) {
  check_p(p);
  cfg.validate();
  IntensityProfile out;
  out.x = detail::make_grid(x_min, x_max, step);
  out.value.reserve(out.x.size());
  for (double x : out.x) out.value.push_back(intensity_float(p, x, cfg));
  return out;
}

}  // namespace fringe
