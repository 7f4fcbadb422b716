#include "fringe/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <stdexcept>

#include "fringe/factor.hpp"
#include "fringe/intensity.hpp"

namespace fringe {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string to_string(const Rational& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::int64_t SlitArrangement::total_sources() const {
  std::int64_t total = 0;
  for (std::int64_t p : set_primes) total += p;
  return total;
}

SlitArrangement build_arrangement(double d, std::vector<std::int64_t> primes,
                                  Placement placement) {
  if (!std::isfinite(d) || !(d > 0.0)) {
    throw std::invalid_argument("build_arrangement: d must be positive");
  }
  if (primes.empty()) {
    throw std::invalid_argument("build_arrangement: need at least one prime");
  }
  std::sort(primes.begin(), primes.end());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i])) {
      throw std::invalid_argument("build_arrangement: set sizes must be prime");
    }
    if (i > 0 && primes[i] == primes[i - 1]) {
      throw std::invalid_argument("build_arrangement: duplicate prime");
    }
  }

  SlitArrangement arr;
  arr.d = d;
  arr.placement = placement;
  arr.set_primes = std::move(primes);
  arr.positions.reserve(arr.set_primes.size());
  for (std::int64_t p : arr.set_primes) {
    std::vector<Rational> set;
    set.reserve(static_cast<std::size_t>(p));
    for (std::int64_t k = 0; k < p; ++k) {
      // Spacing is 1/p of the segment either way; only the anchor differs.
      if (placement == Placement::centered) {
        set.emplace_back(2 * k + 1, 2 * p);
      } else {
        set.emplace_back(k, p);
      }
    }
    arr.positions.push_back(std::move(set));
  }
  return arr;
}

std::vector<Overlap> overlaps(const SlitArrangement& arr) {
  std::map<Rational, std::vector<int>> at;
  for (std::size_t i = 0; i < arr.positions.size(); ++i) {
    for (const Rational& pos : arr.positions[i]) {
      at[pos].push_back(static_cast<int>(i));
    }
  }
  std::vector<Overlap> out;
  for (auto& [pos, sets] : at) {
    if (sets.size() >= 2) out.push_back({pos, std::move(sets)});
  }
  return out;
}

double incoherent_intensity(const SlitArrangement& arr, double x,
                            const EvalConfig& cfg) {
  double acc = 0.0;
  for (std::int64_t p : arr.set_primes) acc += intensity_float(p, x, cfg);
  return acc;
}

double coherent_intensity(const SlitArrangement& arr, double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("coherent_intensity: x must be finite");
  }
  std::complex<double> acc{0.0, 0.0};
  for (const auto& set : arr.positions) {
    for (const Rational& pos : set) {
      acc += std::polar(1.0, 2.0 * kPi * x * pos.value());
    }
  }
  const auto total = static_cast<double>(arr.total_sources());
  return std::norm(acc) / (total * total);
}

}  // namespace fringe
