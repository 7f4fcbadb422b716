#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fringe/eval_config.hpp"

namespace fringe {

/// Reduced fraction with positive denominator. Comparison and equality are
/// exact (integer cross-multiplication at construction scale).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

std::string to_string(const Rational& r);  // "num/den"

/// How the p sources of one set sit on the segment. Centered placement puts
/// them symmetric about the midpoint (fractions (2k+1)/(2p)), so every odd
/// set occupies the midpoint; left placement anchors the first source at 0
/// (fractions k/p), so all sets share the left end instead.
enum class Placement { centered, left };

/// m sets of p_i sources on a segment of length d, set i with spacing d/p_i.
/// Positions are stored as exact fractions of d, so the overlap structure is
/// independent of the value of d by construction.
struct SlitArrangement {
  double d = 1.0;
  Placement placement = Placement::centered;
  std::vector<std::int64_t> set_primes;          // ascending
  std::vector<std::vector<Rational>> positions;  // per set, fraction of d in [0, 1)

  std::int64_t total_sources() const;
};

/// Builds per-set positions under the given placement; sets ordered by prime,
/// sources by coordinate. Rejects d <= 0, duplicates and non-primes.
SlitArrangement build_arrangement(double d, std::vector<std::int64_t> primes,
                                  Placement placement = Placement::centered);

/// A coordinate occupied by sources of two or more sets.
struct Overlap {
  Rational position;             // fraction of d
  std::vector<int> set_indices;  // ascending, size >= 2
};

/// Every shared coordinate, found by exact rational comparison. No floating
/// equality is involved.
std::vector<Overlap> overlaps(const SlitArrangement& arr);

/// Incoherent superposition: intensities of the sets add with no cross
/// terms. Identical to the floating partial sum over the same primes.
double incoherent_intensity(const SlitArrangement& arr, double x,
                            const EvalConfig& cfg = {});

/// Fully coherent superposition under a single common illumination: the unit
/// phasors of ALL sources add before squaring. A source at fraction f of the
/// segment contributes phase 2*pi*x*f; the squared modulus is divided by the
/// squared total source count so x = 0 evaluates to 1.
double coherent_intensity(const SlitArrangement& arr, double x);

}  // namespace fringe
