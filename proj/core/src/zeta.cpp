#include "fringe/zeta.hpp"

#include <cmath>
#include <stdexcept>

#include "fringe/series.hpp"

namespace fringe {

double zeta(double s) {
  if (!(s > 1.0)) throw std::invalid_argument("zeta: requires s > 1");
  constexpr int kCutoff = 64;
  const double m = static_cast<double>(kCutoff);
  double sum = 0.0;
  for (int n = 1; n < kCutoff; ++n) sum += std::pow(static_cast<double>(n), -s);
  // Euler-Maclaurin tail: integral term, half sample, and B_{2k} corrections
  // B_{2k}/(2k)! * s(s+1)...(s+2k-2) * m^{-(s+2k-1)}.
  sum += std::pow(m, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(m, -s);
  constexpr double kBernoulliOverFactorial[] = {
      1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0,
      1.0 / 47900160.0};
  double rising = s;
  double mpow = std::pow(m, -s - 1.0);
  for (int k = 0; k < 5; ++k) {
    sum += kBernoulliOverFactorial[k] * rising * mpow;
    rising *= (s + 2 * k + 1) * (s + 2 * k + 2);
    mpow /= m * m;
  }
  return sum;
}

double pairwise_sum(std::span<const double> terms) {
  if (terms.size() <= 32) {
    double acc = 0.0;
    for (double t : terms) acc += t;
    return acc;
  }
  const std::size_t half = terms.size() / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

std::vector<ZetaCheckReport> zeta_convergence(double s,
                                              std::span<const std::int64_t> checkpoints) {
  if (!(s > 1.0)) {
    throw std::invalid_argument("zeta_convergence: requires s > 1 (the sum diverges otherwise)");
  }
  if (checkpoints.empty()) {
    throw std::invalid_argument("zeta_convergence: need at least one checkpoint");
  }
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 1 || (i > 0 && checkpoints[i] <= checkpoints[i - 1])) {
      throw std::invalid_argument("zeta_convergence: checkpoints must be positive and strictly increasing");
    }
  }

  const std::int64_t n_max = checkpoints.back();
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const auto weight = static_cast<double>(std::int64_t{1} << omega_series(n));
    terms.push_back(weight * std::pow(static_cast<double>(n), -s));
  }

  const double target = zeta(s) * zeta(s) / zeta(2.0 * s);
  std::vector<ZetaCheckReport> out;
  out.reserve(checkpoints.size());
  for (std::int64_t cp : checkpoints) {
    ZetaCheckReport rep;
    rep.s = s;
    rep.n_terms = cp;
    rep.partial_sum = pairwise_sum(
        std::span<const double>(terms.data(), static_cast<std::size_t>(cp)));
    rep.target = target;
    rep.gap = std::abs(rep.partial_sum - rep.target);
    out.push_back(rep);
  }
  return out;
}

ZetaCheckReport zeta_identity_check(double s, std::int64_t n_terms) {
  if (n_terms < 1) {
    throw std::invalid_argument("zeta_identity_check: n_terms must be >= 1");
  }
  const std::int64_t cps[] = {n_terms};
  return zeta_convergence(s, cps).front();
}

}  // namespace fringe
