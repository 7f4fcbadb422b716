#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace fringe {

/// One evaluation of the identity sum_{n>=1} 2^omega(n)/n^s = zeta(s)^2/zeta(2s).
struct ZetaCheckReport {
  double s = 0.0;
  std::int64_t n_terms = 0;
  double partial_sum = 0.0;
  double target = 0.0;
  double gap = 0.0;
};

/// Riemann zeta for s > 1: direct summation to a fixed cutoff plus an
/// Euler-Maclaurin tail. Absolute error well below 1e-12 over s in (1, inf).
double zeta(double s);

/// Deterministic fixed-block pairwise summation; the result depends only on
/// the term values, never on accumulation scheduling.
double pairwise_sum(std::span<const double> terms);

/// Partial sum of 2^omega(n)/n^s over n = 1..n_terms against the zeta target.
/// 2^omega is formed in integer arithmetic. Rejects s <= 1 and n_terms < 1.
ZetaCheckReport zeta_identity_check(double s, std::int64_t n_terms);

/// Reports at several checkpoints from a single pass over the terms.
/// Checkpoints must be positive and strictly increasing.
std::vector<ZetaCheckReport> zeta_convergence(double s,
                                              std::span<const std::int64_t> checkpoints);

}  // namespace fringe
