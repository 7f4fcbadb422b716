#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "fringe/factor.hpp"
#include "fringe/geometry.hpp"
#include "fringe/intensity.hpp"
#include "fringe/zeta.hpp"

namespace fringe {

/// 17 significant digits, round-trip safe for double.
std::string format_g17(double v);

/// Header `x,<value_column>` then one row per sample.
void write_profile_csv(std::ostream& os, const IntensityProfile& prof,
                       std::string_view value_column = "intensity");

/// Header `n,prime,exponent`, one row per factor.
void write_factorization_csv(std::ostream& os, const Factorization& f);

/// Header `n,omega,big_omega` and a single summary row.
void write_factor_summary_csv(std::ostream& os, const Factorization& f);

/// Header `s,n_terms,partial_sum,target,gap`, one row per report.
void write_zeta_reports_csv(std::ostream& os,
                            std::span<const ZetaCheckReport> reports);

/// Header `set_index,prime,source_index,position,position_float`; position
/// is the exact fraction of d as num/den, position_float the coordinate.
void write_arrangement_csv(std::ostream& os, const SlitArrangement& arr);

/// Header `position,position_float,set_indices`; set indices joined by ';'.
void write_overlaps_csv(std::ostream& os, const SlitArrangement& arr,
                        std::span<const Overlap> ovl);

}  // namespace fringe
