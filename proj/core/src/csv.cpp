#include "fringe/csv.hpp"

#include <cstdio>
#include <ostream>

namespace fringe {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_profile_csv(std::ostream& os, const IntensityProfile& prof,
                       std::string_view value_column) {
  os << "x," << value_column << "\n";
  for (std::size_t i = 0; i < prof.size(); ++i) {
    os << format_g17(prof.x[i]) << "," << format_g17(prof.value[i]) << "\n";
  }
}

void write_factorization_csv(std::ostream& os, const Factorization& f) {
  os << "n,prime,exponent\n";
  for (const auto& pf : f.factors) {
    os << f.n << "," << pf.prime << "," << pf.exponent << "\n";
  }
}

void write_factor_summary_csv(std::ostream& os, const Factorization& f) {
  int omega = static_cast<int>(f.factors.size());
  int big_omega = 0;
  for (const auto& pf : f.factors) big_omega += pf.exponent;
  os << "n,omega,big_omega\n";
  os << f.n << "," << omega << "," << big_omega << "\n";
}

void write_zeta_reports_csv(std::ostream& os,
                            std::span<const ZetaCheckReport> reports) {
  os << "s,n_terms,partial_sum,target,gap\n";
  for (const auto& r : reports) {
    os << format_g17(r.s) << "," << r.n_terms << "," << format_g17(r.partial_sum)
       << "," << format_g17(r.target) << "," << format_g17(r.gap) << "\n";
  }
}

void write_arrangement_csv(std::ostream& os, const SlitArrangement& arr) {
  os << "set_index,prime,source_index,position,position_float\n";
  for (std::size_t i = 0; i < arr.positions.size(); ++i) {
    for (std::size_t k = 0; k < arr.positions[i].size(); ++k) {
      const Rational& pos = arr.positions[i][k];
      os << i << "," << arr.set_primes[i] << "," << k << "," << to_string(pos)
         << "," << format_g17(pos.value() * arr.d) << "\n";
    }
  }
}

void write_overlaps_csv(std::ostream& os, const SlitArrangement& arr,
                        std::span<const Overlap> ovl) {
  os << "position,position_float,set_indices\n";
  for (const auto& o : ovl) {
    os << to_string(o.position) << "," << format_g17(o.position.value() * arr.d)
       << ",";
    for (std::size_t i = 0; i < o.set_indices.size(); ++i) {
      if (i) os << ";";
      os << o.set_indices[i];
    }
    os << "\n";
  }
}

}  // namespace fringe
