// Command-line front end: figure-style CSV emission, factoring, sieving and
// the zeta identity check. Exit codes: 0 success, 1 verification mismatch,
// 2 invalid input.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fringe/csv.hpp"
#include "fringe/factor.hpp"
#include "fringe/geometry.hpp"
#include "fringe/intensity.hpp"
#include "fringe/series.hpp"
#include "fringe/sieve.hpp"
#include "fringe/zeta.hpp"

namespace {

// Output goes to --out when given, stdout otherwise.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
};

std::string format_factor_line(const fringe::Factorization& f) {
  std::ostringstream os;
  os << f.n << " = ";
  if (f.factors.empty()) {
    os << 1;
  } else {
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      if (i) os << " * ";
      os << f.factors[i].prime << "^" << f.factors[i].exponent;
    }
  }
  return os.str();
}

int run_profile(std::int64_t p, double from, double to, double step,
                const std::string& out) {
  OutputSink sink(out);
  fringe::write_profile_csv(sink.stream(), fringe::profile(p, from, to, step));
  return 0;
}

int run_omega_m(const std::vector<std::int64_t>& primes_opt, int m_opt,
                double from, double to, double step, bool zeros,
                const std::string& out) {
  std::vector<std::int64_t> primes = primes_opt;
  if (primes.empty() && m_opt > 0) primes = fringe::first_primes(m_opt);
  if (primes.empty()) {
    throw std::invalid_argument("omega-m: give --primes or --m");
  }
  fringe::OmegaPartialSum sum(primes);
  OutputSink sink(out);
  fringe::write_profile_csv(sink.stream(), fringe::omega_m_profile(sum, from, to, step),
                            "omega_m");
  if (zeros) {
    const auto zs = fringe::locate_zeros_float(sum, from, to, step);
    std::cout << "zeros:";
    for (double z : zs) std::cout << " " << static_cast<std::int64_t>(std::llround(z));
    std::cout << "\n";
  }
  return 0;
}

int run_factor(std::int64_t n, const std::string& mode, bool both) {
  const fringe::Factorization oracle = fringe::factorize(n);
  const fringe::Factorization series = fringe::factorize_series(n);
  const fringe::Factorization& shown = (mode == "oracle") ? oracle : series;

  int omega, big_omega;
  if (mode == "oracle") {
    omega = fringe::omega_oracle(n);
    big_omega = fringe::big_omega_oracle(n);
  } else {
    omega = fringe::omega_series(n);
    big_omega = fringe::big_omega_series(n);
  }

  std::cout << format_factor_line(shown) << ", omega=" << omega
            << ", Omega=" << big_omega;
  if (both) {
    const bool match = oracle.factors == series.factors &&
                       fringe::omega_series(n) == fringe::omega_oracle(n) &&
                       fringe::big_omega_series(n) == fringe::big_omega_oracle(n);
    std::cout << ", match=" << (match ? "true" : "false") << "\n";
    return match ? 0 : 1;
  }
  std::cout << "\n";
  return 0;
}

int run_sieve(std::int64_t n, const std::vector<std::int64_t>& seed, bool verify,
              bool trace, const std::string& out) {
  OutputSink sink(out);
  std::vector<std::int64_t> primes;
  if (trace) {
    sink.stream() << "n,omega_m_value\n";
    primes = fringe::sieve_to(n, seed, [&](std::int64_t k, int v) {
      sink.stream() << k << "," << v << "\n";
    });
  } else {
    primes = fringe::sieve_to(n, seed);
    for (std::int64_t p : primes) sink.stream() << p << "\n";
  }
  if (verify) {
    const auto reference = fringe::eratosthenes(n).primes;
    if (primes != reference) {
      std::cerr << "verification FAILED: interference sieve disagrees with Eratosthenes\n";
      return 1;
    }
  }
  return 0;
}

int run_zeta(double s, std::int64_t n, const std::string& out) {
  std::vector<std::int64_t> checkpoints;
  for (std::int64_t cp = 1; cp < n; cp *= 10) checkpoints.push_back(cp);
  checkpoints.push_back(n);
  const auto reports = fringe::zeta_convergence(s, checkpoints);
  OutputSink sink(out);
  fringe::write_zeta_reports_csv(sink.stream(), reports);
  return 0;
}

int run_geometry(const std::vector<std::int64_t>& primes, double d,
                 fringe::Placement placement, bool compare, double from,
                 double to, double step, const std::string& out) {
  const auto arr = fringe::build_arrangement(d, primes, placement);
  OutputSink sink(out);
  if (compare) {
    std::ostream& os = sink.stream();
    os << "x,incoherent,coherent\n";
    for (double x : fringe::detail::make_grid(from, to, step)) {
      os << fringe::format_g17(x) << ","
         << fringe::format_g17(fringe::incoherent_intensity(arr, x)) << ","
         << fringe::format_g17(fringe::coherent_intensity(arr, x)) << "\n";
    }
    return 0;
  }
  const auto ovl = fringe::overlaps(arr);
  fringe::write_arrangement_csv(sink.stream(), arr);
  sink.stream() << "\n";
  fringe::write_overlaps_csv(sink.stream(), arr, ovl);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interference-kernel prime factorization toolkit"};
  app.require_subcommand(1);
  std::function<int()> action;

  // profile
  {
    auto* cmd = app.add_subcommand("profile", "Sample the p-slit intensity curve to CSV");
    auto p = std::make_shared<std::int64_t>(2);
    auto from = std::make_shared<double>(0.0);
    auto to = std::make_shared<double>(0.0);
    auto step = std::make_shared<double>(0.0);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--p", *p, "number of slits (>= 2)")->required();
    cmd->add_option("--from", *from, "range start")->required();
    cmd->add_option("--to", *to, "range end")->required();
    cmd->add_option("--step", *step, "grid step")->required();
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &action] {
      action = [=] { return run_profile(*p, *from, *to, *step, *out); };
    });
  }

  // omega-m
  {
    auto* cmd = app.add_subcommand("omega-m", "Sample the partial sum over the first m primes");
    auto primes = std::make_shared<std::vector<std::int64_t>>();
    auto m = std::make_shared<int>(0);
    auto from = std::make_shared<double>(0.0);
    auto to = std::make_shared<double>(0.0);
    auto step = std::make_shared<double>(0.001);
    auto zeros = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--primes", *primes, "seed primes, e.g. 2,3,5")->delimiter(',');
    cmd->add_option("--m", *m, "use the first m primes instead of --primes");
    cmd->add_option("--from", *from, "range start")->required();
    cmd->add_option("--to", *to, "range end")->required();
    cmd->add_option("--step", *step, "grid step (default 0.001)");
    cmd->add_flag("--zeros", *zeros, "also print located integer zeros");
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &action] {
      action = [=] { return run_omega_m(*primes, *m, *from, *to, *step, *zeros, *out); };
    });
  }

  // factor
  {
    auto* cmd = app.add_subcommand("factor", "Factor n and report omega / Omega");
    auto n = std::make_shared<std::int64_t>(0);
    auto mode = std::make_shared<std::string>("series");
    auto both = std::make_shared<bool>(false);
    cmd->add_option("--n", *n, "integer to factor")->required();
    cmd->add_option("--mode", *mode, "series | oracle (default series)")
        ->check(CLI::IsMember({"series", "oracle"}));
    cmd->add_flag("--both", *both, "compute both paths and print a match flag");
    cmd->callback([=, &action] {
      action = [=] { return run_factor(*n, *mode, *both); };
    });
  }

  // sieve
  {
    auto* cmd = app.add_subcommand("sieve", "List primes <= N via the interference sieve");
    auto n = std::make_shared<std::int64_t>(0);
    auto seed = std::make_shared<std::vector<std::int64_t>>(std::vector<std::int64_t>{2});
    auto verify = std::make_shared<bool>(false);
    auto trace = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--n", *n, "upper bound N")->required();
    cmd->add_option("--seed", *seed, "gap-free seed primes (default 2)")->delimiter(',');
    cmd->add_flag("--verify", *verify, "cross-check against Eratosthenes; exit 1 on mismatch");
    cmd->add_flag("--trace", *trace, "emit n,omega_m_value rows instead of the prime list");
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &action] {
      action = [=] { return run_sieve(*n, *seed, *verify, *trace, *out); };
    });
  }

  // zeta
  {
    auto* cmd = app.add_subcommand("zeta", "Convergence table for the 2^omega Dirichlet identity");
    auto s = std::make_shared<double>(0.0);
    auto n = std::make_shared<std::int64_t>(0);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--s", *s, "Dirichlet exponent (> 1)")->required();
    cmd->add_option("--n", *n, "number of terms")->required();
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &action] {
      action = [=] { return run_zeta(*s, *n, *out); };
    });
  }

  // geometry
  {
    auto* cmd = app.add_subcommand("geometry", "Slit arrangement dump, overlaps and intensity comparison");
    auto primes = std::make_shared<std::vector<std::int64_t>>();
    auto d = std::make_shared<double>(1.0);
    auto placement = std::make_shared<std::string>("centered");
    auto compare = std::make_shared<bool>(false);
    auto from = std::make_shared<double>(0.0);
    auto to = std::make_shared<double>(0.0);
    auto step = std::make_shared<double>(0.0);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--primes", *primes, "set sizes, e.g. 2,3,5")->required()->delimiter(',');
    cmd->add_option("--d", *d, "segment length (default 1)");
    cmd->add_option("--placement", *placement, "centered | left (default centered)")
        ->check(CLI::IsMember({"centered", "left"}));
    cmd->add_flag("--compare", *compare, "emit x,incoherent,coherent curve instead of the dump");
    cmd->add_option("--from", *from, "comparison range start");
    cmd->add_option("--to", *to, "comparison range end");
    cmd->add_option("--step", *step, "comparison grid step");
    cmd->add_option("--out", *out, "output file (default stdout)");
    cmd->callback([=, &action] {
      action = [=] {
        const auto pl = (*placement == "left") ? fringe::Placement::left
                                               : fringe::Placement::centered;
        return run_geometry(*primes, *d, pl, *compare, *from, *to, *step, *out);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
