// Command-line front end: full-range verification with JSON certificates,
// single-candidate traces, the known-value list, and the representation
// oracle.
//
// Exit codes: 0 complete proof / success, 2 inconclusive candidates present,
// 3 invalid configuration, 4 internal invariant violation.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "a051221/certificate_io.hpp"
#include "a051221/exact_arith.hpp"
#include "a051221/known_values.hpp"
#include "a051221/verifier.hpp"

namespace {

constexpr int kExitComplete = 0;
constexpr int kExitInconclusive = 2;
constexpr int kExitInvalidConfig = 3;
constexpr int kExitInternalError = 4;

struct VerifyOptions {
  a051221::VerifierConfig config;
  int jobs = 1;
  bool quiet = false;
  std::string out_path;
};

int run_verify(const VerifyOptions& opt) {
  const auto report = a051221::verify_range(opt.config, opt.jobs);
  const auto audit = a051221::cross_check(report, opt.config);

  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << opt.out_path << " for writing\n";
      return kExitInvalidConfig;
    }
    a051221::write_certificate(out, report);
  }

  std::uint64_t excluded = 0;
  std::uint64_t vacuous = 0;
  for (const auto& cert : report.certificates) {
    if (cert.excluded) ++excluded;
    if (cert.vacuous) ++vacuous;
  }
  if (!opt.quiet) {
    std::ostringstream line;
    line << "checked " << report.candidates_checked << " candidates in ["
         << opt.config.value_min << "," << opt.config.value_bound
         << "]: " << excluded << " excluded (" << vacuous << " vacuous)";
    line << "; fallback pairs:";
    if (report.fallback_pairs.empty()) {
      line << " none";
    } else {
      for (const auto& pair : report.fallback_pairs) {
        line << " (" << pair.a << "," << pair.b << ")";
      }
    }
    line << "; cross-check: " << (audit.ok ? "ok" : "FAILED");
    std::cout << line.str() << '\n';
  }

  if (!audit.ok) {
    for (const auto& v : audit.violations) {
      std::cerr << "cross-check violation: c=" << v.c;
      if (v.witness) {
        std::cerr << " has representation 10^" << v.witness->x << " - "
                  << v.witness->y << "^2 despite exclusion\n";
      } else {
        std::cerr << " is in the known set but the oracle finds no witness\n";
      }
    }
    return kExitInternalError;
  }
  return report.complete() ? kExitComplete : kExitInconclusive;
}

int run_example(std::int64_t c, const a051221::VerifierConfig& config) {
  config.validate();
  if (c < 0 || c > config.value_bound) {
    std::cerr << "error: c outside [0," << config.value_bound << "]\n";
    return kExitInvalidConfig;
  }
  const auto known = a051221::known_set(config.known_x_max, config.value_bound);
  if (known.contains(c)) {
    const auto rep = a051221::oracle_scan(c, config.known_x_max);
    std::cerr << "error: c = " << c << " is in the known set";
    if (rep) {
      std::cerr << " (10^" << rep->x << " - " << rep->y << "^2 = " << c << ")";
    }
    std::cerr << "; nothing to exclude\n";
    return kExitInvalidConfig;
  }
  const auto cert = a051221::exclude_candidate(c, config);
  std::cout << a051221::format_example_trace(cert, config);
  return cert.excluded ? kExitComplete : kExitInconclusive;
}

int run_known(int x_max, std::int64_t bound, const std::string& out_path) {
  const auto known = a051221::known_set(x_max, bound);
  if (out_path.empty()) {
    a051221::write_known_list(std::cout, known);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return kExitInvalidConfig;
    }
    a051221::write_known_list(out, known);
  }
  return kExitComplete;
}

int run_oracle_check(std::int64_t c_lo, std::int64_t c_hi, int x_max) {
  for (std::int64_t c = c_lo; c <= c_hi; ++c) {
    const auto rep = a051221::oracle_scan(c, x_max);
    if (rep) {
      std::cout << "c=" << c << ": 10^" << rep->x << " - " << rep->y
                << "^2 = " << c << '\n';
    } else {
      std::cout << "c=" << c << ": no representation with x <= " << x_max
                << '\n';
    }
  }
  return kExitComplete;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification tool for values of 10^x - y^2 in [0, bound]"};
  app.require_subcommand(1);

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand(
      "verify", "run the full range verification and cross-check");
  verify->add_option("--min", verify_opt.config.value_min,
                     "candidate range lower end");
  verify->add_option("--max", verify_opt.config.value_bound,
                     "candidate range upper end (inclusive)");
  verify->add_option("--x-max", verify_opt.config.known_x_max,
                     "exponent cap for the brute-force known set");
  verify->add_option("--modulus", verify_opt.config.modulus_n,
                     "power-of-ten zero-hit modulus");
  verify
      ->add_option("--primes", verify_opt.config.prime_list,
                   "comma-separated exclusion primes, tried in order")
      ->delimiter(',');
  verify->add_option("--oracle-x-max", verify_opt.config.oracle_x_limit,
                     "exponent cap for the cross-check oracle");
  verify->add_option("--out", verify_opt.out_path,
                     "write the JSON certificate document here");
  verify->add_option("--jobs", verify_opt.jobs, "worker thread count")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--quiet", verify_opt.quiet, "suppress the summary line");

  std::int64_t example_c = 0;
  a051221::VerifierConfig example_config;
  auto* example = app.add_subcommand(
      "example", "print the full exclusion trace for one candidate");
  example->add_option("--c", example_c, "candidate value")->required();
  example->add_option("--modulus", example_config.modulus_n,
                      "power-of-ten zero-hit modulus");
  example
      ->add_option("--primes", example_config.prime_list,
                   "comma-separated exclusion primes, tried in order")
      ->delimiter(',');
  example->add_option("--x-max", example_config.known_x_max,
                      "exponent cap for the known set");
  example->add_option("--max", example_config.value_bound,
                      "value bound defining the candidate range");

  int known_x_max = 7;
  std::int64_t known_bound = 2000;
  std::string known_out;
  auto* known = app.add_subcommand(
      "known", "emit the known values as an OEIS-style b-file list");
  known->add_option("--x-max", known_x_max, "exponent cap");
  known->add_option("--max", known_bound, "value bound (inclusive)");
  known->add_option("--out", known_out, "output path (default stdout)");

  std::int64_t oracle_c = -1;
  std::int64_t oracle_min = -1;
  std::int64_t oracle_max = -1;
  int oracle_x_max = 37;
  auto* oracle = app.add_subcommand(
      "oracle-check", "scan for representations 10^x - y^2 = c directly");
  auto* oracle_c_opt =
      oracle->add_option("--c", oracle_c, "single candidate value");
  oracle->add_option("--min", oracle_min, "candidate range lower end")
      ->excludes(oracle_c_opt);
  oracle->add_option("--max", oracle_max, "candidate range upper end")
      ->excludes(oracle_c_opt);
  oracle->add_option("--x-max", oracle_x_max, "exponent cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitComplete : kExitInvalidConfig;
  }

  try {
    if (verify->parsed()) return run_verify(verify_opt);
    if (example->parsed()) return run_example(example_c, example_config);
    if (known->parsed()) return run_known(known_x_max, known_bound, known_out);
    if (oracle->parsed()) {
      std::int64_t lo = oracle_c;
      std::int64_t hi = oracle_c;
      if (oracle_c < 0) {
        if (oracle_min < 0 || oracle_max < oracle_min) {
          std::cerr << "error: oracle-check needs --c or --min/--max\n";
          return kExitInvalidConfig;
        }
        lo = oracle_min;
        hi = oracle_max;
      }
      return run_oracle_check(lo, hi, oracle_x_max);
    }
    return kExitInvalidConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
}
