#pragma once

// Orchestrates the completeness proof for values of 10^x - y^2 in
// [0, bound]:
//   * x <= known_x_max is settled by brute force (known_set);
//   * even x above that are dismissed because the smallest positive value
//     2*10^{x/2} - 1 already exceeds the bound;
//   * odd x = 2u + 1 reduce to 10*(10^u)^2 - y^2 = c, whose solutions all
//     come from fundamental pairs; for each pair, t_k = +-10^u with u >= d
//     (modulus_n = 10^d) would force t_k = 0 mod 10^d while t_k mod p stays
//     inside {+-10^m mod p} -- the scan certifies that this never happens.
// A candidate with no fundamental pairs is excluded vacuously; a pair whose
// zero-hit residues meet the subgroup for every configured prime is
// inconclusive, a first-class result (the prime list must be extended).

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "a051221/exact_arith.hpp"
#include "a051221/known_values.hpp"
#include "a051221/pell_reduction.hpp"
#include "a051221/recurrence_engine.hpp"

namespace a051221 {

struct VerifierConfig {
  std::int64_t value_min = 0;
  std::int64_t value_bound = 2000;
  int known_x_max = 7;
  std::uint64_t modulus_n = 10'000;
  std::vector<std::uint64_t> prime_list = {160'001, 1'601};
  int oracle_x_limit = 37;

  // d with modulus_n = 10^d. Zero hits mod 10^d rule out t = 10^u for
  // u >= d, i.e. odd exponents x = 2u + 1 >= 2d + 1.
  int modulus_digits() const {
    std::uint64_t m = modulus_n;
    if (m < 10) return -1;
    int d = 0;
    while (m % 10 == 0) {
      m /= 10;
      ++d;
    }
    return m == 1 ? d : -1;
  }

  void validate() const;
};

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace detail

inline void VerifierConfig::validate() const {
  if (value_min < 0 || value_bound < value_min) {
    throw std::invalid_argument("config: need 0 <= value_min <= value_bound");
  }
  if (known_x_max < 0 || known_x_max > 37) {
    throw std::invalid_argument("config: known_x_max outside [0, 37]");
  }
  const int d = modulus_digits();
  if (d < 1) {
    throw std::invalid_argument("config: modulus must be a power of ten >= 10");
  }
  // Brute force covers x <= known_x_max, the recurrence covers odd
  // x >= 2d + 1, and the even-exponent bound covers even x in between; the
  // next odd exponent after known_x_max must therefore be exactly 2d + 1.
  if (known_x_max != 2 * d - 1 && known_x_max != 2 * d) {
    throw std::invalid_argument(
        "config: known_x_max must be 2d-1 or 2d for modulus 10^d (d=" +
        std::to_string(d) + "), otherwise odd exponents escape both scans");
  }
  if (prime_list.empty()) {
    throw std::invalid_argument("config: prime list must not be empty");
  }
  for (const std::uint64_t p : prime_list) {
    if (p < 3 || p % 2 == 0 || p % 5 == 0 || !detail::is_prime_u64(p)) {
      throw std::invalid_argument("config: " + std::to_string(p) +
                                  " is not an odd prime coprime to 10");
    }
  }
  if (oracle_x_limit < known_x_max || oracle_x_limit > 37) {
    throw std::invalid_argument(
        "config: oracle_x_limit outside [known_x_max, 37]");
  }
}

// Evidence that one pair admits no t_k = +-10^u with u >= d: every index
// with t_k = 0 mod modulus_n carries a residue mod prime_used that lies
// outside {+-10^m mod prime_used}. excluded = false records an inconclusive
// pair (every configured prime saw a residue inside its subgroup).
struct PairCertificate {
  FundamentalPair pair;
  std::uint64_t prime_used = 0;
  std::uint64_t joint_period = 0;
  std::uint64_t zero_hit_count = 0;
  std::vector<std::uint64_t> zero_ks;   // ascending hit indices
  std::vector<std::uint64_t> residues;  // t_k mod prime_used, ascending k
  std::uint64_t subgroup_order = 0;
  bool excluded = false;
};

struct CandidateCertificate {
  std::int64_t c = 0;
  std::vector<PairCertificate> pairs;
  bool vacuous = false;  // no fundamental pairs at all
  bool excluded = false;
};

struct VerificationReport {
  VerifierConfig config;
  std::uint64_t known_set_size = 0;
  std::uint64_t candidates_checked = 0;
  std::vector<CandidateCertificate> certificates;  // ascending c
  std::vector<FundamentalPair> fallback_pairs;     // needed a prime beyond the first

  bool complete() const {
    for (const auto& cert : certificates) {
      if (!cert.excluded) return false;
    }
    return true;
  }
};

inline PairCertificate exclude_pair(
    const FundamentalPair& pair, const VerifierConfig& config,
    std::span<const SignedPowerSubgroup> subgroups) {
  PairCertificate cert;
  cert.pair = pair;
  for (std::size_t i = 0; i < config.prime_list.size(); ++i) {
    const std::uint64_t p = config.prime_list[i];
    const JointZeroScan scan =
        joint_zero_residues(pair.a, pair.b, config.modulus_n, p);
    cert.prime_used = p;
    cert.joint_period = scan.joint_period;
    cert.zero_hit_count = scan.hits.size();
    cert.zero_ks.clear();
    cert.residues.clear();
    bool all_outside = true;
    for (const ZeroResidue& hit : scan.hits) {
      cert.zero_ks.push_back(hit.k);
      cert.residues.push_back(hit.residue);
      if (subgroups[i].contains(hit.residue)) all_outside = false;
    }
    cert.subgroup_order = subgroups[i].order;
    if (all_outside) {
      cert.excluded = true;
      return cert;
    }
  }
  cert.excluded = false;  // inconclusive with the configured primes
  return cert;
}

inline PairCertificate exclude_pair(const FundamentalPair& pair,
                                    const VerifierConfig& config) {
  std::vector<SignedPowerSubgroup> subgroups;
  subgroups.reserve(config.prime_list.size());
  for (const std::uint64_t p : config.prime_list) {
    subgroups.push_back(build_signed_subgroup(p));
  }
  return exclude_pair(pair, config, subgroups);
}

inline CandidateCertificate exclude_candidate(
    std::int64_t c, const VerifierConfig& config,
    std::span<const SignedPowerSubgroup> subgroups) {
  CandidateCertificate cert;
  cert.c = c;
  const auto pairs = fundamental_pairs(c);
  if (pairs.empty()) {
    cert.vacuous = true;
    cert.excluded = true;  // no solutions for any exponent at all
    return cert;
  }
  cert.excluded = true;
  for (const FundamentalPair& pair : pairs) {
    cert.pairs.push_back(exclude_pair(pair, config, subgroups));
    if (!cert.pairs.back().excluded) cert.excluded = false;
  }
  return cert;
}

inline CandidateCertificate exclude_candidate(std::int64_t c,
                                              const VerifierConfig& config) {
  std::vector<SignedPowerSubgroup> subgroups;
  subgroups.reserve(config.prime_list.size());
  for (const std::uint64_t p : config.prime_list) {
    subgroups.push_back(build_signed_subgroup(p));
  }
  return exclude_candidate(c, config, subgroups);
}

// Full range scan. Workers claim candidates from an atomic counter and write
// into slots indexed by candidate, so the report is byte-identical for every
// jobs value.
inline VerificationReport verify_range(const VerifierConfig& config,
                                       int jobs = 1) {
  config.validate();

  const KnownSet known = known_set(config.known_x_max, config.value_bound);

  // Even exponents above the brute-force cap never reach the bound;
  // 2*10^{x/2} - 1 is increasing, so checking the next few suffices.
  for (int x = config.known_x_max + 1; x <= config.known_x_max + 5; ++x) {
    if (x % 2 != 0) continue;
    if (even_exponent_min(x) <= static_cast<uint128>(config.value_bound)) {
      throw std::invalid_argument(
          "config: even exponent " + std::to_string(x) +
          " still reaches the value bound; raise known_x_max");
    }
  }

  std::vector<SignedPowerSubgroup> subgroups;
  subgroups.reserve(config.prime_list.size());
  for (const std::uint64_t p : config.prime_list) {
    subgroups.push_back(build_signed_subgroup(p));
  }

  std::vector<std::int64_t> candidates;
  for (std::int64_t c = config.value_min; c <= config.value_bound; ++c) {
    if (!known.contains(c)) candidates.push_back(c);
  }

  std::vector<CandidateCertificate> slots(candidates.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      slots[i] = exclude_candidate(candidates[i], config, subgroups);
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= candidates.size()) return;
        slots[i] = exclude_candidate(candidates[i], config, subgroups);
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  VerificationReport report;
  report.config = config;
  report.known_set_size = known.values.size();
  report.candidates_checked = candidates.size();
  report.certificates = std::move(slots);
  for (const auto& cert : report.certificates) {
    for (const auto& pc : cert.pairs) {
      if (!pc.excluded || pc.prime_used != config.prime_list.front()) {
        report.fallback_pairs.push_back(pc.pair);
      }
    }
  }
  return report;
}

// Independent soundness audit against the representation oracle.
struct CrossCheckViolation {
  std::int64_t c = 0;
  bool expected_present = false;            // what the report implies
  std::optional<Representation> witness;    // what the oracle found
};

struct CrossCheckResult {
  bool ok = false;
  std::vector<CrossCheckViolation> violations;
  explicit operator bool() const { return ok; }
};

// Every candidate the report excludes must have no representation up to
// oracle_x_limit; every known value must have one up to known_x_max.
inline CrossCheckResult cross_check(const VerificationReport& report,
                                    const VerifierConfig& config) {
  CrossCheckResult result;
  for (const auto& cert : report.certificates) {
    if (!cert.excluded) continue;
    if (auto rep = oracle_scan(cert.c, config.oracle_x_limit)) {
      result.violations.push_back(CrossCheckViolation{cert.c, false, rep});
    }
  }
  const KnownSet known = known_set(config.known_x_max, config.value_bound);
  for (const std::int64_t v : known.values) {
    if (!oracle_scan(v, config.known_x_max)) {
      result.violations.push_back(
          CrossCheckViolation{v, true, std::nullopt});
    }
  }
  result.ok = result.violations.empty();
  return result;
}

}  // namespace a051221
