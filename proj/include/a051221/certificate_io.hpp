#pragma once

// Serialization surfaces: the JSON certificate document, the b-file style
// known-value list ("index value" per line), and the plain-text exclusion
// trace for a single candidate. All output is deterministic byte-for-byte:
// integers in decimal, keys sorted, LF line endings.

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "a051221/known_values.hpp"
#include "a051221/recurrence_engine.hpp"
#include "a051221/verifier.hpp"

namespace a051221 {

// Zero hits usually fill an arithmetic progression k = offset (mod step)
// that wraps cleanly around the joint period.
struct ZeroClass {
  std::uint64_t offset = 0;
  std::uint64_t step = 0;
};

inline std::optional<ZeroClass> as_arithmetic_progression(
    const std::vector<std::uint64_t>& ks, std::uint64_t joint_period) {
  if (ks.empty()) return std::nullopt;
  if (ks.size() == 1) return ZeroClass{ks.front(), joint_period};
  const std::uint64_t step = ks[1] - ks[0];
  if (step == 0) return std::nullopt;
  for (std::size_t i = 1; i + 1 < ks.size(); ++i) {
    if (ks[i + 1] - ks[i] != step) return std::nullopt;
  }
  if (ks.front() + joint_period - ks.back() != step) return std::nullopt;
  return ZeroClass{ks.front(), step};
}

inline nlohmann::json to_json(const VerifierConfig& config) {
  return nlohmann::json{{"value_min", config.value_min},
                        {"value_bound", config.value_bound},
                        {"known_x_max", config.known_x_max},
                        {"modulus_n", config.modulus_n},
                        {"primes", config.prime_list},
                        {"oracle_x_limit", config.oracle_x_limit}};
}

inline nlohmann::json to_json(const PairCertificate& cert) {
  nlohmann::json j{{"a", cert.pair.a},
                   {"b", cert.pair.b},
                   {"prime", cert.prime_used},
                   {"joint_period", cert.joint_period},
                   {"zero_hit_count", cert.zero_hit_count},
                   {"residues", cert.residues},
                   {"subgroup_order", cert.subgroup_order},
                   {"excluded", cert.excluded}};
  if (const auto ap =
          as_arithmetic_progression(cert.zero_ks, cert.joint_period)) {
    j["zero_positions_sample"] = {{"offset", ap->offset},
                                  {"modulus", ap->step}};
  } else {
    auto sample = cert.zero_ks;
    if (sample.size() > 64) sample.resize(64);
    j["zero_positions_sample"] = sample;
  }
  return j;
}

inline nlohmann::json to_json(const CandidateCertificate& cert) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& pc : cert.pairs) pairs.push_back(to_json(pc));
  return nlohmann::json{{"c", cert.c},
                        {"vacuous", cert.vacuous},
                        {"excluded", cert.excluded},
                        {"pairs", std::move(pairs)}};
}

inline nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json candidates = nlohmann::json::array();
  for (const auto& cert : report.certificates) {
    candidates.push_back(to_json(cert));
  }
  nlohmann::json fallback = nlohmann::json::array();
  for (const auto& pair : report.fallback_pairs) {
    fallback.push_back(
        nlohmann::json{{"a", pair.a}, {"b", pair.b}, {"c", pair.c}});
  }
  return nlohmann::json{{"config", to_json(report.config)},
                        {"known_set_size", report.known_set_size},
                        {"candidates_checked", report.candidates_checked},
                        {"candidates", std::move(candidates)},
                        {"fallback_pairs", std::move(fallback)}};
}

inline void write_certificate(std::ostream& os,
                              const VerificationReport& report) {
  os << to_json(report).dump(2) << '\n';
}

// OEIS b-file convention: "index value" per line, index from 0.
inline void write_known_list(std::ostream& os, const KnownSet& known) {
  for (std::size_t i = 0; i < known.values.size(); ++i) {
    os << i << ' ' << known.values[i] << '\n';
  }
}

// Full exclusion trace for one candidate, stable across runs and platforms.
inline std::string format_example_trace(const CandidateCertificate& cert,
                                        const VerifierConfig& config) {
  std::ostringstream os;
  os << "c = " << cert.c << '\n';
  os << "fundamental pairs: " << cert.pairs.size() << '\n';
  if (cert.vacuous) {
    os << "vacuous: no fundamental pairs\n";
  }
  for (const PairCertificate& pc : cert.pairs) {
    const std::uint64_t period_n =
        sequence_period(pc.pair.a, pc.pair.b, config.modulus_n);
    const std::uint64_t period_p =
        sequence_period(pc.pair.a, pc.pair.b, pc.prime_used);
    os << "pair (" << pc.pair.a << "," << pc.pair.b << "):\n";
    os << "  t0 = " << pc.pair.b << '\n';
    os << "  t1 = " << 6 * pc.pair.a + 19 * pc.pair.b << '\n';
    os << "  period mod " << config.modulus_n << " = " << period_n << '\n';
    os << "  period mod " << pc.prime_used << " = " << period_p << '\n';
    os << "  joint period = " << pc.joint_period << '\n';
    os << "  zero hits mod " << config.modulus_n << ": " << pc.zero_hit_count;
    if (const auto ap =
            as_arithmetic_progression(pc.zero_ks, pc.joint_period)) {
      os << " at k = " << ap->offset << " (mod " << ap->step << ")";
    } else if (!pc.zero_ks.empty()) {
      os << " at k =";
      for (const std::uint64_t k : pc.zero_ks) os << ' ' << k;
    }
    os << '\n';
    os << "  residues mod " << pc.prime_used << ":";
    for (const std::uint64_t r : pc.residues) os << ' ' << r;
    if (pc.residues.empty()) os << " none";
    os << '\n';
    os << "  subgroup {+-10^m mod " << pc.prime_used
       << "}: order " << pc.subgroup_order << '\n';
    if (pc.excluded) {
      os << "  pair verdict: excluded (prime " << pc.prime_used << ")\n";
    } else {
      os << "  pair verdict: inconclusive (all configured primes exhausted)\n";
    }
  }
  os << "verdict: c = " << cert.c
     << (cert.excluded ? " excluded" : " not excluded") << '\n';
  return os.str();
}

}  // namespace a051221
