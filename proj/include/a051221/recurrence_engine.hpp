#pragma once

// The t-component of (a + b*sqrt(10)) * (19 + 6*sqrt(10))^k satisfies the
// closed recurrence
//   t_0 = b,  t_1 = 6a + 19b,  t_{k+2} = 38*t_{k+1} - t_k.
// Its companion matrix has determinant 1, so the sequence is purely periodic
// modulo every modulus: one period covers all k in Z, negative indices
// included. This header finds periods, zero hits, and the residues of zero
// hits modulo a second modulus in a single streaming pass.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "a051221/exact_arith.hpp"

namespace a051221 {

namespace detail {

struct RecurrenceState {
  std::uint64_t m = 0;
  std::uint64_t t0 = 0;  // t_k
  std::uint64_t t1 = 0;  // t_{k+1}

  void step() {
    const std::uint64_t next = (38 * t1 % m + m - t0) % m;
    t0 = t1;
    t1 = next;
  }
};

inline std::uint64_t reduce_seed(std::int64_t v, std::uint64_t m) {
  const auto sm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((v % sm) + sm) % sm);
}

inline RecurrenceState initial_state(std::int64_t a, std::int64_t b,
                                     std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("recurrence: modulus must be >= 2");
  if (m > (~std::uint64_t{0} - 1) / 38) {
    throw std::invalid_argument("recurrence: modulus too large for 64-bit");
  }
  RecurrenceState st;
  st.m = m;
  st.t0 = reduce_seed(b, m);
  st.t1 = (6 * reduce_seed(a, m) + 19 * st.t0) % m;
  return st;
}

}  // namespace detail

// t_k mod modulus over exactly one period.
struct ResidueSequence {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::uint64_t modulus = 0;
  std::uint64_t period = 0;
  std::vector<std::uint64_t> values;  // values[k] = t_k mod modulus
};

// Least period of (a, b) mod m, detected as the first return of the state
// pair (t_k, t_{k+1}); streaming, no storage. The state space caps any
// period at m^2, well under the defensive 16*m^2 iteration guard.
inline std::uint64_t sequence_period(std::int64_t a, std::int64_t b,
                                     std::uint64_t m) {
  auto st = detail::initial_state(a, b, m);
  const std::uint64_t t0 = st.t0;
  const std::uint64_t t1 = st.t1;
  const uint128 cap = uint128{16} * m * m;
  uint128 steps = 0;
  do {
    st.step();
    if (++steps > cap) {
      throw std::runtime_error("sequence_period: iteration cap exceeded");
    }
  } while (st.t0 != t0 || st.t1 != t1);
  return static_cast<std::uint64_t>(steps);
}

inline ResidueSequence sequence_mod(std::int64_t a, std::int64_t b,
                                    std::uint64_t m) {
  auto st = detail::initial_state(a, b, m);
  const std::uint64_t t0 = st.t0;
  const std::uint64_t t1 = st.t1;

  ResidueSequence seq;
  seq.a = a;
  seq.b = b;
  seq.modulus = m;
  const uint128 cap = uint128{16} * m * m;
  do {
    seq.values.push_back(st.t0);
    st.step();
    if (seq.values.size() > cap) {
      throw std::runtime_error("sequence_mod: iteration cap exceeded");
    }
  } while (st.t0 != t0 || st.t1 != t1);
  seq.period = seq.values.size();
  return seq;
}

// Indices k in [0, period) with t_k = 0 mod the sequence modulus.
struct ZeroHitProfile {
  std::uint64_t modulus_n = 0;
  std::uint64_t period_n = 0;
  std::vector<std::uint64_t> zero_positions;  // ascending
};

inline ZeroHitProfile zero_positions(const ResidueSequence& seq) {
  ZeroHitProfile profile;
  profile.modulus_n = seq.modulus;
  profile.period_n = seq.period;
  for (std::uint64_t k = 0; k < seq.values.size(); ++k) {
    if (seq.values[k] == 0) profile.zero_positions.push_back(k);
  }
  return profile;
}

struct ZeroResidue {
  std::uint64_t k = 0;        // index with t_k = 0 mod n
  std::uint64_t residue = 0;  // t_k mod p
  friend constexpr bool operator==(const ZeroResidue&,
                                   const ZeroResidue&) = default;
};

struct JointZeroScan {
  std::uint64_t period_n = 0;
  std::uint64_t period_p = 0;
  std::uint64_t joint_period = 0;  // lcm(period_n, period_p)
  std::vector<ZeroResidue> hits;   // ascending k over one joint period
};

// One streaming pass over the joint period, holding only the two state
// pairs; emits (k, t_k mod p) for every k with t_k = 0 mod n.
inline JointZeroScan joint_zero_residues(std::int64_t a, std::int64_t b,
                                         std::uint64_t n, std::uint64_t p) {
  JointZeroScan scan;
  scan.period_n = sequence_period(a, b, n);
  scan.period_p = sequence_period(a, b, p);
  const std::uint64_t g = std::gcd(scan.period_n, scan.period_p);
  const uint128 joint = uint128{scan.period_n} / g * scan.period_p;
  if (joint > (uint128{1} << 62)) {
    throw std::runtime_error("joint_zero_residues: joint period too large");
  }
  scan.joint_period = static_cast<std::uint64_t>(joint);

  auto st_n = detail::initial_state(a, b, n);
  auto st_p = detail::initial_state(a, b, p);
  for (std::uint64_t k = 0; k < scan.joint_period; ++k) {
    if (st_n.t0 == 0) scan.hits.push_back(ZeroResidue{k, st_p.t0});
    st_n.step();
    st_p.step();
  }
  return scan;
}

}  // namespace a051221
