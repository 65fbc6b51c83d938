#pragma once

// Solutions of 10*t^2 - s^2 = c form unit orbits in Z[sqrt(10)]: multiplying
// s + t*sqrt(10) by the fundamental unit 19 + 6*sqrt(10) walks along the
// hyperbola. Every orbit passes exactly once through the bounded box
//   sqrt(c)*(-3 + sqrt(10)) <= a + b*sqrt(10) <= sqrt(c)*(3 + sqrt(10)),
// which pins down finitely many fundamental pairs (a, b) per c. This header
// enumerates the box and reduces arbitrary solutions into it, all in exact
// arithmetic.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "a051221/exact_arith.hpp"

namespace a051221 {

// A canonical box solution: 10*b^2 - a^2 = c with a >= 0, b >= 1,
// a^2 <= 9c and b^2 <= c <= 10*b^2.
struct FundamentalPair {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  friend constexpr auto operator<=>(const FundamentalPair&,
                                    const FundamentalPair&) = default;
};

// All fundamental pairs of c, ascending in b. Empty means 10*t^2 - s^2 = c
// has no integer solutions at all.
inline std::vector<FundamentalPair> fundamental_pairs(std::int64_t c) {
  if (c < 1) throw std::domain_error("fundamental_pairs: c must be >= 1");
  std::vector<FundamentalPair> pairs;
  const auto b_hi = static_cast<std::int64_t>(isqrt(c));
  for (std::int64_t b = 1; b <= b_hi; ++b) {
    const int128 n = int128{10} * b * b - c;
    if (n < 0) continue;
    if (const auto a = perfect_square_root(n)) {
      if (*a * *a > int128{9} * c) {
        throw std::logic_error("fundamental_pairs: box bound a^2 <= 9c broken");
      }
      pairs.push_back(
          FundamentalPair{static_cast<std::int64_t>(*a), b, c});
    }
  }
  return pairs;
}

// Outcome of reducing a solution (s, t) into the box.
//
// Without conjugation:  sign*(s + t*sqrt(10)) = (a + b*sqrt(10)) * U^K.
// The reduction can also land on (-a, b) with a > 0; both box corners lie on
// the same hyperbola since (a + b*sqrt(10))(-a + b*sqrt(10)) = c. That
// landing is canonicalized to (a, b) by conjugating and negating, which
// flips the sign of K and of s:
//   conjugated:         sign*(-s + t*sqrt(10)) = (a + b*sqrt(10)) * U^K.
// Either way the pair's t-orbit over one full period covers the original
// solution's t value (conjugation is time reversal of the orbit).
struct ReductionResult {
  FundamentalPair pair;
  int exponent_k = 0;
  int sign = 1;            // +1 or -1
  bool conjugated = false;
};

// Reduce (s, t) with 10*t^2 - s^2 = c > 0 into the box by exact unit steps.
// The squared box test avoids square roots: with v = s + t*sqrt(10) > 0,
//   v > sqrt(c)*(3 + sqrt(10))   <=>  v^2 > c * (19 + 6*sqrt(10))
//   v < sqrt(c)*(-3 + sqrt(10))  <=>  v^2 < c * (19 - 6*sqrt(10)).
// Each unit step scales v by 19 + 6*sqrt(10) ~ 38.0, so the loop terminates
// quickly; 64 steps bounds every 128-bit input.
inline ReductionResult reduce_solution(int128 s, int128 t) {
  const int128 c =
      checked_sub(checked_mul(10, checked_mul(t, t)), checked_mul(s, s));
  if (c <= 0) {
    throw std::domain_error("reduce_solution: 10*t^2 - s^2 must be positive");
  }

  ReductionResult result;
  QuadInt v{s, t};
  if (quad_compare(v, QuadInt{0, 0}) == std::strong_ordering::less) {
    v = QuadInt{-v.s, -v.t};
    result.sign = -1;
  }
  // v > 0 on the hyperbola forces t > 0 from here on.

  const QuadInt upper{checked_mul(19, c), checked_mul(6, c)};
  const QuadInt lower{checked_mul(19, c), checked_mul(-6, c)};
  int k = 0;
  for (int step = 0;; ++step) {
    if (step > 64) {
      throw std::runtime_error("reduce_solution: reduction failed to settle");
    }
    const QuadInt sq = quad_mul(v, v);
    if (quad_compare(sq, upper) == std::strong_ordering::greater) {
      v = quad_mul(v, kUnitInverse);
      ++k;
      continue;
    }
    if (quad_compare(sq, lower) == std::strong_ordering::less) {
      v = quad_mul(v, kUnit);
      --k;
      continue;
    }
    break;
  }

  if (v.s < 0) {
    v.s = -v.s;
    k = -k;
    result.conjugated = true;
  }
  if (v.t < 1) {
    throw std::logic_error("reduce_solution: box landing lost positivity");
  }

  constexpr int128 kPairMax = INT64_MAX;
  if (v.s > kPairMax || v.t > kPairMax || c > kPairMax) {
    throw std::overflow_error("reduce_solution: pair exceeds 64-bit fields");
  }
  result.pair = FundamentalPair{static_cast<std::int64_t>(v.s),
                                static_cast<std::int64_t>(v.t),
                                static_cast<std::int64_t>(c)};
  result.exponent_k = k;
  return result;
}

}  // namespace a051221
