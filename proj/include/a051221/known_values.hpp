#pragma once

// Brute-force enumeration of the values 10^x - y^2 that fall in [0, bound],
// and the independent representation oracle used to audit exclusions.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "a051221/exact_arith.hpp"

namespace a051221 {

// A witness 10^x - y^2 = value.
struct Representation {
  int x = 0;
  std::int64_t y = 0;
  friend constexpr bool operator==(const Representation&,
                                   const Representation&) = default;
};

// Every value v in [0, bound] with v = 10^x - y^2 for some 0 <= x <= x_max.
struct KnownSet {
  int x_max = 0;
  std::int64_t bound = 0;
  std::vector<std::int64_t> values;  // sorted ascending, deduplicated

  bool contains(std::int64_t v) const {
    return std::binary_search(values.begin(), values.end(), v);
  }
};

// Exhaustive within the caps. For each exponent only the window
// y in [isqrt(10^x - bound), isqrt(10^x)] can land in range, so the scan is
// O(x_max * sqrt(bound)) instead of O(10^{x_max/2}).
inline KnownSet known_set(int x_max, std::int64_t bound) {
  if (x_max < 0 || x_max > 37) {
    throw std::invalid_argument("known_set: x_max outside [0, 37]");
  }
  if (bound < 0) throw std::invalid_argument("known_set: negative bound");

  KnownSet set;
  set.x_max = x_max;
  set.bound = bound;
  for (int x = 0; x <= x_max; ++x) {
    const uint128 p10 = pow10_128(x);
    const uint128 ub = static_cast<uint128>(bound);
    const int128 y_lo = p10 > ub ? isqrt(static_cast<int128>(p10 - ub)) : 0;
    const int128 y_hi = isqrt(static_cast<int128>(p10));
    for (int128 y = y_lo; y <= y_hi; ++y) {
      const int128 v = static_cast<int128>(p10) - y * y;
      if (v >= 0 && v <= bound) {
        set.values.push_back(static_cast<std::int64_t>(v));
      }
    }
  }
  std::sort(set.values.begin(), set.values.end());
  set.values.erase(std::unique(set.values.begin(), set.values.end()),
                   set.values.end());
  return set;
}

// Smallest positive value of 10^x - y^2 for even x: taking y = 10^{x/2} - 1
// gives 2*10^{x/2} - 1, and any larger y makes the form nonpositive.
inline uint128 even_exponent_min(int x) {
  if (x < 2 || x % 2 != 0) {
    throw std::invalid_argument("even_exponent_min: x must be even and >= 2");
  }
  return 2 * pow10_128(x / 2) - 1;
}

// Smallest-exponent representation 10^x - y^2 = c with x <= x_limit, if any.
inline std::optional<Representation> oracle_scan(std::int64_t c, int x_limit) {
  if (c < 0) throw std::invalid_argument("oracle_scan: negative candidate");
  if (x_limit < 0 || x_limit > 37) {
    throw std::invalid_argument(
        "oracle_scan: x_limit outside the 128-bit range [0, 37]");
  }
  for (int x = 0; x <= x_limit; ++x) {
    const int128 n = static_cast<int128>(pow10_128(x)) - c;
    if (n < 0) continue;
    if (const auto y = perfect_square_root(n)) {
      return Representation{x, static_cast<std::int64_t>(*y)};
    }
  }
  return std::nullopt;
}

}  // namespace a051221
