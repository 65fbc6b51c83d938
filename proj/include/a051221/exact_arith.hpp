#pragma once

// Exact integer primitives: integer square roots, perfect-square detection,
// modular powers, arithmetic in Z[sqrt(10)], and the signed power subgroup
// {+-10^m mod p}. No floating point anywhere; every overflow is detected and
// raised, never wrapped.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace a051221 {

using int128 = __int128;
using uint128 = unsigned __int128;

namespace detail {

inline int bit_length(uint128 v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  if (hi != 0) return 128 - __builtin_clzll(hi);
  const auto lo = static_cast<std::uint64_t>(v);
  return lo == 0 ? 0 : 64 - __builtin_clzll(lo);
}

// Unsigned 256-bit value as two 128-bit limbs. Only what exact comparison of
// squared quadratic integers needs: a full 128x128 product, scaling by 10,
// and ordering.
struct U256 {
  uint128 hi = 0;
  uint128 lo = 0;
  friend constexpr bool operator==(const U256&, const U256&) = default;
};

inline U256 mul_wide(uint128 a, uint128 b) {
  const auto a0 = static_cast<std::uint64_t>(a);
  const auto a1 = static_cast<std::uint64_t>(a >> 64);
  const auto b0 = static_cast<std::uint64_t>(b);
  const auto b1 = static_cast<std::uint64_t>(b >> 64);

  const uint128 p00 = static_cast<uint128>(a0) * b0;
  const uint128 p01 = static_cast<uint128>(a0) * b1;
  const uint128 p10 = static_cast<uint128>(a1) * b0;
  const uint128 p11 = static_cast<uint128>(a1) * b1;

  const uint128 mid = (p00 >> 64) + static_cast<std::uint64_t>(p01) +
                      static_cast<std::uint64_t>(p10);

  U256 r;
  r.lo = (mid << 64) | static_cast<std::uint64_t>(p00);
  r.hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  return r;
}

inline U256 times_ten(U256 x) {
  constexpr uint128 kCap = ~uint128{0} / 10;
  if (x.hi > kCap) throw std::overflow_error("u256 overflow scaling by 10");
  U256 r;
  r.lo = x.lo * 10;
  const uint128 carry = (mul_wide(x.lo, 10)).hi;
  r.hi = x.hi * 10 + carry;
  if (r.hi < carry) throw std::overflow_error("u256 overflow scaling by 10");
  return r;
}

inline std::strong_ordering cmp(const U256& x, const U256& y) {
  if (x.hi != y.hi) {
    return x.hi < y.hi ? std::strong_ordering::less
                       : std::strong_ordering::greater;
  }
  if (x.lo != y.lo) {
    return x.lo < y.lo ? std::strong_ordering::less
                       : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

inline uint128 magnitude(int128 v) {
  // Two's-complement negate through unsigned; correct for INT128_MIN too.
  const auto u = static_cast<uint128>(v);
  return v < 0 ? ~u + 1 : u;
}

}  // namespace detail

inline std::string to_string(uint128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

inline std::string to_string(int128 v) {
  const std::string mag = to_string(detail::magnitude(v));
  return v < 0 ? "-" + mag : mag;
}

inline int128 checked_add(int128 x, int128 y) {
  int128 r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw std::overflow_error("int128 addition overflow");
  }
  return r;
}

inline int128 checked_sub(int128 x, int128 y) {
  int128 r;
  if (__builtin_sub_overflow(x, y, &r)) {
    throw std::overflow_error("int128 subtraction overflow");
  }
  return r;
}

inline int128 checked_mul(int128 x, int128 y) {
  if (x == 0 || y == 0) return 0;
  const bool negative = (x < 0) != (y < 0);
  const detail::U256 p =
      detail::mul_wide(detail::magnitude(x), detail::magnitude(y));
  constexpr uint128 kMaxPositive = ~uint128{0} >> 1;  // 2^127 - 1
  const uint128 limit = negative ? kMaxPositive + 1 : kMaxPositive;
  if (p.hi != 0 || p.lo > limit) {
    throw std::overflow_error("int128 multiplication overflow");
  }
  return negative ? static_cast<int128>(~p.lo + 1) : static_cast<int128>(p.lo);
}

// floor(sqrt(n)) by Newton iteration from a power-of-two seed above the root.
inline int128 isqrt(int128 n) {
  if (n < 0) throw std::domain_error("isqrt: negative input");
  const auto u = static_cast<uint128>(n);
  if (u < 2) return n;
  uint128 x = uint128{1} << ((detail::bit_length(u) + 1) / 2);
  for (;;) {
    const uint128 y = (x + u / x) >> 1;
    if (y >= x) return static_cast<int128>(x);
    x = y;
  }
}

inline std::optional<int128> perfect_square_root(int128 n) {
  if (n < 0) throw std::domain_error("perfect_square_root: negative input");
  const int128 r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

// 10^x as an unsigned 128-bit value; x <= 38 is the width limit.
inline uint128 pow10_128(int x) {
  if (x < 0 || x > 38) {
    throw std::invalid_argument("pow10_128: exponent outside [0, 38]");
  }
  uint128 r = 1;
  for (int i = 0; i < x; ++i) r *= 10;
  return r;
}

inline std::uint64_t mod_pow(std::int64_t base, std::uint64_t exponent,
                             std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
  const auto sm = static_cast<std::int64_t>(m);
  auto b = static_cast<std::uint64_t>(((base % sm) + sm) % sm);
  std::uint64_t r = 1 % m;
  while (exponent != 0) {
    if (exponent & 1) r = static_cast<std::uint64_t>(uint128{r} * b % m);
    b = static_cast<std::uint64_t>(uint128{b} * b % m);
    exponent >>= 1;
  }
  return r;
}

// An element s + t*sqrt(10) of Z[sqrt(10)].
struct QuadInt {
  int128 s = 0;  // rational part
  int128 t = 0;  // coefficient of sqrt(10)
  friend constexpr bool operator==(const QuadInt&, const QuadInt&) = default;
};

// Fundamental unit 19 + 6*sqrt(10), norm +1, and its inverse 19 - 6*sqrt(10).
inline constexpr QuadInt kUnit{19, 6};
inline constexpr QuadInt kUnitInverse{19, -6};
inline constexpr QuadInt kQuadOne{1, 0};

inline QuadInt quad_mul(const QuadInt& x, const QuadInt& y) {
  return QuadInt{
      checked_add(checked_mul(x.s, y.s), checked_mul(10, checked_mul(x.t, y.t))),
      checked_add(checked_mul(x.s, y.t), checked_mul(x.t, y.s))};
}

inline int128 quad_norm(const QuadInt& x) {
  return checked_sub(checked_mul(x.s, x.s),
                     checked_mul(10, checked_mul(x.t, x.t)));
}

// Exact ordering of x and y as real numbers. With d = x - y, the sign of
// d.s + d.t*sqrt(10) splits into four sign cases:
//   d.s >= 0, d.t >= 0  -> nonnegative, zero only when d = 0
//   d.s <= 0, d.t <= 0  -> nonpositive, zero only when d = 0
//   d.s > 0,  d.t < 0   -> sign of d.s^2 - 10*d.t^2
//   d.s < 0,  d.t > 0   -> sign of 10*d.t^2 - d.s^2
// The mixed cases square each side exactly once, into 256-bit intermediates,
// so the squaring step cannot overflow for any pair of 128-bit inputs.
inline std::strong_ordering quad_compare(const QuadInt& x, const QuadInt& y) {
  const int128 ds = checked_sub(x.s, y.s);
  const int128 dt = checked_sub(x.t, y.t);
  if (ds == 0 && dt == 0) return std::strong_ordering::equal;
  if (ds >= 0 && dt >= 0) return std::strong_ordering::greater;
  if (ds <= 0 && dt <= 0) return std::strong_ordering::less;

  const uint128 us = detail::magnitude(ds);
  const uint128 ut = detail::magnitude(dt);
  const auto ord =
      detail::cmp(detail::mul_wide(us, us),
                  detail::times_ten(detail::mul_wide(ut, ut)));
  if (ord == std::strong_ordering::equal) {
    // ds^2 = 10*dt^2 with dt != 0 would make sqrt(10) rational.
    throw std::logic_error("quad_compare: impossible tie against sqrt(10)");
  }
  if (ds > 0) return ord;  // dt < 0: positive iff ds^2 > 10*dt^2
  return ord == std::strong_ordering::greater ? std::strong_ordering::less
                                              : std::strong_ordering::greater;
}

// The set {+-10^m mod p}: closure of {1, p-1} under multiplication by 10.
// A residue of +-10^u mod p must be a member, for every u >= 0.
struct SignedPowerSubgroup {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> elements;  // sorted ascending, in [1, p-1]
  std::uint64_t order = 0;              // = elements.size()

  bool contains(std::uint64_t residue) const {
    return std::binary_search(elements.begin(), elements.end(), residue);
  }
};

inline SignedPowerSubgroup build_signed_subgroup(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || p % 5 == 0) {
    throw std::invalid_argument(
        "build_signed_subgroup: modulus must be an odd prime not dividing 10");
  }
  if (p > (std::uint64_t{1} << 60)) {
    throw std::invalid_argument("build_signed_subgroup: modulus too large");
  }
  SignedPowerSubgroup g;
  g.p = p;
  std::uint64_t x = 1;
  do {
    g.elements.push_back(x);
    g.elements.push_back(p - x);
    x = x * 10 % p;
  } while (x != 1);
  std::sort(g.elements.begin(), g.elements.end());
  g.elements.erase(std::unique(g.elements.begin(), g.elements.end()),
                   g.elements.end());
  g.order = g.elements.size();
  return g;
}

}  // namespace a051221
