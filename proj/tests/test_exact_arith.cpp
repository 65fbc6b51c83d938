#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

#include "a051221/exact_arith.hpp"

using namespace a051221;

namespace {

uint128 parse_u128(std::string_view s) {
  uint128 v = 0;
  for (const char ch : s) v = v * 10 + static_cast<unsigned>(ch - '0');
  return v;
}

int128 parse_i128(std::string_view s) {
  if (!s.empty() && s.front() == '-') {
    return -static_cast<int128>(parse_u128(s.substr(1)));
  }
  return static_cast<int128>(parse_u128(s));
}

}  // namespace

TEST_CASE("isqrt on the documented cases") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(1) == 1);
  CHECK(isqrt(31) == 5);
  CHECK(isqrt(1999) == 44);
  CHECK_THROWS_AS(isqrt(-1), std::domain_error);
}

TEST_CASE("isqrt bracketing holds over a sweep and at square boundaries") {
  for (int128 n = 0; n < 1'000'000; ++n) {
    const int128 r = isqrt(n);
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20'000; ++i) {
    const int128 k = static_cast<int128>(rng() >> 1);  // up to ~2^63
    const int128 sq = k * k;
    CHECK(isqrt(sq) == k);
    if (sq > 0) CHECK(isqrt(sq - 1) == k - 1);
    CHECK(isqrt(sq + 1) == k);
  }
  // near the 128-bit ceiling, where (r+1)^2 may not even be representable
  const int128 big = parse_i128("170141183460469231731687303715884105727");
  const int128 r = isqrt(big);
  CHECK(r * r <= big);
  bool next_square_above = false;
  try {
    next_square_above = checked_mul(r + 1, r + 1) > big;
  } catch (const std::overflow_error&) {
    next_square_above = true;
  }
  CHECK(next_square_above);
}

TEST_CASE("perfect_square_root") {
  CHECK(perfect_square_root(9) == 3);
  CHECK(!perfect_square_root(33).has_value());
  CHECK(perfect_square_root(10 * 2 * 2 - 31) == 3);
  CHECK(perfect_square_root(0) == 0);
  CHECK_THROWS_AS(perfect_square_root(-4), std::domain_error);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 5'000; ++i) {
    const int128 n = static_cast<int128>(rng() % 1'000'000'007);
    const auto r = perfect_square_root(n);
    const int128 f = isqrt(n);
    CHECK(r.has_value() == (f * f == n));
  }
}

TEST_CASE("mod_pow basics and the repeated-multiplication oracle") {
  CHECK(mod_pow(10, 0, 7) == 1);
  CHECK(mod_pow(10, 2, 160001) == 100);
  CHECK(mod_pow(10, 625, 160001) == 160000);  // 10^625 = -1 mod 160001
  CHECK(mod_pow(-3, 3, 7) == 1);              // (-27) mod 7
  CHECK_THROWS_AS(mod_pow(10, 3, 1), std::invalid_argument);

  std::uint64_t acc = 1;
  for (int e = 0; e <= 1400; ++e) {
    CHECK(mod_pow(10, static_cast<std::uint64_t>(e), 160001) == acc);
    acc = acc * 10 % 160001;
  }
}

TEST_CASE("quad_mul documented products") {
  CHECK(quad_mul(kUnit, kUnitInverse) == QuadInt{1, 0});
  CHECK(quad_mul(QuadInt{3, 2}, kUnit) == QuadInt{177, 56});
  CHECK(quad_mul(kQuadOne, QuadInt{-42, 17}) == QuadInt{-42, 17});
}

TEST_CASE("quad_mul is commutative, associative, with multiplicative norm") {
  std::mt19937_64 rng(23);
  auto draw = [&](std::int64_t bound) {
    return QuadInt{static_cast<int128>(rng() % (2 * bound + 1)) - bound,
                   static_cast<int128>(rng() % (2 * bound + 1)) - bound};
  };
  for (int i = 0; i < 2'000; ++i) {
    const QuadInt x = draw(std::int64_t{1} << 60);
    const QuadInt y = draw(std::int64_t{1} << 60);
    CHECK(quad_mul(x, y) == quad_mul(y, x));
    CHECK(quad_mul(x, kQuadOne) == x);
  }
  for (int i = 0; i < 2'000; ++i) {
    const QuadInt x = draw(1 << 30);
    const QuadInt y = draw(1 << 30);
    const QuadInt z = draw(1 << 30);
    CHECK(quad_mul(quad_mul(x, y), z) == quad_mul(x, quad_mul(y, z)));
    CHECK(quad_norm(quad_mul(x, y)) == checked_mul(quad_norm(x), quad_norm(y)));
  }
}

TEST_CASE("quad_mul overflow is raised, never wrapped") {
  const int128 big = parse_i128("13043817825332782212");  // ~2^63.5
  const QuadInt huge{big * big, big * big};
  CHECK_THROWS_AS(quad_mul(huge, huge), std::overflow_error);
}

TEST_CASE("quad_compare frozen vectors") {
  struct Case {
    std::int64_t s1, t1, s2, t2;
    std::strong_ordering expected;
  };
  // verdicts from an independent 60-digit decimal evaluation
  const Case cases[] = {
      {49, 12, 589, 186, std::strong_ordering::less},
      {19, 6, 20, 6, std::strong_ordering::less},
      {0, 1, 3, 0, std::strong_ordering::greater},
      {3, 2, 3, 2, std::strong_ordering::equal},
      {-63, 20, 0, 0, std::strong_ordering::greater},
      {-2397, 758, 0, 0, std::strong_ordering::greater},
      {612402104711, 799634973253, 768775793613, 878183356738,
       std::strong_ordering::less},
      {-406462743980, -39791306427, -178966802549, 920384103508,
       std::strong_ordering::less},
      {-426909902517, 381098610724, 345073563529, -589602040391,
       std::strong_ordering::greater},
      {620726960417, 614727592911, 164328242386, 619110930066,
       std::strong_ordering::greater},
      {285965260831, -632763393894, -548392150971, -829408335091,
       std::strong_ordering::greater},
      {839061923541, -294158372601, 5123370114, -942707207423,
       std::strong_ordering::greater},
      {125141769762, 520327362822, -86269201078, -987100260656,
       std::strong_ordering::greater},
      {460032206952, -639777798754, 278915995199, -372166517803,
       std::strong_ordering::less},
      {434946424512, -766291362598, 498451969163, -598085180876,
       std::strong_ordering::less},
      {-172202682644, 312213859745, -274902859439, -910634080600,
       std::strong_ordering::greater},
      {-737009239194, 98966982829, 620132017454, 665596474550,
       std::strong_ordering::less},
      {471262888432, -436561157487, -43989205526, -712414734358,
       std::strong_ordering::greater},
      {-337870067846, 902598754611, -979245838037, -230216821301,
       std::strong_ordering::greater},
      {-246065141937, -153217215145, -972839654480, -866644189363,
       std::strong_ordering::greater},
      {1000000000000001, 0, 1000000000000000, 0,
       std::strong_ordering::greater},
      {4870847, 1540322, 4870846, 1540322, std::strong_ordering::greater},
  };
  for (const Case& c : cases) {
    CAPTURE(c.s1, c.t1, c.s2, c.t2);
    CHECK(quad_compare(QuadInt{c.s1, c.t1}, QuadInt{c.s2, c.t2}) ==
          c.expected);
  }
}

TEST_CASE("quad_compare agrees with high-precision evaluation") {
  // For |s|, |t| <= 10^6 the smallest nonzero |ds + dt*sqrt(10)| is at least
  // 1 / (|ds| + |dt|*sqrt(10)) > 1e-7, while 80-bit long double evaluation is
  // accurate to ~1e-12 absolute at this scale, so the oracle is decisive.
  const long double sqrt10 = sqrtl(10.0L);
  std::mt19937_64 rng(31);
  auto coord = [&] {
    return static_cast<std::int64_t>(rng() % 2'000'001) - 1'000'000;
  };
  for (int i = 0; i < 1'000; ++i) {
    const QuadInt x{coord(), coord()};
    const QuadInt y{coord(), coord()};
    const long double vx = static_cast<long double>(static_cast<double>(x.s)) +
                           static_cast<long double>(static_cast<double>(x.t)) * sqrt10;
    const long double vy = static_cast<long double>(static_cast<double>(y.s)) +
                           static_cast<long double>(static_cast<double>(y.t)) * sqrt10;
    const auto expected = vx < vy   ? std::strong_ordering::less
                          : vx > vy ? std::strong_ordering::greater
                                    : std::strong_ordering::equal;
    if (expected == std::strong_ordering::equal) continue;  // x == y only
    CAPTURE(static_cast<std::int64_t>(x.s), static_cast<std::int64_t>(x.t),
            static_cast<std::int64_t>(y.s), static_cast<std::int64_t>(y.t));
    CHECK(quad_compare(x, y) == expected);
  }
}

TEST_CASE("quad_compare handles huge mixed-sign operands exactly") {
  // Walk (3, 2) down eight unit steps: components grow to ~1e14 with
  // opposite signs while the value shrinks toward 0+; ordering against 0
  // and against the previous iterate must stay exact.
  QuadInt v{3, 2};
  QuadInt prev = v;
  for (int i = 0; i < 8; ++i) {
    prev = v;
    v = quad_mul(v, kUnitInverse);
    CHECK(quad_compare(v, QuadInt{0, 0}) == std::strong_ordering::greater);
    CHECK(quad_compare(v, prev) == std::strong_ordering::less);
  }
  CHECK(v.s < 0);
  CHECK(quad_norm(v) == quad_norm(QuadInt{3, 2}));
}

TEST_CASE("u256 full products match reference values") {
  struct Case {
    const char* a;
    const char* b;
    const char* hi;
    const char* lo;
  };
  const Case cases[] = {
      {"76261875644793585049471695014829906276",
       "45402300470607370613842676726418352899",
       "10175268920947305381037419688657895214",
       "79687707217101685067953788056220522540"},
      {"74708514984327916958521157244153041063",
       "54760850482607652434792158145801436084",
       "12022667691696657987067556672069876851",
       "3647840742806671225424358850774512236"},
      {"69692421378035447135314920535472011042",
       "71252332955834501934089386145208078794",
       "14593020665334230204238453401968311612",
       "207203868140410225954175644667057816276"},
      {"82919428692831868009990030719761577629",
       "66305161274568622525025336538637602074",
       "16157128980916949229807670887060453908",
       "130120094961944395457493489879076832498"},
      {"66670545094761020481298898479266058218",
       "70917649526563118031138741789227984434",
       "13894691028388548612963051154694413140",
       "94151716918495730518584085326896846772"},
      {"22951808119590215981874265672774367828",
       "54626957413915180127898259589830049401",
       "3684550146004225879071312286516700638",
       "128284553875055428071862403972350962100"},
  };
  for (const Case& c : cases) {
    const auto p = detail::mul_wide(parse_u128(c.a), parse_u128(c.b));
    CHECK(p.hi == parse_u128(c.hi));
    CHECK(p.lo == parse_u128(c.lo));
  }

  std::mt19937_64 rng(47);
  for (int i = 0; i < 10'000; ++i) {
    const std::uint64_t a = rng();
    const std::uint64_t b = rng();
    const auto p = detail::mul_wide(a, b);
    CHECK(p.hi == 0);
    CHECK(p.lo == uint128{a} * b);
  }
}

TEST_CASE("checked int128 arithmetic raises on overflow") {
  const int128 max = parse_i128("170141183460469231731687303715884105727");
  CHECK_THROWS_AS(checked_add(max, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_sub(-max - 1, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(max, 2), std::overflow_error);
  CHECK(checked_mul(max, 1) == max);
  CHECK(checked_mul(-max - 1, 1) == -max - 1);
  CHECK_THROWS_AS(checked_mul(-max - 1, -1), std::overflow_error);
}

TEST_CASE("signed power subgroup orders and membership") {
  const auto g160001 = build_signed_subgroup(160001);
  CHECK(g160001.order == 1250);
  CHECK(g160001.contains(1));
  CHECK(g160001.contains(10));
  CHECK(g160001.contains(160000));  // -1
  CHECK_FALSE(g160001.contains(4354));
  CHECK_FALSE(g160001.contains(0));

  const auto g1601 = build_signed_subgroup(1601);
  CHECK(g1601.order == 200);

  const auto g3 = build_signed_subgroup(3);
  CHECK(g3.elements == std::vector<std::uint64_t>{1, 2});
  CHECK(g3.order == 2);

  CHECK_THROWS_AS(build_signed_subgroup(5), std::invalid_argument);
  CHECK_THROWS_AS(build_signed_subgroup(2), std::invalid_argument);
  CHECK_THROWS_AS(build_signed_subgroup(15), std::invalid_argument);
}

TEST_CASE("signed power subgroup closure properties") {
  for (const std::uint64_t p : {std::uint64_t{160001}, std::uint64_t{1601},
                                std::uint64_t{97}, std::uint64_t{3}}) {
    const auto g = build_signed_subgroup(p);
    CHECK(2 * (p - 1) % g.order == 0);  // order divides 2(p-1)
    for (const std::uint64_t e : g.elements) {
      REQUIRE(e >= 1);
      REQUIRE(e <= p - 1);
      REQUIRE(g.contains(e * 10 % p));
      REQUIRE(g.contains(p - e));
    }
  }
}
