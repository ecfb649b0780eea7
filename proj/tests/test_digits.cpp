#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <vector>

#include "benford/digits.hpp"
#include "benford/rng.hpp"

using namespace benford;

namespace {

// Independent oracle: render with 17 significant digits and scan the mantissa
// for the first nonzero character.
int oracle_digit(double x) {
  if (x == 0.0 || !std::isfinite(x)) return kNoDigit;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", std::fabs(x));
  for (const char* p = buf; *p != '\0' && *p != 'e' && *p != 'E'; ++p) {
    if (*p >= '1' && *p <= '9') return *p - '0';
  }
  return kNoDigit;
}

const std::vector<double> kEarthquake = {
    285.29,  185.35,  2579.80, 27.11,   5330.22, 1504.49, 1764.41, 574.46,
    1722.16, 815.06,  3686.84, 1501.61, 494.17,  362.48,  1388.13, 1817.27,
    3516.80, 5049.66, 2414.06, 387.78,  4385.23, 2443.98, 2204.12, 1224.42,
    1965.46, 3.61,    1347.30, 271.23,  3247.99, 753.80,  1781.45, 593.59,
    1482.64, 1165.04, 4647.39, 1219.19, 251.12,  7345.52, 1368.79, 4112.13};

}  // namespace

TEST_CASE("worked first-digit examples") {
  CHECK(first_digit(613) == 6);
  CHECK(first_digit(0.0002867) == 2);
  CHECK(first_digit(7) == 7);
  CHECK(first_digit(1653832) == 1);
  CHECK(first_digit(0.456398) == 4);
  CHECK(first_digit(-62.97) == 6);
  CHECK(first_digit(567.34) == 5);
  CHECK(first_digit(0.0367) == 3);
}

TEST_CASE("exact powers of ten report digit 1") {
  for (int k = -12; k <= 12; ++k) {
    CHECK(first_digit(std::pow(10.0, k)) == 1);
  }
  for (int k : {-300, -200, -100, 50, 100, 200, 300}) {
    CHECK(first_digit(std::pow(10.0, k)) == 1);
  }
}

TEST_CASE("values with no defined digit") {
  CHECK(first_digit(0.0) == kNoDigit);
  CHECK(first_digit(-0.0) == kNoDigit);
  CHECK(first_digit(std::numeric_limits<double>::quiet_NaN()) == kNoDigit);
  CHECK(first_digit(std::numeric_limits<double>::infinity()) == kNoDigit);
  CHECK(first_digit(-std::numeric_limits<double>::infinity()) == kNoDigit);
}

TEST_CASE("representation edges resolve to their decimal rendering") {
  const std::pair<double, int> edges[] = {
      {999.9999999999999, 9},
      {9.999999999999998e22, 9},
      {1.0000000000000002, 1},
      {0.09999999999999999, 9},
      {9.999999999999999e-300, 9},
      {1.7976931348623157e308, 1},   // max double
      {4.9406564584124654e-324, 5},  // min subnormal renders as 5e-324
      {2.2250738585072014e-308, 2},  // min normal
      {1e21, 1},
      {8.999999999999999e15, 8},
  };
  for (const auto& [x, digit] : edges) {
    CHECK(first_digit(x) == digit);
  }
}

TEST_CASE("string-oracle equivalence over a million random doubles") {
  RngStream rng(2024, 0);
  int checked = 0;
  while (checked < 500000) {  // bit-pattern doubles: all exponents, subnormals included
    const double x = std::bit_cast<double>(rng.next_u64());
    if (!std::isfinite(x) || x == 0.0) continue;
    REQUIRE(first_digit(x) == oracle_digit(x));
    ++checked;
  }
  for (int i = 0; i < 500000; ++i) {  // log-uniform magnitudes, the common case
    const double mag = std::pow(10.0, -40.0 + 80.0 * rng.next_double());
    const double x = (rng.next_double() < 0.5 ? -1.0 : 1.0) * mag * (1.0 + 9.0 * rng.next_double());
    REQUIRE(first_digit(x) == oracle_digit(x));
  }
}

TEST_CASE("scale invariance under powers of ten") {
  RngStream rng(99, 0);
  for (int i = 0; i < 100000; ++i) {
    const double mantissa = 1.0 + 9.0 * rng.next_double();
    const int e = static_cast<int>(rng.next_int(-100, 100));
    const int k = static_cast<int>(rng.next_int(-100, 100));
    const double x = mantissa * std::pow(10.0, e);
    const double scaled = x * std::pow(10.0, k);
    REQUIRE(first_digit(x) == first_digit(scaled));
  }
}

TEST_CASE("sign invariance") {
  RngStream rng(100, 0);
  for (int i = 0; i < 50000; ++i) {
    const double x = (rng.next_double() - 0.5) * std::pow(10.0, rng.next_int(-30, 30));
    REQUIRE(first_digit(x) == first_digit(-x));
  }
}

TEST_CASE("text digits come straight from the token") {
  CHECK(first_digit_text("285.29") == 2);
  CHECK(first_digit_text("0.0002867") == 2);
  CHECK(first_digit_text("-62.97") == 6);
  CHECK(first_digit_text("1e5") == 1);
  CHECK(first_digit_text("12e-5") == 1);
  CHECK(first_digit_text("0.000") == kNoDigit);
  CHECK(first_digit_text("0") == kNoDigit);
  CHECK(first_digit_text("") == kNoDigit);
  // exact beyond double precision: 17 nines round up as a double but not as text
  CHECK(first_digit_text("0.99999999999999999") == 9);
}

TEST_CASE("earthquake sample tally") {
  const DigitTally t = tally(kEarthquake);
  const std::array<std::int64_t, 9> expected = {15, 8, 6, 4, 4, 0, 2, 1, 0};
  CHECK(t.counts == expected);
  CHECK(t.total == 40);
  CHECK(t.skipped == 0);
}

TEST_CASE("tally edge cases") {
  CHECK(tally({}).total == 0);
  CHECK(tally({}).skipped == 0);

  const std::vector<double> digits = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  const DigitTally t = tally(digits);
  for (const auto c : t.counts) CHECK(c == 1);

  const std::vector<double> with_skips = {0.0, std::numeric_limits<double>::quiet_NaN(), 5.0};
  const DigitTally s = tally(with_skips);
  CHECK(s.total == 1);
  CHECK(s.skipped == 2);
}

TEST_CASE("tally merge is componentwise and commutative") {
  RngStream rng(5, 0);
  std::vector<double> a, b;
  for (int i = 0; i < 500; ++i) a.push_back(rng.next_double() * 100.0);
  for (int i = 0; i < 300; ++i) b.push_back(rng.next_double() * 0.01);
  a.push_back(0.0);

  DigitTally ta = tally(a);
  const DigitTally tb = tally(b);
  DigitTally tba = tb;
  tba.merge(tally(a));
  ta.merge(tb);

  std::vector<double> joined = a;
  joined.insert(joined.end(), b.begin(), b.end());
  const DigitTally tj = tally(joined);
  CHECK(ta == tj);
  CHECK(tba == tj);
}

TEST_CASE("percents") {
  const DigitPercents eq = percents(tally(kEarthquake));
  const std::array<double, 9> expected = {37.5, 20, 15, 10, 10, 0, 5, 2.5, 0};
  for (std::size_t i = 0; i < 9; ++i) CHECK(eq.p[i] == doctest::Approx(expected[i]).epsilon(1e-12));

  DigitTally ones;
  for (int d = 1; d <= 9; ++d) ones.add(d);
  for (const double p : percents(ones).p) CHECK(p == doctest::Approx(100.0 / 9));

  DigitTally single;
  for (int i = 0; i < 40; ++i) single.add(1);
  const auto sp = percents(single).p;
  CHECK(sp[0] == 100.0);
  for (std::size_t i = 1; i < 9; ++i) CHECK(sp[i] == 0.0);

  double sum = 0.0;
  for (const double p : eq.p) sum += p;
  CHECK(sum == doctest::Approx(100.0).epsilon(1e-11));

  CHECK_THROWS_AS(percents(DigitTally{}), EmptyTally);
}
