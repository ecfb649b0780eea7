#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <utility>
#include <vector>

#include "benford/metrics.hpp"
#include "benford/rng.hpp"

using namespace benford;

namespace {

DigitPercents make_percents(const std::array<double, 9>& p) {
  DigitPercents out;
  out.p = p;
  return out;
}

}  // namespace

TEST_CASE("benford expectation") {
  const auto p = benford_expected();
  CHECK(p[0] == doctest::Approx(30.1029995664).epsilon(1e-9));
  CHECK(p[8] == doctest::Approx(4.5757490561).epsilon(1e-9));

  double sum = 0.0;
  for (const double v : p) sum += v;
  CHECK(std::fabs(sum - 100.0) < 1e-9);

  for (std::size_t i = 1; i < 9; ++i) CHECK(p[i] < p[i - 1]);

  // one-decimal rounding reproduces the familiar nine shares
  const std::array<double, 9> rounded = {30.1, 17.6, 12.5, 9.7, 7.9, 6.7, 5.8, 5.1, 4.6};
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(std::round(p[i] * 10.0) / 10.0 == doctest::Approx(rounded[i]));
  }
}

TEST_CASE("ssd of the expectation is zero") {
  DigitPercents obs;
  obs.p = benford_expected();
  CHECK(ssd(obs) == doctest::Approx(0.0).epsilon(1e-18));
}

TEST_CASE("ssd worked example, full-precision expectation") {
  // The printed value of 3.1 in the source material comes from rounded
  // intermediate terms; exact evaluation of the same formula gives 3.2847.
  const auto obs = make_percents({29.9, 18.8, 13.5, 9.3, 7.5, 6.2, 5.8, 4.8, 4.2});
  CHECK(ssd(obs) == doctest::Approx(3.2846696).epsilon(1e-6));
  CHECK(std::fabs(ssd(obs) - 3.285) <= 0.001);
}

TEST_CASE("ssd of a single-digit pile") {
  const auto obs = make_percents({100, 0, 0, 0, 0, 0, 0, 0, 0});
  // independent re-derivation of the same number
  const auto expected = benford_expected();
  double direct = (100.0 - expected[0]) * (100.0 - expected[0]);
  for (std::size_t i = 1; i < 9; ++i) direct += expected[i] * expected[i];
  CHECK(ssd(obs) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(ssd(obs) == doctest::Approx(5633.9337).epsilon(1e-6));
}

TEST_CASE("ssd is positive whenever observed deviates") {
  auto p = benford_expected();
  p[0] += 0.5;
  p[8] -= 0.5;
  CHECK(ssd(make_percents(p)) > 0.0);
}

TEST_CASE("ssd does not depend on the order values reach the tally") {
  RngStream rng(12, 0);
  std::vector<double> values;
  for (int i = 0; i < 5000; ++i) values.push_back(rng.next_double() * 1000.0);
  const double forward = ssd(percents(tally(values)));
  std::vector<double> reversed(values.rbegin(), values.rend());
  CHECK(ssd(percents(tally(reversed))) == forward);
}

TEST_CASE("empirical pom and oom") {
  // every product cell of the 10x10 table
  std::vector<double> cells;
  for (int i = 1; i <= 10; ++i) {
    for (int j = 1; j <= 10; ++j) cells.push_back(i * j);
  }
  CHECK(empirical_pom(cells).value == doctest::Approx(100.0));
  CHECK(empirical_oom(cells) == doctest::Approx(2.0));

  CHECK(empirical_pom(std::vector<double>{2, 20}).value == doctest::Approx(10.0));
  CHECK(empirical_pom(std::vector<double>{5, 5, 5}).value == doctest::Approx(1.0));
  CHECK(empirical_oom(std::vector<double>{5, 5, 5}) == doctest::Approx(0.0));

  // magnitudes: sign is ignored, zeros and non-finite are dropped
  CHECK(empirical_pom(std::vector<double>{-2, 0.0, 20}).value == doctest::Approx(10.0));

  CHECK_THROWS_AS(empirical_pom(std::vector<double>{}), NoPositiveValues);
  CHECK_THROWS_AS(empirical_pom(std::vector<double>{0.0, 0.0}), NoPositiveValues);
}

TEST_CASE("oom equals log10 of pom on random sets") {
  RngStream rng(3, 0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v;
    const int n = 2 + static_cast<int>(rng.next_int(0, 50));
    for (int i = 0; i < n; ++i) v.push_back(0.01 + rng.next_double() * 1000.0);
    CHECK(empirical_oom(v) == doctest::Approx(std::log10(empirical_pom(v).value)).epsilon(1e-12));
  }
}

TEST_CASE("theoretical pom under products") {
  const std::vector<double> fig7 = {40.0 / 3.0, 33.0 / 2.0, 41.0 / 7.0, 29.0};
  CHECK(theoretical_pom_product(fig7) == doctest::Approx(37368.571428).epsilon(1e-9));
  CHECK(std::fabs(theoretical_pom_product(fig7) - 37369.0) < 1.0);

  CHECK(theoretical_pom_product(std::vector<double>{10, 10}) == doctest::Approx(100.0));
  CHECK(theoretical_pom_product(std::vector<double>{7.25}) == doctest::Approx(7.25));

  // n identical factors compose to p^n
  for (const double p : {1.5, 2.0, 13.3}) {
    const std::vector<double> six(6, p);
    CHECK(theoretical_pom_product(six) == doctest::Approx(std::pow(p, 6)).epsilon(1e-12));
  }
}

TEST_CASE("theoretical pom under sums") {
  using SP = std::pair<double, double>;
  const std::vector<SP> six = {{3, 43}, {4, 54}, {3, 13}, {8, 77}, {3, 11}, {4, 15}};
  CHECK(theoretical_pom_sum(six) == doctest::Approx(213.0 / 25.0).epsilon(1e-12));
  CHECK(theoretical_pom_sum(six) == doctest::Approx(8.52));

  const std::vector<SP> four = {{6, 75}, {3, 37}, {5, 55}, {2, 35}};
  CHECK(theoretical_pom_sum(four) == doctest::Approx(12.625).epsilon(1e-12));

  // n copies of one support collapse to max/min
  const std::vector<SP> copies(9, SP{3.0, 17.0});
  CHECK(theoretical_pom_sum(copies) == doctest::Approx(17.0 / 3.0).epsilon(1e-12));

  const std::vector<SP> bad = {{0.0, 5.0}};
  CHECK_THROWS_AS(theoretical_pom_sum(bad), NonPositiveMin);
}

TEST_CASE("pom of a sum never exceeds the largest member pom") {
  RngStream rng(17, 0);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<std::pair<double, double>> supports;
    const int n = 2 + static_cast<int>(rng.next_int(0, 6));
    double max_pom = 0.0;
    for (int i = 0; i < n; ++i) {
      const double lo = 0.001 + rng.next_double() * 100.0;
      const double hi = lo * (1.0 + rng.next_double() * 10000.0);
      supports.emplace_back(lo, hi);
      max_pom = std::max(max_pom, hi / lo);
    }
    REQUIRE(theoretical_pom_sum(supports) <= max_pom * (1.0 + 1e-12));
  }
}

TEST_CASE("conformance classes") {
  const PomValue low{10.0, false};
  CHECK(conformance(0.9, low).ssd_class == SsdClass::Ideal);
  CHECK(conformance(2.0, low).ssd_class == SsdClass::Acceptable);
  CHECK(conformance(24.9, low).ssd_class == SsdClass::Acceptable);
  CHECK(conformance(58.0, low).ssd_class == SsdClass::Marginal);
  CHECK(conformance(100.0, low).ssd_class == SsdClass::NonBenford);

  CHECK(conformance(0, PomValue{299.0, false}).pom_class == PomClass::Weak);
  CHECK(conformance(0, PomValue{300.0, false}).pom_class == PomClass::Approximate);
  CHECK(conformance(0, PomValue{999.0, false}).pom_class == PomClass::Approximate);
  CHECK(conformance(0, PomValue{1000.0, false}).pom_class == PomClass::Good);
  CHECK(conformance(0, PomValue{5386.0, false}).pom_class == PomClass::VeryStrong);
  CHECK(conformance(0, PomValue{0.0, true}).pom_class == PomClass::VeryStrong);

  CHECK(to_string(SsdClass::Marginal) == "marginal");
  CHECK(to_string(PomClass::VeryStrong) == "very-strong");
}

TEST_CASE("skew indicator") {
  const auto s = skew_indicator(std::vector<double>{1, 2, 3});
  CHECK(s.mean == doctest::Approx(2.0));
  CHECK(s.median == doctest::Approx(2.0));
  CHECK(s.ratio == doctest::Approx(1.0));

  const auto even = skew_indicator(std::vector<double>{4, 1, 3, 2});
  CHECK(even.median == doctest::Approx(2.5));
}

TEST_CASE("log histogram") {
  const auto h = log_histogram(std::vector<double>{1, 10, 100}, 2);
  REQUIRE(h.edges.size() == 3);
  CHECK(h.edges[0] == doctest::Approx(0.0));
  CHECK(h.edges[1] == doctest::Approx(1.0));
  CHECK(h.edges[2] == doctest::Approx(2.0));
  REQUIRE(h.counts.size() == 2);
  CHECK(h.counts[0] == 1);
  CHECK(h.counts[1] == 2);  // the last bin is right-closed

  const auto constant = log_histogram(std::vector<double>{7, 7, 7, 7}, 10);
  REQUIRE(h.counts.size() == 2);
  CHECK(constant.counts.size() == 1);
  CHECK(constant.counts[0] == 4);

  RngStream rng(8, 0);
  std::vector<double> v;
  for (int i = 0; i < 5000; ++i) v.push_back(std::exp(rng.next_double() * 10.0));
  const auto big = log_histogram(v, 60);
  std::int64_t total = 0;
  for (const auto c : big.counts) total += c;
  CHECK(total == 5000);

  CHECK_THROWS_AS(log_histogram(std::vector<double>{}, 10), NoPositiveValues);
  CHECK_THROWS_AS(log_histogram(std::vector<double>{1, 2}, 0), std::invalid_argument);
}

TEST_CASE("log skewness sign") {
  // symmetric on the log scale: near zero
  std::vector<double> sym;
  RngStream rng(4, 0);
  for (int i = 0; i < 60000; ++i) sym.push_back(std::pow(10.0, rng.next_double()));
  CHECK(std::fabs(log10_skewness(sym)) < 0.05);

  // mass piled high with a long left tail in the log domain
  std::vector<double> left;
  for (int i = 0; i < 60000; ++i) {
    left.push_back(std::pow(10.0, 3.0 * std::sqrt(rng.next_double())));
  }
  CHECK(log10_skewness(left) < -0.3);
}
