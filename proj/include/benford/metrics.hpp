#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "benford/digits.hpp"

namespace benford {

struct NoPositiveValues : std::runtime_error {
  NoPositiveValues() : std::runtime_error("no positive finite magnitudes in value set") {}
};

struct NonPositiveMin : std::invalid_argument {
  NonPositiveMin() : std::invalid_argument("support minimum must be positive") {}
};

// The nine expected shares in percent: 100 * log10(1 + 1/d).
std::array<double, 9> benford_expected();

// Sum of squared deviations from the Benford expectation, percent format.
double ssd(const DigitPercents& observed);

struct PomValue {
  double value = 1.0;       // max/min of retained magnitudes; 1 for a constant set
  bool unbounded = false;   // set only for infinite-support theory
};

// POM = max/min over |values| after dropping zeros and non-finite entries.
PomValue empirical_pom(std::span<const double> values);

// OOM = log10(POM).
double empirical_oom(std::span<const double> values);

// Product composition: POM of a product is the product of the factor POMs.
double theoretical_pom_product(std::span<const double> poms);

// Sum composition: (sum of maxes) / (sum of mins). Throws NonPositiveMin.
double theoretical_pom_sum(std::span<const std::pair<double, double>> supports);

enum class SsdClass { Ideal, Acceptable, Marginal, NonBenford };
enum class PomClass { Weak, Approximate, Good, VeryStrong };

struct ConformanceVerdict {
  SsdClass ssd_class;
  PomClass pom_class;
};

// SSD classes cut at 2 / 25 / 100, POM classes at 300 / 1000 / 3000.
// An unbounded POM classifies as very-strong.
ConformanceVerdict conformance(double ssd_value, const PomValue& pom);

std::string to_string(SsdClass c);
std::string to_string(PomClass c);

struct SkewIndicator {
  double mean = 0.0;
  double median = 0.0;  // average of the two middles for even n
  double ratio = 0.0;   // mean / median
};

SkewIndicator skew_indicator(std::span<const double> values);

struct LogHistogram {
  std::vector<double> edges;        // bin_count + 1 edges over log10 magnitudes
  std::vector<std::int64_t> counts; // last bin is right-closed

  bool operator==(const LogHistogram&) const = default;
};

// Equal-width bins over [min, max] of log10 |values|; a constant set yields
// one degenerate bin holding everything. Throws NoPositiveValues.
LogHistogram log_histogram(std::span<const double> values, int bin_count = 60);

// Standardized third central moment of log10 magnitudes; quantifies the
// left/right lean of the log histogram.
double log10_skewness(std::span<const double> values);

}  // namespace benford
