#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "benford/digits.hpp"
#include "benford/expr.hpp"
#include "benford/metrics.hpp"

namespace benford {

struct EmptyResult : std::runtime_error {
  EmptyResult() : std::runtime_error("every realization was skipped; nothing to report") {}
};

// Everything measured about one experiment or sample set.
struct BenfordReport {
  std::string name;
  std::string expression;
  std::int64_t runs = 0;
  std::uint64_t seed = 0;
  DigitTally tally;
  DigitPercents percents;
  double ssd = 0.0;
  double pom_empirical = 0.0;
  PomAnalysis pom_theoretical = PomAnalysis::unavailable();
  double oom = 0.0;
  double mean = 0.0;
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
  double skew_ratio = 0.0;
  LogHistogram log_hist;
  ConformanceVerdict verdict{};
  std::int64_t elapsed_ms = 0;
};

// Assemble a report from realized values. Throws EmptyResult when no value
// has a first digit. Moments are taken over finite values; non-finite ones
// only show up in the skip count. A caller that extracted digits some other
// way (e.g. from decimal text) may pass its own tally.
BenfordReport build_report(std::string name, std::string expression, std::int64_t runs,
                           std::uint64_t seed, std::span<const double> values,
                           PomAnalysis pom_theoretical,
                           const DigitTally* tally_override = nullptr);

enum class ReportFormat { Text, Json, Csv };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_report(const BenfordReport& report, ReportFormat format);

// Serializes in `format` to `path`. Throws IoError.
void write_report(const BenfordReport& report, ReportFormat format, const std::string& path);

// JSON body with BenfordReport field names; digits ordered 1..9.
std::string report_to_json(const BenfordReport& report);
BenfordReport report_from_json(const std::string& json_text);

}  // namespace benford
