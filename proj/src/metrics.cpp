#include "benford/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace benford {

namespace {

std::vector<double> positive_magnitudes(std::span<const double> values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const double v : values) {
    const double a = std::fabs(v);
    if (std::isfinite(a) && a > 0.0) out.push_back(a);
  }
  return out;
}

}  // namespace

std::array<double, 9> benford_expected() {
  std::array<double, 9> p;
  for (int d = 1; d <= 9; ++d) p[d - 1] = 100.0 * std::log10(1.0 + 1.0 / d);
  return p;
}

double ssd(const DigitPercents& observed) {
  const auto expected = benford_expected();
  double sum = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const double err = observed.p[i] - expected[i];
    sum += err * err;
  }
  return sum;
}

PomValue empirical_pom(std::span<const double> values) {
  const auto mags = positive_magnitudes(values);
  if (mags.empty()) throw NoPositiveValues();
  const auto [mn, mx] = std::minmax_element(mags.begin(), mags.end());
  return {*mx / *mn, false};
}

double empirical_oom(std::span<const double> values) {
  return std::log10(empirical_pom(values).value);
}

double theoretical_pom_product(std::span<const double> poms) {
  double prod = 1.0;
  for (const double p : poms) prod *= p;
  return prod;
}

double theoretical_pom_sum(std::span<const std::pair<double, double>> supports) {
  double max_sum = 0.0;
  double min_sum = 0.0;
  for (const auto& [mn, mx] : supports) {
    if (!(mn > 0.0)) throw NonPositiveMin();
    min_sum += mn;
    max_sum += mx;
  }
  if (min_sum == 0.0) throw NonPositiveMin();
  return max_sum / min_sum;
}

ConformanceVerdict conformance(double ssd_value, const PomValue& pom) {
  ConformanceVerdict v{};
  if (ssd_value < 2.0) {
    v.ssd_class = SsdClass::Ideal;
  } else if (ssd_value < 25.0) {
    v.ssd_class = SsdClass::Acceptable;
  } else if (ssd_value < 100.0) {
    v.ssd_class = SsdClass::Marginal;
  } else {
    v.ssd_class = SsdClass::NonBenford;
  }
  const double p = pom.unbounded ? std::numeric_limits<double>::max() : pom.value;
  if (p < 300.0) {
    v.pom_class = PomClass::Weak;
  } else if (p < 1000.0) {
    v.pom_class = PomClass::Approximate;
  } else if (p < 3000.0) {
    v.pom_class = PomClass::Good;
  } else {
    v.pom_class = PomClass::VeryStrong;
  }
  return v;
}

std::string to_string(SsdClass c) {
  switch (c) {
    case SsdClass::Ideal: return "ideal";
    case SsdClass::Acceptable: return "acceptable";
    case SsdClass::Marginal: return "marginal";
    case SsdClass::NonBenford: return "non-benford";
  }
  return "?";
}

std::string to_string(PomClass c) {
  switch (c) {
    case PomClass::Weak: return "weak";
    case PomClass::Approximate: return "approximate";
    case PomClass::Good: return "good";
    case PomClass::VeryStrong: return "very-strong";
  }
  return "?";
}

SkewIndicator skew_indicator(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("skew_indicator requires a non-empty set");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  double sum = 0.0;
  for (const double v : sorted) sum += v;
  const std::size_t n = sorted.size();
  SkewIndicator out;
  out.mean = sum / static_cast<double>(n);
  out.median = (n % 2 == 1) ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  out.ratio = out.mean / out.median;
  return out;
}

LogHistogram log_histogram(std::span<const double> values, int bin_count) {
  if (bin_count < 1) throw std::invalid_argument("log_histogram requires bin_count >= 1");
  const auto mags = positive_magnitudes(values);
  if (mags.empty()) throw NoPositiveValues();

  std::vector<double> logs;
  logs.reserve(mags.size());
  for (const double m : mags) logs.push_back(std::log10(m));
  const auto [mn_it, mx_it] = std::minmax_element(logs.begin(), logs.end());
  const double lo = *mn_it;
  const double hi = *mx_it;

  LogHistogram h;
  if (lo == hi) {  // constant set: one degenerate bin
    h.edges = {lo, hi};
    h.counts = {static_cast<std::int64_t>(logs.size())};
    return h;
  }

  h.edges.resize(static_cast<std::size_t>(bin_count) + 1);
  const double width = (hi - lo) / bin_count;
  for (int i = 0; i <= bin_count; ++i) h.edges[static_cast<std::size_t>(i)] = lo + width * i;
  h.edges.back() = hi;

  h.counts.assign(static_cast<std::size_t>(bin_count), 0);
  for (const double x : logs) {
    auto idx = static_cast<std::int64_t>((x - lo) / width);
    idx = std::clamp<std::int64_t>(idx, 0, bin_count - 1);
    ++h.counts[static_cast<std::size_t>(idx)];
  }
  return h;
}

double log10_skewness(std::span<const double> values) {
  const auto mags = positive_magnitudes(values);
  if (mags.size() < 2) throw NoPositiveValues();
  std::vector<double> logs;
  logs.reserve(mags.size());
  for (const double m : mags) logs.push_back(std::log10(m));
  const double n = static_cast<double>(logs.size());
  double mean = 0.0;
  for (const double x : logs) mean += x;
  mean /= n;
  double m2 = 0.0;
  double m3 = 0.0;
  for (const double x : logs) {
    const double d = x - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= n;
  m3 /= n;
  if (m2 == 0.0) return 0.0;
  return m3 / std::pow(m2, 1.5);
}

}  // namespace benford
