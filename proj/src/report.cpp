#include "benford/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace benford {

BenfordReport build_report(std::string name, std::string expression, std::int64_t runs,
                           std::uint64_t seed, std::span<const double> values,
                           PomAnalysis pom_theoretical, const DigitTally* tally_override) {
  BenfordReport r;
  r.name = std::move(name);
  r.expression = std::move(expression);
  r.runs = runs;
  r.seed = seed;
  r.tally = tally_override ? *tally_override : tally(values);
  if (r.tally.total == 0) throw EmptyResult();
  r.percents = percents(r.tally);
  r.ssd = ssd(r.percents);
  r.pom_empirical = empirical_pom(values).value;
  r.pom_theoretical = pom_theoretical;
  r.oom = std::log10(r.pom_empirical);

  std::vector<double> finite;
  finite.reserve(values.size());
  for (const double v : values) {
    if (std::isfinite(v)) finite.push_back(v);
  }
  const auto skew = skew_indicator(finite);
  r.mean = skew.mean;
  r.median = skew.median;
  r.skew_ratio = skew.ratio;
  const auto [mn, mx] = std::minmax_element(finite.begin(), finite.end());
  r.min = *mn;
  r.max = *mx;
  r.log_hist = log_histogram(values);
  r.verdict = conformance(r.ssd, PomValue{r.pom_empirical, false});
  return r;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json pom_theoretical_json(const PomAnalysis& p) {
  switch (p.kind) {
    case PomAnalysis::Kind::Value: return p.value;
    case PomAnalysis::Kind::Unbounded: return "unbounded";
    case PomAnalysis::Kind::Unavailable: return "unavailable";
  }
  return nullptr;
}

PomAnalysis pom_theoretical_from_json(const ordered_json& j) {
  if (j.is_number()) return PomAnalysis::of(j.get<double>());
  if (j.is_string() && j.get<std::string>() == "unbounded") return PomAnalysis::unbounded();
  return PomAnalysis::unavailable();
}

ordered_json to_json(const BenfordReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["expression"] = r.expression;
  j["runs"] = r.runs;
  j["seed"] = r.seed;
  j["tally"] = {{"counts", r.tally.counts}, {"total", r.tally.total}, {"skipped", r.tally.skipped}};
  j["percents"] = r.percents.p;
  j["ssd"] = r.ssd;
  j["pom_empirical"] = r.pom_empirical;
  j["pom_theoretical"] = pom_theoretical_json(r.pom_theoretical);
  j["oom"] = r.oom;
  j["mean"] = r.mean;
  j["median"] = r.median;
  j["min"] = r.min;
  j["max"] = r.max;
  j["skew_ratio"] = r.skew_ratio;
  j["log_hist"] = {{"edges", r.log_hist.edges}, {"counts", r.log_hist.counts}};
  j["verdict"] = {{"ssd_class", to_string(r.verdict.ssd_class)},
                  {"pom_class", to_string(r.verdict.pom_class)}};
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

SsdClass ssd_class_from(const std::string& s) {
  if (s == "ideal") return SsdClass::Ideal;
  if (s == "acceptable") return SsdClass::Acceptable;
  if (s == "marginal") return SsdClass::Marginal;
  return SsdClass::NonBenford;
}

PomClass pom_class_from(const std::string& s) {
  if (s == "weak") return PomClass::Weak;
  if (s == "approximate") return PomClass::Approximate;
  if (s == "good") return PomClass::Good;
  return PomClass::VeryStrong;
}

std::string one_decimal(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << v;
  return os.str();
}

std::string text_format(const BenfordReport& r) {
  std::ostringstream os;
  os << "experiment: " << (r.name.empty() ? "(unnamed)" : r.name) << "\n";
  os << "expression: " << r.expression << "\n";
  os << "runs: " << r.runs << "  seed: " << r.seed << "\n";
  os << "1st significant digits: {";
  for (std::size_t i = 0; i < 9; ++i) os << (i ? ", " : "") << one_decimal(r.percents.p[i]);
  os << "}  SSD = " << one_decimal(r.ssd) << "\n";
  os << "counts: {";
  for (std::size_t i = 0; i < 9; ++i) os << (i ? ", " : "") << r.tally.counts[i];
  os << "}  total " << r.tally.total << ", skipped " << r.tally.skipped << "\n";
  os << "POM = " << one_decimal(r.pom_empirical) << " (theoretical ";
  switch (r.pom_theoretical.kind) {
    case PomAnalysis::Kind::Value: os << one_decimal(r.pom_theoretical.value); break;
    case PomAnalysis::Kind::Unbounded: os << "unbounded"; break;
    case PomAnalysis::Kind::Unavailable: os << "unavailable"; break;
  }
  os << ")  OOM = " << one_decimal(r.oom) << "\n";
  os << "mean = " << r.mean << "  median = " << r.median << "  mean/median = "
     << one_decimal(r.skew_ratio) << "\n";
  os << "min = " << r.min << "  max = " << r.max << "\n";
  os << "verdict: ssd " << to_string(r.verdict.ssd_class) << ", pom "
     << to_string(r.verdict.pom_class) << "\n";
  return os.str();
}

std::string csv_format(const BenfordReport& r) {
  std::ostringstream os;
  os.precision(17);
  const auto expected = benford_expected();
  os << "digit,count,observed_pct,benford_pct\n";
  for (std::size_t i = 0; i < 9; ++i) {
    os << (i + 1) << "," << r.tally.counts[i] << "," << r.percents.p[i] << "," << expected[i]
       << "\n";
  }
  os << "metric,value\n";
  os << "name," << r.name << "\n";
  os << "runs," << r.runs << "\n";
  os << "seed," << r.seed << "\n";
  os << "skipped," << r.tally.skipped << "\n";
  os << "ssd," << r.ssd << "\n";
  os << "pom_empirical," << r.pom_empirical << "\n";
  os << "pom_theoretical,";
  switch (r.pom_theoretical.kind) {
    case PomAnalysis::Kind::Value: os << r.pom_theoretical.value; break;
    case PomAnalysis::Kind::Unbounded: os << "unbounded"; break;
    case PomAnalysis::Kind::Unavailable: os << "unavailable"; break;
  }
  os << "\n";
  os << "oom," << r.oom << "\n";
  os << "mean," << r.mean << "\n";
  os << "median," << r.median << "\n";
  os << "skew_ratio," << r.skew_ratio << "\n";
  os << "ssd_class," << to_string(r.verdict.ssd_class) << "\n";
  os << "pom_class," << to_string(r.verdict.pom_class) << "\n";
  return os.str();
}

}  // namespace

std::string report_to_json(const BenfordReport& r) { return to_json(r).dump(2) + "\n"; }

BenfordReport report_from_json(const std::string& json_text) {
  const auto j = ordered_json::parse(json_text);
  BenfordReport r;
  r.name = j.at("name").get<std::string>();
  r.expression = j.at("expression").get<std::string>();
  r.runs = j.at("runs").get<std::int64_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.tally.counts = j.at("tally").at("counts").get<std::array<std::int64_t, 9>>();
  r.tally.total = j.at("tally").at("total").get<std::int64_t>();
  r.tally.skipped = j.at("tally").at("skipped").get<std::int64_t>();
  r.percents.p = j.at("percents").get<std::array<double, 9>>();
  r.ssd = j.at("ssd").get<double>();
  r.pom_empirical = j.at("pom_empirical").get<double>();
  r.pom_theoretical = pom_theoretical_from_json(j.at("pom_theoretical"));
  r.oom = j.at("oom").get<double>();
  r.mean = j.at("mean").get<double>();
  r.median = j.at("median").get<double>();
  r.min = j.at("min").get<double>();
  r.max = j.at("max").get<double>();
  r.skew_ratio = j.at("skew_ratio").get<double>();
  r.log_hist.edges = j.at("log_hist").at("edges").get<std::vector<double>>();
  r.log_hist.counts = j.at("log_hist").at("counts").get<std::vector<std::int64_t>>();
  r.verdict.ssd_class = ssd_class_from(j.at("verdict").at("ssd_class").get<std::string>());
  r.verdict.pom_class = pom_class_from(j.at("verdict").at("pom_class").get<std::string>());
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return r;
}

std::string format_report(const BenfordReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Text: return text_format(report);
    case ReportFormat::Json: return report_to_json(report);
    case ReportFormat::Csv: return csv_format(report);
  }
  return {};
}

void write_report(const BenfordReport& report, ReportFormat format, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << format_report(report, format);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace benford
