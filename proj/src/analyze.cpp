#include "benford/analyze.hpp"

#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <vector>

namespace benford {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_number(std::string_view token) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

BenfordReport analyze_file(const std::string& path, const AnalyzeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);

  DigitTally text_tally;        // digits read from token text
  std::vector<double> values;   // parsed numbers for the numeric metrics
  std::string line;
  while (std::getline(in, line)) {
    std::string_view rest = line;
    if (trim(rest).empty() || trim(rest).front() == '#') continue;

    int field = 0;
    while (!rest.empty() || field == 0) {
      const auto cut = rest.find(options.delimiter);
      std::string_view token = trim(rest.substr(0, cut));
      rest = (cut == std::string_view::npos) ? std::string_view{} : rest.substr(cut + 1);
      ++field;
      if (options.column && *options.column != field) {
        if (cut == std::string_view::npos) break;
        continue;
      }
      if (token.empty()) {
        if (cut == std::string_view::npos) break;
        continue;
      }
      if (const auto num = parse_number(token)) {
        values.push_back(*num);
        text_tally.add(std::isfinite(*num) && *num != 0.0 ? first_digit_text(token) : kNoDigit);
      } else {
        text_tally.add(kNoDigit);  // non-numeric token: skipped and counted
      }
      if (cut == std::string_view::npos) break;
    }
  }

  if (values.empty() || text_tally.total == 0) throw NoNumericData();

  BenfordReport r;
  try {
    r = build_report(path, "file:" + path, static_cast<std::int64_t>(values.size()), 0, values,
                     PomAnalysis::unavailable(), &text_tally);
  } catch (const EmptyResult&) {
    throw NoNumericData();
  }
  const auto stop = std::chrono::steady_clock::now();
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return r;
}

}  // namespace benford
