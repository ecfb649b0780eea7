#include "benford/digits.hpp"

#include <charconv>
#include <cmath>

namespace benford {

namespace {

// String path: shortest round-trip decimal form. This is what any decimal
// rendering of the value shows, and it makes the doubles stored for 1e-12 or
// 1e+200 (whose exact binary expansions start 9.99...) report digit 1 the way
// the decimal they were parsed from does.
int first_digit_string(double a) {
  char buf[40];
  const auto result = std::to_chars(buf, buf + sizeof buf, a);
  for (const char* p = buf; p != result.ptr && *p != 'e' && *p != 'E'; ++p) {
    if (*p >= '1' && *p <= '9') return *p - '0';
  }
  return kNoDigit;
}

}  // namespace

int first_digit(double x) {
  if (x == 0.0 || !std::isfinite(x)) return kNoDigit;
  const double a = std::fabs(x);
  // pow(10, e) loses precision next to the subnormal range and overflows
  // past it; both tails go straight to the string path.
  if (a < 1e-290 || a > 1e290) return first_digit_string(a);

  const int e = static_cast<int>(std::floor(std::log10(a)));
  double scaled = a / std::pow(10.0, e);
  if (scaled >= 10.0) {
    scaled /= 10.0;
  } else if (scaled < 1.0) {
    scaled *= 10.0;
  }
  const int d = static_cast<int>(scaled);
  // Within rounding distance of a digit boundary the fast path cannot be
  // trusted; defer to the string representation.
  if (std::fabs(scaled - std::round(scaled)) < 1e-9 || d < 1 || d > 9) {
    return first_digit_string(a);
  }
  return d;
}

int first_digit_text(std::string_view token) {
  for (const char c : token) {
    if (c >= '1' && c <= '9') return c - '0';
    if (c == 'e' || c == 'E') break;  // exponent cannot change the first digit
  }
  return kNoDigit;
}

DigitTally tally(std::span<const double> values) {
  DigitTally t;
  for (const double v : values) t.add(first_digit(v));
  return t;
}

DigitPercents percents(const DigitTally& t) {
  if (t.total == 0) throw EmptyTally();
  DigitPercents out;
  for (std::size_t i = 0; i < out.p.size(); ++i) {
    out.p[i] = 100.0 * static_cast<double>(t.counts[i]) / static_cast<double>(t.total);
  }
  return out;
}

}  // namespace benford
