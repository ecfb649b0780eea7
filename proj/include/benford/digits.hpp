#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>

namespace benford {

// Sentinel for values with no defined first digit (zero, NaN, infinities).
inline constexpr int kNoDigit = 0;

// Leading nonzero decimal digit of |x|, or kNoDigit.
//
// Fast path scales the value by a power of ten and corrects by at most one
// decade; results within 1e-9 of a digit boundary fall back to the shortest
// round-trip decimal form. Powers of ten therefore always report digit 1,
// including the ones (1e-12, 1e+200, ...) whose nearest double sits just
// below the true power, and the answer agrees with a 17-significant-digit
// decimal scan on everything that is not such a boundary neighbor.
int first_digit(double x);

// First digit straight from a decimal token ("-0.0042" -> 4); exponent
// suffixes are ignored since powers of ten never change the first digit.
// Returns kNoDigit when the token has no nonzero digit.
int first_digit_text(std::string_view token);

struct DigitTally {
  std::array<std::int64_t, 9> counts{};  // counts[d-1] = occurrences of digit d
  std::int64_t total = 0;                // sum of counts
  std::int64_t skipped = 0;              // values with no defined first digit

  void add(int digit) {
    if (digit == kNoDigit) {
      ++skipped;
    } else {
      ++counts[static_cast<std::size_t>(digit - 1)];
      ++total;
    }
  }

  // Componentwise sum; associative and commutative, safe for parallel merge.
  void merge(const DigitTally& other) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
    total += other.total;
    skipped += other.skipped;
  }

  bool operator==(const DigitTally&) const = default;
};

DigitTally tally(std::span<const double> values);

struct DigitPercents {
  std::array<double, 9> p{};  // percent format, sums to 100 when total > 0

  bool operator==(const DigitPercents&) const = default;
};

struct EmptyTally : std::runtime_error {
  EmptyTally() : std::runtime_error("digit tally has no counted values") {}
};

// p[d] = 100 * counts[d] / total. Throws EmptyTally when total == 0.
DigitPercents percents(const DigitTally& t);

}  // namespace benford
