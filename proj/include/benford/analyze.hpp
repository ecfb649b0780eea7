#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "benford/report.hpp"

namespace benford {

struct NoNumericData : std::runtime_error {
  NoNumericData() : std::runtime_error("no numeric data found") {}
};

struct AnalyzeOptions {
  std::optional<int> column;  // 1-based; unset analyzes every field
  char delimiter = ',';
};

// Benford report over the numbers in a delimited text file. Lines starting
// with '#' are comments; digit extraction reads the decimal token text, so
// it is exact even past double precision. Non-numeric tokens in scope are
// counted as skipped. Throws IoError / NoNumericData.
BenfordReport analyze_file(const std::string& path, const AnalyzeOptions& options = {});

}  // namespace benford
