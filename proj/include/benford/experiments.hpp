#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "benford/report.hpp"
#include "benford/simulate.hpp"

namespace benford {

struct UnknownExperiment : std::runtime_error {
  explicit UnknownExperiment(std::string_view id)
      : std::runtime_error("unknown experiment: " + std::string(id)) {}
};

struct DigitBand {
  int digit;  // 1..9
  double lo;  // percent
  double hi;
};

// Pass bands for --check mode; every bound traces to a reported result or an
// oracle re-run at the default seed.
struct AcceptanceBand {
  std::optional<double> ssd_lo, ssd_hi;
  std::optional<double> pom_lo, pom_hi;
  std::optional<double> skew_ratio_lo, skew_ratio_hi;
  std::vector<DigitBand> digit_bands;
};

struct ExperimentDef {
  std::string id;
  std::string description;
  // Exactly one generator: a DSL expression simulated by the engine, or a
  // model routine producing the value set directly.
  std::string expr_text;
  std::function<std::vector<double>(std::int64_t runs, std::uint64_t seed)> model;
  std::int64_t default_runs = 35000;
  std::uint64_t default_seed = 1;
  AcceptanceBand acceptance;
};

// Definition order groups related experiments; ids are unique.
const std::vector<ExperimentDef>& experiment_registry();

const ExperimentDef* find_experiment(std::string_view id);

struct RunOverrides {
  std::optional<std::int64_t> runs;
  std::optional<std::uint64_t> seed;
  Engine engine = Engine::Parallel;
};

// Executes the experiment's generator with registry defaults unless
// overridden. Throws UnknownExperiment.
BenfordReport run_experiment(std::string_view id, const RunOverrides& overrides = {});

// True if the report sits inside the experiment's acceptance band; appends a
// note per violated bound when `why` is given.
bool check_acceptance(const ExperimentDef& def, const BenfordReport& report,
                      std::string* why = nullptr);

}  // namespace benford
