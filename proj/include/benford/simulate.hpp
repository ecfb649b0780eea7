#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "benford/expr.hpp"
#include "benford/report.hpp"

namespace benford {

enum class Engine { Serial, Parallel };

struct SimulationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SimulateOptions {
  Engine engine = Engine::Parallel;
  int threads = 0;  // 0 = runtime default
  std::string name;
  std::string expression_text;  // printed form used when empty
};

// Realizations of `expr`, one per run, stream index = run index. A run that
// hits the per-run retry cap (100 consecutive domain errors) aborts the
// whole batch with diagnostics. Output is identical for both engines and
// any thread count.
std::vector<double> realize_batch(const ProcessExpr& expr, std::int64_t runs, std::uint64_t seed,
                                  Engine engine = Engine::Parallel, int threads = 0);

// Full pipeline: realize, tally, measure, classify.
BenfordReport simulate(const ProcessExpr& expr, std::int64_t runs, std::uint64_t seed,
                       const SimulateOptions& options = {});

}  // namespace benford
