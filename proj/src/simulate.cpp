#include "benford/simulate.hpp"

#include <atomic>
#include <chrono>

#ifdef BENFORD_HAVE_OPENMP
#include <omp.h>
#endif

namespace benford {

namespace {

constexpr int kRetryCap = 100;

// One run: retries consume further draws from the run's own stream, so the
// result stays independent of every other run.
double realize_run(const ProcessExpr& expr, std::uint64_t seed, std::int64_t run,
                   std::string& error) {
  RngStream rng(seed, static_cast<std::uint64_t>(run));
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    try {
      return realize(expr, rng);
    } catch (const RealizeDomainError& e) {
      error = e.what();
    } catch (const std::exception& e) {  // exceptions must not cross the omp region
      error = e.what();
      return 0.0;
    }
  }
  return 0.0;  // caller aborts on non-empty error
}

}  // namespace

std::vector<double> realize_batch(const ProcessExpr& expr, std::int64_t runs, std::uint64_t seed,
                                  Engine engine, int threads) {
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  validate_bindings(expr);

  std::vector<double> values(static_cast<std::size_t>(runs));
  std::atomic<std::int64_t> failed_run{-1};
  std::string failure;

#ifdef BENFORD_HAVE_OPENMP
  if (engine == Engine::Parallel) {
    const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(team)
    for (std::int64_t r = 0; r < runs; ++r) {
      if (failed_run.load(std::memory_order_relaxed) >= 0) continue;
      std::string error;
      values[static_cast<std::size_t>(r)] = realize_run(expr, seed, r, error);
      if (!error.empty()) {
        std::int64_t expected = -1;
        if (failed_run.compare_exchange_strong(expected, r)) {
#pragma omp critical(benford_realize_failure)
          failure = error;
        }
      }
    }
  } else
#else
  (void)threads;
#endif
  {
    for (std::int64_t r = 0; r < runs; ++r) {
      std::string error;
      values[static_cast<std::size_t>(r)] = realize_run(expr, seed, r, error);
      if (!error.empty()) {
        failed_run.store(r);
        failure = error;
        break;
      }
    }
  }

  if (failed_run.load() >= 0) {
    throw SimulationError("run " + std::to_string(failed_run.load()) + " of expression '" +
                          to_string(expr) + "' hit " + std::to_string(kRetryCap) +
                          " consecutive domain errors: " + failure);
  }
  return values;
}

BenfordReport simulate(const ProcessExpr& expr, std::int64_t runs, std::uint64_t seed,
                       const SimulateOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto values = realize_batch(expr, runs, seed, options.engine, options.threads);
  auto report = build_report(
      options.name, options.expression_text.empty() ? to_string(expr) : options.expression_text,
      runs, seed, values, theoretical_pom(expr));
  const auto stop = std::chrono::steady_clock::now();
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return report;
}

}  // namespace benford
