// Compares the serial reference engine against the OpenMP engine on a few
// representative expressions and verifies they produce identical output.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "benford/simulate.hpp"

#ifdef BENFORD_HAVE_OPENMP
#include <omp.h>
#endif

namespace {

double time_ms(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::int64_t runs = 2'000'000;
  if (argc > 1) runs = std::stoll(argv[1]);

#ifdef BENFORD_HAVE_OPENMP
  std::printf("openmp enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("openmp disabled; parallel engine falls back to serial\n");
#endif
  std::printf("%-44s %12s %12s %8s %7s\n", "expression", "serial ms", "parallel ms", "speedup",
              "match");

  const std::vector<std::string> cases = {
      "U(3,40)*U(2,33)*U(7,41)*U(1,29)",
      "LN(2.2,5) + LN(2.2,5) + LN(2.2,5) + LN(2.2,5)",
      "U(5,33)*U(5,33)*U(5,33)*U(5,33)*U(5,33)*U(5,33) + "
      "U(5,33)*U(5,33)*U(5,33)*U(5,33)*U(5,33)*U(5,33)",
      "let v = U(0,50); v*v/(2*(U(0,10)/U(0,5)))",
  };

  bool all_match = true;
  for (const auto& text : cases) {
    const auto expr = benford::parse_expr(text);
    std::vector<double> serial_out, parallel_out;
    const double serial_ms = time_ms([&] {
      serial_out = benford::realize_batch(*expr, runs, 1, benford::Engine::Serial);
    });
    const double parallel_ms = time_ms([&] {
      parallel_out = benford::realize_batch(*expr, runs, 1, benford::Engine::Parallel);
    });
    const bool match = serial_out == parallel_out;
    all_match = all_match && match;
    std::printf("%-44.44s %12.1f %12.1f %7.2fx %7s\n", text.c_str(), serial_ms, parallel_ms,
                serial_ms / parallel_ms, match ? "yes" : "NO");
  }
  return all_match ? 0 : 1;
}
