#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "benford/distribution.hpp"
#include "benford/expr.hpp"

namespace benford {

struct InvalidConfig : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonPositiveValue : std::invalid_argument {
  NonPositiveValue() : std::invalid_argument("values must be positive") {}
};

// A model parameter that is either a fixed constant or a sampled draw.
struct ScalarSpec {
  std::variant<double, DistributionSpec> value;

  static ScalarSpec constant(double v) { return {v}; }
  static ScalarSpec dist(DistributionSpec d) { return {std::move(d)}; }

  bool is_constant() const { return std::holds_alternative<double>(value); }
  double draw(RngStream& rng) const;  // constants consume no randomness
};

enum class FactorMode { ConstantPerCity, RedrawnPerPeriod };

// B * F^N growth snapshot configuration; one value per city, histories are
// never kept. Fractional population values are allowed.
struct GrowthConfig {
  int cities = 242;
  ScalarSpec base = ScalarSpec::constant(1.0);                        // B
  ScalarSpec factor = ScalarSpec::constant(1.0);                      // F, draws must be > 0
  ScalarSpec periods = ScalarSpec::constant(0.0);                     // N, integer-valued, >= 0
  FactorMode factor_mode = FactorMode::ConstantPerCity;
};

// Final-period snapshot across cities; city index doubles as stream index.
std::vector<double> growth_snapshot(const GrowthConfig& cfg, std::uint64_t seed);

// Additive counterpart: per city B + delta * N.
std::vector<double> additive_growth_snapshot(int cities, const ScalarSpec& base,
                                             const ScalarSpec& periods, double delta,
                                             std::uint64_t seed);

// Binary fragmentation: every piece splits into (u*p, (1-u)*p) each stage;
// returns 2^stages pieces whose sum equals initial_mass.
std::vector<double> rock_breaking(int stages, double initial_mass, std::uint64_t seed);

// Consolidation/fragmentation cycles over `items` quantities starting at 1:
// each cycle splits one uniformly chosen item, then merges two distinct
// uniformly chosen items, keeping the count fixed. Total is conserved.
// `stream` selects an independent trajectory under the same seed.
std::vector<double> cfc_simulate(int items, int cycles, std::uint64_t seed,
                                 std::uint64_t stream = 0);

// The five closed-form item values of the worked consolidation/fragmentation
// trajectory, evaluated at a given u-vector; they always sum to 5.
std::array<double, 5> cfc_paper_trajectory(const std::array<double, 7>& u);

struct MultTableAnalysis {
  std::array<int, 10> decade_counts;    // [1,10], [11,20], ..., [91,100]
  std::array<double, 9> digit_percents;
};

// Deterministic analysis of the 10x10 multiplication table.
MultTableAnalysis multiplication_table_analysis();

// Deterministic analysis of the 10x10 addition table with the single cell 20
// excluded: counts into {2,3,4}, {5,6,7}, ..., {17,18,19} out of 99.
std::array<int, 6> addition_table_analysis();

// Case 1: final speed = force * time / mass, three independent quantities.
// Case 2: displacement = v0^2 / (2 * (force / mass)), v0 drawn once.
ExprPtr physics_preset(int which_case, const ScalarSpec& a, const ScalarSpec& b,
                       const ScalarSpec& c);

// Sum of `terms` independent price*dice products.
ExprPtr rlc_preset(const DistributionSpec& price, std::int64_t dice_faces, int terms);

// Elementwise v^n over positive values, n >= 1.
std::vector<double> power_transform(std::span<const double> values, int n);

}  // namespace benford
