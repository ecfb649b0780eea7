#include "benford/models.hpp"

#include <atomic>
#include <cmath>

#include "benford/digits.hpp"

#ifdef BENFORD_HAVE_OPENMP
#include <omp.h>
#endif

namespace benford {

double ScalarSpec::draw(RngStream& rng) const {
  if (const auto* c = std::get_if<double>(&value)) return *c;
  return sample(std::get<DistributionSpec>(value), rng);
}

namespace {

std::int64_t integer_periods(const ScalarSpec& periods, RngStream& rng) {
  const double n = periods.draw(rng);
  if (!(n >= 0.0) || n != std::floor(n)) {
    throw InvalidConfig("periods draw must be a non-negative integer, got " + std::to_string(n));
  }
  return static_cast<std::int64_t>(n);
}

}  // namespace

std::vector<double> growth_snapshot(const GrowthConfig& cfg, std::uint64_t seed) {
  if (cfg.cities < 1) throw InvalidConfig("cities must be >= 1");
  std::vector<double> snapshot(static_cast<std::size_t>(cfg.cities));
  std::atomic<bool> bad_factor{false};

#ifdef BENFORD_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int city = 0; city < cfg.cities; ++city) {
    RngStream rng(seed, static_cast<std::uint64_t>(city));
    const double base = cfg.base.draw(rng);
    std::int64_t periods;
    try {
      periods = integer_periods(cfg.periods, rng);
    } catch (const InvalidConfig&) {
      bad_factor = true;
      continue;
    }
    double value = base;
    if (cfg.factor_mode == FactorMode::ConstantPerCity) {
      const double f = cfg.factor.draw(rng);
      if (!(f > 0.0)) {
        bad_factor = true;
        continue;
      }
      value *= std::pow(f, static_cast<double>(periods));
    } else {
      for (std::int64_t p = 0; p < periods; ++p) {
        const double f = cfg.factor.draw(rng);
        if (!(f > 0.0)) {
          bad_factor = true;
          break;
        }
        value *= f;
      }
    }
    snapshot[static_cast<std::size_t>(city)] = value;
  }
  if (bad_factor) throw InvalidConfig("growth draws must give positive factors and integer periods");
  return snapshot;
}

std::vector<double> additive_growth_snapshot(int cities, const ScalarSpec& base,
                                             const ScalarSpec& periods, double delta,
                                             std::uint64_t seed) {
  if (cities < 1) throw InvalidConfig("cities must be >= 1");
  std::vector<double> snapshot(static_cast<std::size_t>(cities));
  std::atomic<bool> bad{false};
#ifdef BENFORD_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int city = 0; city < cities; ++city) {
    RngStream rng(seed, static_cast<std::uint64_t>(city));
    const double b = base.draw(rng);
    try {
      const std::int64_t n = integer_periods(periods, rng);
      snapshot[static_cast<std::size_t>(city)] = b + delta * static_cast<double>(n);
    } catch (const InvalidConfig&) {
      bad = true;
    }
  }
  if (bad) throw InvalidConfig("periods draws must be non-negative integers");
  return snapshot;
}

std::vector<double> rock_breaking(int stages, double initial_mass, std::uint64_t seed) {
  if (stages < 0) throw InvalidConfig("stages must be >= 0");
  if (stages > 24) throw InvalidConfig("stages > 24 would allocate over 16M pieces");
  if (!(initial_mass > 0.0)) throw InvalidConfig("initial mass must be positive");

  RngStream rng(seed, 0);
  std::vector<double> pieces{initial_mass};
  for (int stage = 0; stage < stages; ++stage) {
    std::vector<double> next;
    next.reserve(pieces.size() * 2);
    for (const double p : pieces) {
      const double u = rng.next_double();
      next.push_back(u * p);
      next.push_back((1.0 - u) * p);
    }
    pieces = std::move(next);
  }
  return pieces;
}

std::vector<double> cfc_simulate(int items, int cycles, std::uint64_t seed,
                                 std::uint64_t stream) {
  if (items < 2) throw InvalidConfig("cfc needs at least 2 items");
  if (cycles < 0) throw InvalidConfig("cycles must be >= 0");

  RngStream rng(seed, stream);
  std::vector<double> v(static_cast<std::size_t>(items), 1.0);
  for (int cycle = 0; cycle < cycles; ++cycle) {
    // fragmentation: one item becomes two
    const auto split = static_cast<std::size_t>(rng.next_int(0, items - 1));
    const double u = rng.next_double();
    const double whole = v[split];
    v[split] = u * whole;
    v.push_back((1.0 - u) * whole);
    // consolidation: two distinct items merge, restoring the count
    const auto i = static_cast<std::size_t>(rng.next_int(0, items));
    auto j = static_cast<std::size_t>(rng.next_int(0, items - 1));
    if (j >= i) ++j;
    v[i] += v[j];
    v[j] = v.back();  // also correct when i or j is the tail slot
    v.pop_back();
  }
  return v;
}

std::array<double, 5> cfc_paper_trajectory(const std::array<double, 7>& u) {
  const double u1 = u[0], u2 = u[1], u3 = u[2], u4 = u[3], u5 = u[4], u6 = u[5];
  return {
      (u1 * u2 + 2.0) * u6,
      (u1 * u2 + 2.0) * (1.0 - u6),
      u1 * u3 * u5 * (1.0 - u2) + (2.0 - u1) * (1.0 - u4),
      u1 * u3 * (1.0 - u2) * (1.0 - u5) + 1.0 + (2.0 - u1) * u4,
      u1 * (1.0 - u2) * (1.0 - u3),
  };
}

MultTableAnalysis multiplication_table_analysis() {
  MultTableAnalysis out{};
  std::array<std::int64_t, 9> digit_counts{};
  int total = 0;
  for (int i = 1; i <= 10; ++i) {
    for (int j = 1; j <= 10; ++j) {
      const int prod = i * j;
      out.decade_counts[static_cast<std::size_t>((prod - 1) / 10)] += 1;
      digit_counts[static_cast<std::size_t>(first_digit(prod) - 1)] += 1;
      ++total;
    }
  }
  for (std::size_t d = 0; d < 9; ++d) {
    out.digit_percents[d] = 100.0 * static_cast<double>(digit_counts[d]) / total;
  }
  return out;
}

std::array<int, 6> addition_table_analysis() {
  std::array<int, 6> sections{};
  for (int i = 1; i <= 10; ++i) {
    for (int j = 1; j <= 10; ++j) {
      const int sum = i + j;
      if (sum == 20) continue;  // the single excluded cell
      sections[static_cast<std::size_t>((sum - 2) / 3)] += 1;
    }
  }
  return sections;
}

namespace {

ExprPtr to_expr(const ScalarSpec& s) {
  if (const auto* c = std::get_if<double>(&s.value)) return make_const(*c);
  return make_dist(std::get<DistributionSpec>(s.value));
}

}  // namespace

ExprPtr physics_preset(int which_case, const ScalarSpec& a, const ScalarSpec& b,
                       const ScalarSpec& c) {
  if (which_case == 1) {
    // a = force, b = time, c = mass: (F * T) / M
    return make_binary(BinaryOp::Div, make_binary(BinaryOp::Mul, to_expr(a), to_expr(b)),
                       to_expr(c));
  }
  if (which_case == 2) {
    // a = initial speed (drawn once), b = force, c = mass: v^2 / (2 * (F/M))
    auto body = make_binary(
        BinaryOp::Div, make_binary(BinaryOp::Mul, make_var("v"), make_var("v")),
        make_binary(BinaryOp::Mul, make_const(2.0),
                    make_binary(BinaryOp::Div, to_expr(b), to_expr(c))));
    return make_let("v", to_expr(a), std::move(body));
  }
  throw InvalidConfig("physics case must be 1 or 2");
}

ExprPtr rlc_preset(const DistributionSpec& price, std::int64_t dice_faces, int terms) {
  if (terms < 1) throw InvalidConfig("rlc needs at least one term");
  if (dice_faces < 1) throw InvalidConfig("dice needs at least one face");
  auto one_term = [&] {
    return make_binary(BinaryOp::Mul, make_dist(price), make_dist(Dice{dice_faces}));
  };
  ExprPtr sum = one_term();
  for (int t = 1; t < terms; ++t) sum = make_binary(BinaryOp::Add, sum, one_term());
  return sum;
}

std::vector<double> power_transform(std::span<const double> values, int n) {
  if (n < 1) throw InvalidConfig("power must be >= 1");
  std::vector<double> out;
  out.reserve(values.size());
  for (const double v : values) {
    if (!(v > 0.0)) throw NonPositiveValue();
    out.push_back(std::pow(v, static_cast<double>(n)));
  }
  return out;
}

}  // namespace benford
