#include "benford/experiments.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "benford/models.hpp"

#ifdef BENFORD_HAVE_OPENMP
#include <omp.h>
#endif

namespace benford {

namespace {

AcceptanceBand ssd_band(double lo, double hi) {
  AcceptanceBand b;
  b.ssd_lo = lo;
  b.ssd_hi = hi;
  return b;
}

ExperimentDef expr_def(std::string id, std::string description, std::string expr,
                       std::int64_t runs, AcceptanceBand band, std::uint64_t seed = 1) {
  ExperimentDef d;
  d.id = std::move(id);
  d.description = std::move(description);
  d.expr_text = std::move(expr);
  d.default_runs = runs;
  d.default_seed = seed;
  d.acceptance = std::move(band);
  return d;
}

ExperimentDef model_def(std::string id, std::string description,
                        std::function<std::vector<double>(std::int64_t, std::uint64_t)> model,
                        std::int64_t runs, AcceptanceBand band, std::uint64_t seed = 1) {
  ExperimentDef d;
  d.id = std::move(id);
  d.description = std::move(description);
  d.model = std::move(model);
  d.default_runs = runs;
  d.default_seed = seed;
  d.acceptance = std::move(band);
  return d;
}

std::string repeat_product(const std::string& factor, int count) {
  std::string out = factor;
  for (int i = 1; i < count; ++i) out += "*" + factor;
  return out;
}

std::string repeat_sum(const std::string& term, int count) {
  std::string out = term;
  for (int i = 1; i < count; ++i) out += " + " + term;
  return out;
}

std::vector<double> pooled_cfc(std::int64_t trajectories, std::uint64_t seed, int items,
                               int cycles) {
  std::vector<double> out(static_cast<std::size_t>(trajectories * items));
#ifdef BENFORD_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t t = 0; t < trajectories; ++t) {
    const auto traj = cfc_simulate(items, cycles, seed, static_cast<std::uint64_t>(t));
    for (int k = 0; k < items; ++k) {
      out[static_cast<std::size_t>(t * items + k)] = traj[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

std::function<std::vector<double>(std::int64_t, std::uint64_t)> growth_model(GrowthConfig cfg) {
  return [cfg](std::int64_t runs, std::uint64_t seed) {
    GrowthConfig c = cfg;
    c.cities = static_cast<int>(runs);
    return growth_snapshot(c, seed);
  };
}

std::function<std::vector<double>(std::int64_t, std::uint64_t)> additive_model(double delta) {
  return [delta](std::int64_t runs, std::uint64_t seed) {
    return additive_growth_snapshot(static_cast<int>(runs), ScalarSpec::dist(UniformCont{0, 50}),
                                    ScalarSpec::dist(UniformDisc{1, 100}), delta, seed);
  };
}

std::vector<ExperimentDef> build_registry() {
  std::vector<ExperimentDef> reg;

  // Two-factor products, 4000 runs each.
  reg.push_back(expr_def("two-uniforms-1", "product of two zero-based uniforms",
                         "U(0,1)*U(0,100)", 4000, ssd_band(30, 75)));
  reg.push_back(expr_def("two-uniforms-2", "product of two zero-based uniforms",
                         "U(0,30)*U(0,60)", 4000, ssd_band(8, 30), 2));
  reg.push_back(expr_def("two-uniforms-3", "product of two zero-based uniforms",
                         "U(0,33)*U(0,70)", 4000, ssd_band(25, 70)));
  reg.push_back(expr_def("two-normals-1", "product of two origin-crossing normals",
                         "N(2,9)*N(5,13)", 4000, ssd_band(0, 15)));
  reg.push_back(expr_def("two-normals-2", "product of two origin-crossing normals",
                         "N(4,7)*N(2,3)", 4000, ssd_band(0, 15)));
  reg.push_back(expr_def("two-normals-3", "product of two origin-crossing normals",
                         "N(2,4)*N(5,3)", 4000, ssd_band(0, 15)));
  reg.push_back(expr_def("two-exponentials-1", "product of two exponentials", "E(4)*E(11.0)",
                         4000, ssd_band(0, 8)));
  reg.push_back(expr_def("two-exponentials-2", "product of two exponentials", "E(5)*E(0.07)",
                         4000, ssd_band(0, 8)));
  reg.push_back(expr_def("two-exponentials-3", "product of two exponentials", "E(13)*E(0.2)",
                         4000, ssd_band(0, 8)));

  // Uniform product ladder: growing POM brings digits toward the logarithmic.
  {
    AcceptanceBand b = ssd_band(420, 620);
    b.pom_lo = 13.0 * 0.6;
    b.pom_hi = 13.0 * 1.4;
    reg.push_back(expr_def("fig7-u", "uniform product ladder, one factor", "U(3,40)", 35000, b));
    b = ssd_band(40, 80);
    b.pom_lo = 212.0 * 0.6;
    b.pom_hi = 212.0 * 1.4;
    reg.push_back(
        expr_def("fig7-uu", "uniform product ladder, two factors", "U(3,40)*U(2,33)", 35000, b));
    b = ssd_band(4, 16);
    b.pom_lo = 1076.0 * 0.6;
    b.pom_hi = 1076.0 * 1.4;
    reg.push_back(expr_def("fig7-uuu", "uniform product ladder, three factors",
                           "U(3,40)*U(2,33)*U(7,41)", 35000, b));
    b = ssd_band(0, 5);
    b.pom_lo = 5368.0 * 0.6;
    b.pom_hi = 5368.0 * 1.4;
    reg.push_back(expr_def("fig7-uuuu", "uniform product ladder, four factors",
                           "U(3,40)*U(2,33)*U(7,41)*U(1,29)", 35000, b, 4));
  }

  {
    AcceptanceBand b = ssd_band(12, 35);
    b.pom_lo = 1e4;
    b.pom_hi = 1e9;
    reg.push_back(expr_def("fig9-highpom", "single product of two huge-range uniforms",
                           "U(1,60777333)*U(1,30222888)", 35000, b));
  }
  {
    AcceptanceBand b = ssd_band(1000, 1400);
    b.pom_lo = 1.0;
    b.pom_hi = 15.3;  // theoretical cap for the six factors
    b.digit_bands.push_back({1, 5.0, 8.0});
    reg.push_back(expr_def("fig10-lowpom-six", "product of six narrow uniforms",
                           "U(4,7)*U(8,11)*U(5,7)*U(12,16)*U(237,549)*U(17,25)", 35000, b));
  }

  // Lognormal addition ladder: sums erode the logarithmic shape step by step.
  {
    const std::string terms[8] = {"LN(1.5,3.8)", "LN(1.3,4.0)", "LN(1.6,4.3)", "LN(1.2,4.2)",
                                  "LN(1.4,4.1)", "LN(1.1,4.4)", "LN(1.3,4.3)", "LN(1.5,4.5)"};
    const double lo[8] = {0, 0, 0, 15, 35, 55, 75, 110};
    const double hi[8] = {1, 15, 20, 55, 90, 125, 155, 230};
    std::string expr;
    for (int k = 0; k < 8; ++k) {
      expr = k == 0 ? terms[0] : expr + " + " + terms[static_cast<std::size_t>(k)];
      reg.push_back(expr_def("lognormal-sum-" + std::to_string(k + 1),
                             "lognormal addition ladder, " + std::to_string(k + 1) + " addend(s)",
                             expr, 35000, ssd_band(lo[k], hi[k])));
    }
  }
  {
    AcceptanceBand b = ssd_band(0, 3);
    b.skew_ratio_lo = 2.0;
    reg.push_back(expr_def("lognormal22-sum8", "eight heavy lognormals summed, still logarithmic",
                           repeat_sum("LN(2.2,5)", 8), 35000, b));
    b = ssd_band(900, 1800);
    b.skew_ratio_hi = 1.2;
    reg.push_back(expr_def("lognormal09-sum8", "eight light lognormals summed, near normal",
                           repeat_sum("LN(0.9,5)", 8), 35000, b));
  }
  reg.push_back(expr_def("kx-lowpom-sum6", "six narrow reciprocals summed",
                         repeat_sum("KX(10,100)", 6), 35000, ssd_band(1200, 2100)));
  reg.push_back(expr_def("kx-highpom-sum6", "six wide reciprocals summed",
                         repeat_sum("KX(1,1000000)", 6), 35000, ssd_band(0, 60)));

  // Tug of war: k multiplicands against a fixed number of addends.
  {
    const double lo[6] = {1000, 230, 150, 18, 8, 0};
    const double hi[6] = {1700, 440, 300, 65, 45, 15};
    for (int k = 1; k <= 6; ++k) {
      const std::string product = repeat_product("U(5,33)", k);
      reg.push_back(expr_def("tug-" + std::to_string(k),
                             std::to_string(k) + " multiplicand(s) vs 2 addends",
                             repeat_sum(product, 2), 35000,
                             ssd_band(lo[k - 1], hi[k - 1])));
    }
    reg.push_back(expr_def("tug-6x3", "6 multiplicands vs 3 addends",
                           repeat_sum(repeat_product("U(5,33)", 6), 3), 35000, ssd_band(25, 85)));
    reg.push_back(expr_def("tug-8x3", "8 multiplicands vs 3 addends",
                           repeat_sum(repeat_product("U(5,33)", 8), 3), 35000, ssd_band(0, 25)));
    reg.push_back(expr_def("tug-8x4", "8 multiplicands vs 4 addends",
                           repeat_sum(repeat_product("U(5,33)", 8), 4), 35000, ssd_band(18, 60)));
  }

  // The same four uniforms, added vs multiplied.
  {
    AcceptanceBand b = ssd_band(1200, 2100);
    b.pom_lo = 5.0;
    b.pom_hi = 202.0 / 16.0;  // theoretical sum cap
    reg.push_back(expr_def("addvsmult-sum", "four mid-range uniforms, added",
                           "U(6,75)+U(3,37)+U(5,55)+U(2,35)", 35000, b));
    b = ssd_band(0, 5);
    b.pom_lo = 1500;
    b.pom_hi = 5341875.0 / 180.0;  // theoretical product cap
    reg.push_back(expr_def("addvsmult-prod", "four mid-range uniforms, multiplied",
                           "U(6,75)*U(3,37)*U(5,55)*U(2,35)", 35000, b));
  }

  // POM shrink under repeated addition.
  {
    AcceptanceBand b;
    b.pom_lo = 3.47 * 0.85;
    b.pom_hi = 3.47 * 1.15;
    reg.push_back(expr_def("uniform8-sum-pom", "eight identical uniforms summed",
                           repeat_sum("U(3,17)", 8), 35000, b));
    b = AcceptanceBand{};
    b.pom_lo = 1.46 * 0.85;
    b.pom_hi = 1.46 * 1.15;
    reg.push_back(expr_def("normal8-sum-pom", "eight identical normals summed",
                           repeat_sum("N(30,4)", 8), 35000, b));
  }

  // Physics presets: short multiplicative measurement chains.
  reg.push_back(expr_def("physics-case1", "final speed: force * time / mass",
                         "U(0,10)*U(0,10)/U(0,10)", 35000, ssd_band(0, 25)));
  reg.push_back(expr_def("physics-case2", "stopping displacement: v^2 / (2 * (force/mass))",
                         "let v = U(0,50); v*v/(2*(U(0,10)/U(0,5)))", 35000, ssd_band(0, 25)));

  // Random linear combinations: price list times dice quantities.
  reg.push_back(expr_def("rlc-1dice", "single price * dice term", "U(0,100)*DICE(6)", 35000,
                         ssd_band(0, 40)));
  reg.push_back(expr_def("rlc-2dice", "two price * dice terms added",
                         repeat_sum("U(0,100)*DICE(6)", 2), 35000, ssd_band(40, 400)));
  reg.push_back(expr_def("rlc-3dice", "three price * dice terms added",
                         repeat_sum("U(0,100)*DICE(6)", 3), 35000, ssd_band(300, 800)));

  // Fragmentation / consolidation models.
  reg.push_back(model_def(
      "rock-breaking", "15 binary fragmentation stages of a unit mass (runs = stages)",
      [](std::int64_t runs, std::uint64_t seed) {
        return rock_breaking(static_cast<int>(runs), 1.0, seed);
      },
      15, ssd_band(0, 10)));
  reg.push_back(model_def(
      "cfc", "split/merge cycles over 5 items, 200 cycles, pooled trajectories (runs = pool size)",
      [](std::int64_t runs, std::uint64_t seed) { return pooled_cfc(runs, seed, 5, 200); }, 2000,
      ssd_band(0, 25)));

  // Growth snapshots.
  reg.push_back(expr_def("ross1", "random base and factor, 20 periods (runs = cities)",
                         "U(1,10)*U(1,10)^20", 10000, ssd_band(0, 15)));
  {
    GrowthConfig cfg;
    cfg.base = ScalarSpec::dist(UniformCont{1, 10});
    cfg.factor = ScalarSpec::dist(UniformCont{1, 10});
    cfg.periods = ScalarSpec::constant(5);
    cfg.factor_mode = FactorMode::RedrawnPerPeriod;
    reg.push_back(model_def("ross2", "factor redrawn every period, 5 periods (runs = cities)",
                            growth_model(cfg), 10000, ssd_band(0, 15)));
  }
  {
    GrowthConfig cfg;
    cfg.base = ScalarSpec::constant(1);
    cfg.factor = ScalarSpec::constant(1.11);
    cfg.periods = ScalarSpec::dist(UniformDisc{1, 300});
    AcceptanceBand b = ssd_band(0, 60);
    b.digit_bands.push_back({1, 24.0, 36.0});
    reg.push_back(model_def("growth-fixed-bf", "fixed base and factor, random age (runs = cities)",
                            growth_model(cfg), 242, b));
  }
  {
    GrowthConfig cfg;
    cfg.base = ScalarSpec::constant(1);
    cfg.factor = ScalarSpec::dist(UniformCont{1.00, 1.11});
    cfg.periods = ScalarSpec::constant(1700);
    reg.push_back(model_def("growth-fixed-bn", "fixed base and age, random factor (runs = cities)",
                            growth_model(cfg), 242, ssd_band(0, 120)));
  }
  {
    GrowthConfig cfg;
    cfg.base = ScalarSpec::dist(UniformCont{1, 10});
    cfg.factor = ScalarSpec::dist(UniformCont{1.00, 1.14});
    cfg.periods = ScalarSpec::dist(UniformDisc{1, 100});
    reg.push_back(model_def("growth-varied-bnf",
                            "random base, factor and age (runs = cities)", growth_model(cfg), 242,
                            ssd_band(0, 120)));
  }
  {
    GrowthConfig cfg;
    cfg.base = ScalarSpec::dist(UniformCont{0, 100});
    cfg.factor = ScalarSpec::constant(1.05);
    cfg.periods = ScalarSpec::constant(2500);
    reg.push_back(model_def("growth-fixed-fn",
                            "random base only: uniform times a constant (runs = cities)",
                            growth_model(cfg), 242, ssd_band(300, 900)));
  }
  reg.push_back(model_def("growth-additive-8", "fixed yearly addition of 8 (runs = cities)",
                          additive_model(8), 242, ssd_band(200, 1500)));
  reg.push_back(model_def("growth-additive-20", "fixed yearly addition of 20 (runs = cities)",
                          additive_model(20), 242, ssd_band(200, 1500)));
  reg.push_back(model_def("growth-additive-33", "fixed yearly addition of 33 (runs = cities)",
                          additive_model(33), 242, ssd_band(200, 1500)));

  // Deterministic table analyses.
  reg.push_back(model_def(
      "mult-table", "digits of the 10x10 multiplication table",
      [](std::int64_t, std::uint64_t) {
        std::vector<double> cells;
        cells.reserve(100);
        for (int i = 1; i <= 10; ++i) {
          for (int j = 1; j <= 10; ++j) cells.push_back(i * j);
        }
        return cells;
      },
      100, ssd_band(111.0, 111.3)));
  reg.push_back(model_def(
      "add-table", "digits of the 10x10 addition table, cell 20 excluded",
      [](std::int64_t, std::uint64_t) {
        std::vector<double> cells;
        cells.reserve(99);
        for (int i = 1; i <= 10; ++i) {
          for (int j = 1; j <= 10; ++j) {
            if (i + j != 20) cells.push_back(i + j);
          }
        }
        return cells;
      },
      99, ssd_band(1585.0, 1595.0)));

  return reg;
}

}  // namespace

const std::vector<ExperimentDef>& experiment_registry() {
  static const std::vector<ExperimentDef> registry = build_registry();
  return registry;
}

const ExperimentDef* find_experiment(std::string_view id) {
  for (const auto& def : experiment_registry()) {
    if (def.id == id) return &def;
  }
  return nullptr;
}

BenfordReport run_experiment(std::string_view id, const RunOverrides& overrides) {
  const ExperimentDef* def = find_experiment(id);
  if (def == nullptr) throw UnknownExperiment(id);

  const std::int64_t runs = overrides.runs.value_or(def->default_runs);
  const std::uint64_t seed = overrides.seed.value_or(def->default_seed);

  if (!def->expr_text.empty()) {
    SimulateOptions opt;
    opt.engine = overrides.engine;
    opt.name = def->id;
    opt.expression_text = def->expr_text;
    return simulate(*parse_expr(def->expr_text), runs, seed, opt);
  }

  const auto start = std::chrono::steady_clock::now();
  const auto values = def->model(runs, seed);
  auto report = build_report(def->id, "model:" + def->id, runs, seed, values,
                             PomAnalysis::unavailable());
  const auto stop = std::chrono::steady_clock::now();
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return report;
}

bool check_acceptance(const ExperimentDef& def, const BenfordReport& report, std::string* why) {
  bool ok = true;
  std::ostringstream notes;
  const auto& band = def.acceptance;
  auto require = [&](bool cond, auto&& describe) {
    if (!cond) {
      ok = false;
      describe(notes);
    }
  };
  if (band.ssd_lo) {
    require(report.ssd >= *band.ssd_lo,
            [&](std::ostream& os) { os << " ssd " << report.ssd << " < " << *band.ssd_lo << ";"; });
  }
  if (band.ssd_hi) {
    require(report.ssd <= *band.ssd_hi,
            [&](std::ostream& os) { os << " ssd " << report.ssd << " > " << *band.ssd_hi << ";"; });
  }
  if (band.pom_lo) {
    require(report.pom_empirical >= *band.pom_lo, [&](std::ostream& os) {
      os << " pom " << report.pom_empirical << " < " << *band.pom_lo << ";";
    });
  }
  if (band.pom_hi) {
    require(report.pom_empirical <= *band.pom_hi, [&](std::ostream& os) {
      os << " pom " << report.pom_empirical << " > " << *band.pom_hi << ";";
    });
  }
  if (band.skew_ratio_lo) {
    require(report.skew_ratio >= *band.skew_ratio_lo, [&](std::ostream& os) {
      os << " skew_ratio " << report.skew_ratio << " < " << *band.skew_ratio_lo << ";";
    });
  }
  if (band.skew_ratio_hi) {
    require(report.skew_ratio <= *band.skew_ratio_hi, [&](std::ostream& os) {
      os << " skew_ratio " << report.skew_ratio << " > " << *band.skew_ratio_hi << ";";
    });
  }
  for (const auto& db : band.digit_bands) {
    const double share = report.percents.p[static_cast<std::size_t>(db.digit - 1)];
    require(share >= db.lo && share <= db.hi, [&](std::ostream& os) {
      os << " digit-" << db.digit << " share " << share << " outside [" << db.lo << ", " << db.hi
         << "];";
    });
  }
  if (!ok && why != nullptr) *why += notes.str();
  return ok;
}

}  // namespace benford
