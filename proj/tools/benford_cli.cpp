// Command-line front door: analyze numeric files, simulate DSL expressions,
// reproduce registered experiments, list the registry.
//
// Exit codes: 0 ok/pass, 1 usage error, 2 data error, 3 check failure.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "benford/analyze.hpp"
#include "benford/experiments.hpp"
#include "benford/models.hpp"
#include "benford/simulate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitCheckFailed = 3;

benford::ReportFormat parse_format(const std::string& name) {
  if (name == "text") return benford::ReportFormat::Text;
  if (name == "json") return benford::ReportFormat::Json;
  if (name == "csv") return benford::ReportFormat::Csv;
  throw CLI::ValidationError("--format", "must be text, json or csv");
}

void emit(const benford::BenfordReport& report, const std::string& format,
          const std::string& out_path) {
  const auto fmt = parse_format(format);
  if (out_path.empty()) {
    std::cout << benford::format_report(report, fmt);
  } else {
    benford::write_report(report, fmt, out_path);
  }
}

std::shared_ptr<const std::vector<double>> load_empirical(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw benford::IoError("cannot open: " + path);
  auto values = std::make_shared<std::vector<double>>();
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    try {
      values->push_back(std::stod(line));
    } catch (const std::exception&) {
      // non-numeric lines in an EMP source are ignored
    }
  }
  if (values->empty()) throw benford::NoNumericData();
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"first-digit analysis and stochastic process simulation"};
  app.require_subcommand(1);
  app.fallthrough();  // --format / --out may follow the subcommand

  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "output format: text|json|csv")->capture_default_str();
  app.add_option("--out", out_path, "write the report to this path instead of stdout");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "first-digit report over a numeric file");
  std::string analyze_path;
  int column = 0;
  std::string delimiter = ",";
  analyze->add_option("path", analyze_path, "input file")->required();
  analyze->add_option("--column", column, "1-based column to analyze (default: every field)");
  analyze->add_option("--delimiter", delimiter, "field delimiter (default: comma)");

  // simulate
  auto* simulate_cmd = app.add_subcommand("simulate", "run a random-process expression");
  std::string expr_text;
  std::int64_t runs = 35000;
  std::uint64_t seed = 1;
  int threads = 0;
  bool serial = false;
  std::string emp_path;
  simulate_cmd->add_option("--expr", expr_text, "process expression, e.g. 'U(3,40)*U(2,33)'")
      ->required();
  simulate_cmd->add_option("--runs", runs, "realizations")->capture_default_str();
  simulate_cmd->add_option("--seed", seed, "stream seed")->capture_default_str();
  simulate_cmd->add_option("--threads", threads, "worker threads (0 = default)");
  simulate_cmd->add_flag("--serial", serial, "use the serial reference engine");
  simulate_cmd->add_option("--emp-file", emp_path, "value file backing EMP() leaves");

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "run registered experiments");
  std::string experiment_id;
  bool all = false;
  bool check = false;
  std::int64_t override_runs = 0;
  std::uint64_t override_seed = 0;
  bool seed_given = false;
  reproduce->add_option("id", experiment_id, "experiment id (see 'list')");
  reproduce->add_flag("--all", all, "run the whole registry");
  reproduce->add_flag("--check", check, "verify acceptance bands; exit 3 on failure");
  reproduce->add_option("--runs", override_runs, "override run count");
  reproduce
      ->add_option("--seed", override_seed,
                   "override stream seed (default: per-experiment registry seed)")
      ->each([&](const std::string&) { seed_given = true; });

  // list
  app.add_subcommand("list", "list registered experiments");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      benford::AnalyzeOptions opt;
      if (column > 0) opt.column = column;
      if (!delimiter.empty()) opt.delimiter = delimiter[0];
      emit(benford::analyze_file(analyze_path, opt), format, out_path);
      return kExitOk;
    }

    if (simulate_cmd->parsed()) {
      benford::ParseOptions popt;
      if (!emp_path.empty()) popt.empirical_values = load_empirical(emp_path);
      const auto expr = benford::parse_expr(expr_text, popt);
      benford::SimulateOptions opt;
      opt.engine = serial ? benford::Engine::Serial : benford::Engine::Parallel;
      opt.threads = threads;
      opt.expression_text = expr_text;
      emit(benford::simulate(*expr, runs, seed, opt), format, out_path);
      return kExitOk;
    }

    if (reproduce->parsed()) {
      if (all != experiment_id.empty()) {  // exactly one of id / --all
        std::cerr << "reproduce needs an experiment id or --all\n";
        return kExitUsage;
      }
      std::vector<const benford::ExperimentDef*> defs;
      if (all) {
        for (const auto& def : benford::experiment_registry()) defs.push_back(&def);
      } else {
        const auto* def = benford::find_experiment(experiment_id);
        if (def == nullptr) {
          std::cerr << "unknown experiment: " << experiment_id << "\n";
          return kExitData;
        }
        defs.push_back(def);
      }

      benford::RunOverrides overrides;
      if (override_runs > 0) overrides.runs = override_runs;
      if (seed_given) overrides.seed = override_seed;

      // Reports are buffered per experiment and emitted in registry order.
      bool all_ok = true;
      const auto fmt = parse_format(format);
      std::ostringstream buffered;
      for (const auto* def : defs) {
        const auto report = benford::run_experiment(def->id, overrides);
        buffered << benford::format_report(report, fmt);
        if (check) {
          std::string why;
          const bool ok = benford::check_acceptance(*def, report, &why);
          all_ok = all_ok && ok;
          buffered << "[" << (ok ? "PASS" : "FAIL") << "] " << def->id;
          if (!ok) buffered << " --" << why;
          buffered << "\n";
        }
        if (fmt == benford::ReportFormat::Text) buffered << "\n";
      }
      if (out_path.empty()) {
        std::cout << buffered.str();
      } else {
        std::ofstream out(out_path);
        if (!out) throw benford::IoError("cannot open for writing: " + out_path);
        out << buffered.str();
      }
      return all_ok ? kExitOk : kExitCheckFailed;
    }

    // list
    auto sorted = benford::experiment_registry();
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    for (const auto& def : sorted) {
      std::cout << def.id << "\t" << def.default_runs << " runs\tseed " << def.default_seed
                << "\t" << def.description << "\n";
    }
    return kExitOk;
  } catch (const benford::ParseError& e) {
    std::cerr << "expression error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const benford::UnknownExperiment& e) {
    std::cerr << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}
