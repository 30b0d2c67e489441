// Copyright 2026 The revtri Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// revtri: command-line front end.
//
//   revtri check <file> [--out <path>]
//   revtri fuzz --bound <id> --trials <n> --seed <n> [--dim <d>] [--field real|complex]
//               [--n-family <n>] [--out <path>] [--reports <path>]
//   revtri extremal --bound <id> [param flags] [--out <path>]
//   revtri sweep --bound <id> --param <name> --from <x> --to <y> --steps <k> --emit csv
//               [--base <file>]
//
// Exit codes: 0 all hold, 1 bound violated, 2 hypothesis failed, 3 input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "revtri/error.hpp"
#include "revtri/fuzz.hpp"
#include "revtri/scenario.hpp"
#include "revtri/sweep.hpp"

namespace {

using namespace revtri;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("failed writing " + path);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void emit_report(const RunReport& report, const std::string& out_path) {
  std::cout << report_csv_header() << report_to_csv_rows(report);
  if (out_path.empty()) return;
  if (ends_with(out_path, ".csv")) {
    write_file(out_path, report_csv_header() + report_to_csv_rows(report));
  } else {
    write_file(out_path, report_to_json(report).dump(2) + "\n");
  }
}

struct CheckArgs {
  std::string file;
  std::string out;
};

int do_check(const CheckArgs& args) {
  const Scenario s = load_scenario(args.file);
  const RunReport report = run(s);
  emit_report(report, args.out);
  return exit_code(report);
}

struct FuzzArgs {
  std::string bound;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t dim = 4;
  std::string field = "real";
  std::size_t family = 3;
  std::size_t panels = kDefaultPanels;
  std::string out;
  std::string reports;
};

int do_fuzz(const FuzzArgs& args) {
  FuzzConfig config;
  config.bound = bound_from_string(args.bound);
  config.trials = args.trials;
  config.seed = args.seed;
  config.dim = args.dim;
  config.field = field_from_string(args.field);
  config.family_size = args.family;
  config.panels = args.panels;
  config = normalized(config);

  std::ofstream lines;
  if (!args.reports.empty()) {
    lines.open(args.reports, std::ios::binary);
    if (!lines) throw InputError("cannot write " + args.reports);
  }
  const FuzzSummary summary = fuzz(config, [&](const FuzzCase&, const RunReport& report) {
    if (lines.is_open()) lines << report_to_json(report).dump() << '\n';
  });

  std::cout << "bound,trials,holds,violated,hypothesis_failed,worst_margin_plus_budget,"
               "chain_violations,negative_defects\n"
            << to_string(summary.bound) << ',' << summary.trials << ',' << summary.holds << ','
            << summary.violated << ',' << summary.hypothesis_failed << ','
            << format_number(summary.worst_margin) << ',' << summary.chain_violations << ','
            << summary.negative_defects << '\n';
  if (summary.printed_margin_min) {
    std::cout << "printed_form_margin_min,printed_form_margin_max,printed_form_negative\n"
              << format_number(*summary.printed_margin_min) << ','
              << format_number(*summary.printed_margin_max) << ','
              << summary.printed_margin_negative << '\n';
  }
  if (!args.out.empty()) write_file(args.out, summary_to_json(summary).dump(2) + "\n");
  if (summary.violated > 0) return kExitViolated;
  if (summary.hypothesis_failed > 0) return kExitHypothesisFailed;
  return kExitHolds;
}

struct ExtremalArgs {
  std::string bound;
  std::optional<double> rho, m, M, k, alpha, r;
  double c = 1.0;
  std::size_t n = 2;
  std::size_t dim = 2;
  std::string field = "real";
  double a = 0.0;
  double b = 1.0;
  std::size_t panels = kDefaultPanels;
  std::string out;
};

int do_extremal(const ExtremalArgs& args) {
  ExtremalRequest req;
  req.bound = bound_from_string(args.bound);
  req.params.rho = args.rho;
  req.params.lower = args.m;
  req.params.upper = args.M;
  req.params.k = args.k;
  req.params.alpha = args.alpha;
  req.params.radius = args.r;
  req.scale = args.c;
  req.family_size = args.n;
  req.dim = std::max(args.dim, req.bound == BoundId::kFamilyDominance ? args.n : args.dim);
  req.field = field_from_string(args.field);
  req.a = args.a;
  req.b = args.b;
  req.panels = args.panels;
  const Scenario s = make_extremal_scenario(req);
  if (!args.out.empty()) write_file(args.out, scenario_to_json(s).dump(2) + "\n");
  const RunReport report = run(s);
  std::cout << report_csv_header() << report_to_csv_rows(report);
  return exit_code(report);
}

struct SweepArgs {
  std::string bound;
  std::string param;
  double from = 0.0;
  double to = 0.0;
  std::size_t steps = 1;
  std::string emit = "csv";
  std::string base;
};

int do_sweep(const SweepArgs& args) {
  SweepRequest req;
  req.bound = bound_from_string(args.bound);
  req.parameter = args.param;
  req.from = args.from;
  req.to = args.to;
  req.steps = args.steps;
  if (!args.base.empty()) req.base = load_scenario(args.base);
  const SweepTable table = sweep(req);
  for (const auto& w : table.warnings) std::cerr << "warning: " << w << '\n';
  std::cout << sweep_csv(table);
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical certification of reverse triangle inequalities"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Evaluate every bound of a scenario file");
  check_cmd->add_option("file", check.file, "Scenario JSON file")->required();
  check_cmd->add_option("--out", check.out, "Write the report (.csv for CSV, else JSON)");

  FuzzArgs fz;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Seeded hypothesis-by-construction fuzzing");
  fuzz_cmd->add_option("--bound", fz.bound, "Bound id")->required();
  fuzz_cmd->add_option("--trials", fz.trials, "Number of trials")->required()->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--seed", fz.seed, "Seed")->required();
  fuzz_cmd->add_option("--dim", fz.dim, "Dimension d")->capture_default_str();
  fuzz_cmd->add_option("--field", fz.field, "real or complex")
      ->check(CLI::IsMember({"real", "complex"}))
      ->capture_default_str();
  fuzz_cmd->add_option("--n-family", fz.family, "Family size for family bounds")
      ->capture_default_str();
  fuzz_cmd->add_option("--panels", fz.panels, "Quadrature panels N")->capture_default_str();
  fuzz_cmd->add_option("--out", fz.out, "Write the summary JSON");
  fuzz_cmd->add_option("--reports", fz.reports, "Write one JSON report per trial (JSON lines)");

  ExtremalArgs ex;
  auto* ex_cmd = app.add_subcommand("extremal", "Build and run an equality-case scenario");
  ex_cmd->add_option("--bound", ex.bound, "Bound id")->required();
  ex_cmd->add_option("--rho", ex.rho, "COR_2_2 radius");
  ex_cmd->add_option("--m", ex.m, "Lower band value");
  ex_cmd->add_option("--M", ex.M, "Upper band value");
  ex_cmd->add_option("--k", ex.k, "THM_2_1 dominance constant");
  ex_cmd->add_option("--alpha", ex.alpha, "THM_2_1 component along e");
  ex_cmd->add_option("--r", ex.r, "COR_2_4 radius");
  ex_cmd->add_option("--c", ex.c, "THM_3_1 scale")->capture_default_str();
  ex_cmd->add_option("--n", ex.n, "THM_3_1 family size")->capture_default_str();
  ex_cmd->add_option("--dim", ex.dim, "Dimension d")->capture_default_str();
  ex_cmd->add_option("--field", ex.field, "real or complex")
      ->check(CLI::IsMember({"real", "complex"}))
      ->capture_default_str();
  ex_cmd->add_option("--a", ex.a, "Interval start")->capture_default_str();
  ex_cmd->add_option("--b", ex.b, "Interval end")->capture_default_str();
  ex_cmd->add_option("--panels", ex.panels, "Quadrature panels N")->capture_default_str();
  ex_cmd->add_option("--out", ex.out, "Write the scenario JSON");

  SweepArgs sw;
  auto* sw_cmd = app.add_subcommand("sweep", "Sweep one parameter and tabulate the bound");
  sw_cmd->add_option("--bound", sw.bound, "Bound id")->required();
  sw_cmd->add_option("--param", sw.param, "Parameter name")->required();
  sw_cmd->add_option("--from", sw.from, "First value")->required();
  sw_cmd->add_option("--to", sw.to, "Last value")->required();
  sw_cmd->add_option("--steps", sw.steps, "Number of values")->required()->check(CLI::PositiveNumber);
  sw_cmd->add_option("--emit", sw.emit, "Output format")->check(CLI::IsMember({"csv"}))->capture_default_str();
  sw_cmd->add_option("--base", sw.base, "Base scenario (default: extremal recipe)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*check_cmd) return do_check(check);
    if (*fuzz_cmd) return do_fuzz(fz);
    if (*ex_cmd) return do_extremal(ex);
    if (*sw_cmd) return do_sweep(sw);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.path() << ": " << e.reason() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
