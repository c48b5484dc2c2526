#include "sfcrel/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "sfcrel/analytic.hpp"
#include "sfcrel/montecarlo.hpp"
#include "sfcrel/report.hpp"
#include "sfcrel/search.hpp"
#include "sfcrel/sweep.hpp"

namespace sfcrel::cli {

namespace {

// Bad flag values; reported with exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ScenarioArgs {
  std::string strategy;
  int n = 1;
  int psi = 1;
  int n_servers = 1;
  std::string psi_split;
  int sigma = 0;
  int m = 0;
  std::string phi = "1";
  std::string phi_r = "1";
  std::string upsilon = "1";
  std::string upsilon_r = "1";
};

struct OutputArgs {
  std::string out_path;
  std::string format = "csv";
};

void add_scenario_options(CLI::App* cmd, ScenarioArgs& a) {
  cmd->add_option("--strategy", a.strategy, "cv-none, dv-none, asbn, asbs, anbn, anbs, vnf-only")->required();
  cmd->add_option("--n", a.n, "parallel sub-flows");
  cmd->add_option("--psi", a.psi, "VNFs per sub-SFC");
  cmd->add_option("--N", a.n_servers, "active servers per sub-flow (dVNF)");
  cmd->add_option("--psi-split", a.psi_split, "VNFs per server, comma separated");
  cmd->add_option("--sigma", a.sigma, "backup copies per backup server");
  cmd->add_option("--m", a.m, "backup servers (aNbN)");
  cmd->add_option("--phi", a.phi, "active server reliability");
  cmd->add_option("--phi-r", a.phi_r, "backup server reliability");
  cmd->add_option("--upsilon", a.upsilon, "active VNF reliability");
  cmd->add_option("--upsilon-r", a.upsilon_r, "backup VNF reliability");
}

void add_output_options(CLI::App* cmd, OutputArgs& o) {
  cmd->add_option("--out", o.out_path, "output file (default stdout)");
  cmd->add_option("--format", o.format, "csv or json");
}

double parse_probability(const std::string& text, const char* flag) {
  if (text.find('%') != std::string::npos) {
    throw UsageError(std::string(flag) + ": write probabilities as plain decimals (0.999), not percentages");
  }
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw UsageError(std::string(flag) + ": '" + text + "' is not a number");
  }
  return value;
}

Scenario to_scenario(const ScenarioArgs& a) {
  const auto strategy = parse_strategy(a.strategy);
  if (!strategy) throw UsageError("unknown strategy '" + a.strategy + "'");
  Scenario s;
  s.strategy = *strategy;
  s.chain.n = a.n;
  s.chain.psi_total = a.psi;
  s.chain.n_servers = a.n_servers;
  if (!a.psi_split.empty()) {
    std::stringstream items(a.psi_split);
    for (std::string item; std::getline(items, item, ',');) {
      char* end = nullptr;
      const long value = std::strtol(item.c_str(), &end, 10);
      if (item.empty() || end != item.c_str() + item.size()) {
        throw UsageError("--psi-split: '" + item + "' is not an integer");
      }
      s.chain.psi_split.push_back(static_cast<int>(value));
    }
  }
  s.backup.sigma = a.sigma;
  s.backup.m = a.m;
  s.params.phi = parse_probability(a.phi, "--phi");
  s.params.phi_r = parse_probability(a.phi_r, "--phi-r");
  s.params.upsilon = parse_probability(a.upsilon, "--upsilon");
  s.params.upsilon_r = parse_probability(a.upsilon_r, "--upsilon-r");
  return s;
}

Scenario valid_scenario(const ScenarioArgs& a) {
  Scenario s = to_scenario(a);
  if (const auto check = validate(s); !check) throw UsageError(check.message());
  return s;
}

OutputFormat output_format(const OutputArgs& o) {
  const auto format = parse_format(o.format);
  if (!format) throw UsageError("--format must be csv or json");
  return *format;
}

// Writes to --out when given, otherwise to `out`.
template <typename Emit>
void emit(const OutputArgs& o, std::ostream& out, Emit&& write) {
  if (o.out_path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(o.out_path);
  if (!file) throw UsageError("cannot open " + o.out_path + " for writing");
  write(file);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Service success and backup provisioning for parallelized VNF chains"};
  app.require_subcommand(1);

  ScenarioArgs scenario_args;
  OutputArgs output_args;

  auto* eval_cmd = app.add_subcommand("eval", "closed-form service success of one scenario");
  add_scenario_options(eval_cmd, scenario_args);
  add_output_options(eval_cmd, output_args);

  std::uint64_t trials = 1000000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  bool strict = false;
  auto* simulate_cmd = app.add_subcommand("simulate", "closed form plus Monte Carlo estimate");
  add_scenario_options(simulate_cmd, scenario_args);
  add_output_options(simulate_cmd, output_args);
  simulate_cmd->add_option("--trials", trials, "sampled worlds");
  simulate_cmd->add_option("--seed", seed, "random seed");
  simulate_cmd->add_option("--workers", workers, "worker threads (0 = all cores)");
  simulate_cmd->add_flag("--strict", strict, "exit 4 when the estimate disagrees with the closed form");

  std::string target_text;
  bool max_n = false;
  auto* search_cmd = app.add_subcommand("search", "minimal sigma, or maximal n with --max-n");
  add_scenario_options(search_cmd, scenario_args);
  add_output_options(search_cmd, output_args);
  search_cmd->add_option("--target", target_text, "required service success")->required();
  search_cmd->add_flag("--max-n", max_n, "largest protected n for the given sigma and m");

  std::string config_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a sweep configuration file");
  sweep_cmd->add_option("config", config_path, "sweep configuration")->required();
  add_output_options(sweep_cmd, output_args);
  sweep_cmd->add_option("--workers", workers, "worker threads for Monte Carlo columns");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }

  try {
    if (eval_cmd->parsed()) {
      const Scenario s = valid_scenario(scenario_args);
      const auto format = output_format(output_args);
      const ResultRow row = make_row(s);
      check_row_invariants(s, row);
      emit(output_args, out, [&](std::ostream& o) { write_rows(o, {row}, format); });
      return kOk;
    }

    if (simulate_cmd->parsed()) {
      const Scenario s = valid_scenario(scenario_args);
      const auto format = output_format(output_args);
      if (trials == 0) throw UsageError("--trials must be >= 1");
      ResultRow row = make_row(s);
      attach_estimate(row, estimate(s, trials, seed, workers));
      check_row_invariants(s, row);
      emit(output_args, out, [&](std::ostream& o) { write_rows(o, {row}, format); });

      const double p = row.analytic;
      const double bound = 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
      const double gap = std::abs(*row.mc_mean - p);
      if (gap > bound) {
        err << "warning: Monte Carlo mean " << format_number(*row.mc_mean) << " differs from analytic "
            << format_number(p) << " by " << format_number(gap) << " (> 4 standard errors = " << format_number(bound)
            << ")\n";
        if (strict) return kDisagreement;
      }
      return kOk;
    }

    if (search_cmd->parsed()) {
      Scenario s = to_scenario(scenario_args);
      const auto format = output_format(output_args);
      const double target = parse_probability(target_text, "--target");
      if (!(target > 0.0 && target < 1.0)) throw UsageError("--target must lie in (0,1)");
      if (max_n) {
        s.chain.n = 1;
        if (const auto check = validate(s); !check) throw UsageError(check.message());
        MaxNRecord record{s, target, std::nullopt, std::nullopt};
        record.scenario.chain.n =
            max_protected_n(s.strategy, s.params, s.chain.psi_total, s.backup, target, s.chain.n_servers);
        if (record.scenario.chain.n > 0) {
          record.achieved = evaluate(record.scenario).value();
          record.omega = utilization(record.scenario).value;
        }
        emit(output_args, out, [&](std::ostream& o) { write_max_n(o, record, format); });
        if (record.scenario.chain.n == 0) {
          out << "infeasible: no n in [1, 64] reaches target " << format_number(target) << '\n';
          return kInfeasible;
        }
        return kOk;
      }
      if (const auto check = validate(s); !check) throw UsageError(check.message());
      try {
        const MinSigmaRecord record{s, target, min_sigma(s.strategy, s.params, s.chain, s.backup.m, target)};
        emit(output_args, out, [&](std::ostream& o) { write_min_sigma(o, record, format); });
        return kOk;
      } catch (const InfeasibleTarget& e) {
        out << e.what() << '\n';
        return kInfeasible;
      }
    }

    if (sweep_cmd->parsed()) {
      const auto format = output_format(output_args);
      const SweepConfig config = load_sweep_config(config_path);
      const auto rows = run_sweep(config, workers);
      emit(output_args, out, [&](std::ostream& o) { write_rows(o, rows, format); });
      return kOk;
    }
  } catch (const ConfigError& e) {
    err << "error: " << config_path << ": " << e.what() << '\n';
    return kValidationError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
  return kValidationError;
}

}  // namespace sfcrel::cli
