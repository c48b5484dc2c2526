#include "sfcrel/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "sfcrel/analytic.hpp"
#include "sfcrel/overhead.hpp"

namespace sfcrel {

namespace {

constexpr double kReductionTolerance = 1e-12;

std::string cell(const std::optional<double>& value) { return value ? format_number(*value) : std::string(); }

nlohmann::json json_value(const std::optional<double>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

void write_csv_line(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}

void check_probability_field(std::optional<double> value, const char* name) {
  if (value && !(*value >= 0.0 && *value <= 1.0)) {
    throw InternalConsistencyError(std::string(name) + " outside [0,1]: " + format_number(*value));
  }
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

const std::vector<std::string>& result_columns() {
  static const std::vector<std::string> columns{
      "strategy", "n",        "psi_total", "n_servers", "sigma",      "m",          "phi",   "phi_r",
      "upsilon",  "upsilon_r", "analytic", "mc_mean",   "mc_ci_low", "mc_ci_high", "omega", "normalized"};
  return columns;
}

ResultRow make_row(const Scenario& input) {
  const Scenario s = normalized(input);
  ResultRow row;
  row.strategy = s.strategy;
  row.n = s.chain.n;
  row.psi_total = s.chain.psi_total;
  row.n_servers = s.chain.n_servers;
  row.sigma = s.backup.sigma;
  row.m = s.backup.m;
  row.phi = s.params.phi;
  row.phi_r = s.params.phi_r;
  row.upsilon = s.params.upsilon;
  row.upsilon_r = s.params.upsilon_r;
  row.analytic = evaluate(s).value();
  row.omega = utilization(s).value;
  return row;
}

void attach_estimate(ResultRow& row, const Estimate& estimate) {
  row.mc_mean = estimate.mean;
  row.mc_ci_low = estimate.ci_low;
  row.mc_ci_high = estimate.ci_high;
}

void check_row_invariants(const Scenario& input, const ResultRow& row) {
  check_probability_field(row.analytic, "analytic");
  check_probability_field(row.mc_mean, "mc_mean");
  check_probability_field(row.mc_ci_low, "mc_ci_low");
  check_probability_field(row.mc_ci_high, "mc_ci_high");
  if (row.mc_mean && !(*row.mc_ci_low <= *row.mc_mean && *row.mc_mean <= *row.mc_ci_high)) {
    throw InternalConsistencyError("Monte Carlo interval does not contain its mean");
  }
  if (!(row.omega > 0.0 && row.omega <= 1.0)) throw InternalConsistencyError("omega outside (0,1]");

  const Scenario s = normalized(input);
  if (!has_backup(s.strategy) || s.strategy == Strategy::VnfOnly) return;
  Scenario unprotected = s;
  unprotected.strategy = unprotected_counterpart(s.strategy);
  const double baseline = evaluate(unprotected).value();
  Scenario no_backup = s;
  no_backup.backup.sigma = 0;
  const double reduced = evaluate(no_backup).value();
  if (std::abs(reduced - baseline) > kReductionTolerance * std::max(baseline, 1e-300)) {
    throw InternalConsistencyError("sigma = 0 does not reduce to the unprotected formula");
  }
  if (row.analytic < baseline - kReductionTolerance) {
    throw InternalConsistencyError("backup lowered the success probability below the unprotected baseline");
  }
}

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  write_csv_line(out, result_columns());
  for (const auto& r : rows) {
    write_csv_line(out, {std::string(to_string(r.strategy)), std::to_string(r.n), std::to_string(r.psi_total),
                         std::to_string(r.n_servers), std::to_string(r.sigma), std::to_string(r.m),
                         format_number(r.phi), format_number(r.phi_r), format_number(r.upsilon),
                         format_number(r.upsilon_r), format_number(r.analytic), cell(r.mc_mean), cell(r.mc_ci_low),
                         cell(r.mc_ci_high), format_number(r.omega), cell(r.normalized)});
  }
}

void write_json(std::ostream& out, const std::vector<ResultRow>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["strategy"] = std::string(to_string(r.strategy));
    o["n"] = r.n;
    o["psi_total"] = r.psi_total;
    o["n_servers"] = r.n_servers;
    o["sigma"] = r.sigma;
    o["m"] = r.m;
    o["phi"] = r.phi;
    o["phi_r"] = r.phi_r;
    o["upsilon"] = r.upsilon;
    o["upsilon_r"] = r.upsilon_r;
    o["analytic"] = r.analytic;
    o["mc_mean"] = json_value(r.mc_mean);
    o["mc_ci_low"] = json_value(r.mc_ci_low);
    o["mc_ci_high"] = json_value(r.mc_ci_high);
    o["omega"] = r.omega;
    o["normalized"] = json_value(r.normalized);
    doc.push_back(std::move(o));
  }
  out << doc.dump(2) << '\n';
}

void write_rows(std::ostream& out, const std::vector<ResultRow>& rows, OutputFormat format) {
  if (format == OutputFormat::Json) {
    write_json(out, rows);
  } else {
    write_csv(out, rows);
  }
}

void write_min_sigma(std::ostream& out, const MinSigmaRecord& record, OutputFormat format) {
  const Scenario s = normalized(record.scenario);
  const auto& r = record.result;
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json o;
    o["strategy"] = std::string(to_string(s.strategy));
    o["n"] = s.chain.n;
    o["psi_total"] = s.chain.psi_total;
    o["n_servers"] = s.chain.n_servers;
    o["m"] = s.backup.m;
    o["target"] = record.target;
    o["sigma_min"] = r.sigma_min;
    o["sigma_total"] = r.sigma_total;
    o["achieved"] = r.achieved.value();
    o["omega"] = r.omega.value;
    o["below_minimum"] = json_value(r.below_minimum);
    out << o.dump(2) << '\n';
    return;
  }
  write_csv_line(out, {"strategy", "n", "psi_total", "n_servers", "m", "target", "sigma_min", "sigma_total",
                       "achieved", "omega", "below_minimum"});
  write_csv_line(out, {std::string(to_string(s.strategy)), std::to_string(s.chain.n),
                       std::to_string(s.chain.psi_total), std::to_string(s.chain.n_servers),
                       std::to_string(s.backup.m), format_number(record.target), std::to_string(r.sigma_min),
                       std::to_string(r.sigma_total), format_number(r.achieved.value()),
                       format_number(r.omega.value), cell(r.below_minimum)});
}

void write_max_n(std::ostream& out, const MaxNRecord& record, OutputFormat format) {
  const Scenario s = normalized(record.scenario);
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json o;
    o["strategy"] = std::string(to_string(s.strategy));
    o["psi_total"] = s.chain.psi_total;
    o["n_servers"] = s.chain.n_servers;
    o["sigma"] = s.backup.sigma;
    o["m"] = s.backup.m;
    o["sigma_total"] = total_backup_subchains(s);
    o["target"] = record.target;
    o["max_n"] = s.chain.n;
    o["achieved"] = json_value(record.achieved);
    o["omega"] = json_value(record.omega);
    out << o.dump(2) << '\n';
    return;
  }
  write_csv_line(out, {"strategy", "psi_total", "n_servers", "sigma", "m", "sigma_total", "target", "max_n",
                       "achieved", "omega"});
  write_csv_line(out, {std::string(to_string(s.strategy)), std::to_string(s.chain.psi_total),
                       std::to_string(s.chain.n_servers), std::to_string(s.backup.sigma), std::to_string(s.backup.m),
                       std::to_string(total_backup_subchains(s)), format_number(record.target),
                       std::to_string(s.chain.n), cell(record.achieved), cell(record.omega)});
}

}  // namespace sfcrel
