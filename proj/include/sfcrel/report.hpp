#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sfcrel/model.hpp"
#include "sfcrel/montecarlo.hpp"
#include "sfcrel/search.hpp"

namespace sfcrel {

enum class OutputFormat { Csv, Json };

std::optional<OutputFormat> parse_format(std::string_view name);

// One evaluated scenario. Column order in every output is the field order.
struct ResultRow {
  Strategy strategy = Strategy::CvNone;
  int n = 1;
  int psi_total = 1;
  int n_servers = 1;
  int sigma = 0;
  int m = 0;
  double phi = 1.0;
  double phi_r = 1.0;
  double upsilon = 1.0;
  double upsilon_r = 1.0;
  double analytic = 0.0;
  std::optional<double> mc_mean;
  std::optional<double> mc_ci_low;
  std::optional<double> mc_ci_high;
  double omega = 1.0;
  std::optional<double> normalized;
};

const std::vector<std::string>& result_columns();

// Analytic value and utilization for `scenario` (normalized first).
ResultRow make_row(const Scenario& scenario);
void attach_estimate(ResultRow& row, const Estimate& estimate);

// Range of every probability field, CI ordering, and for backed-up
// strategies the sigma = 0 reduction and analytic >= unprotected baseline.
// Throws InternalConsistencyError.
void check_row_invariants(const Scenario& scenario, const ResultRow& row);

// 17 significant digits, '.' decimal separator.
std::string format_number(double value);

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);
void write_json(std::ostream& out, const std::vector<ResultRow>& rows);
void write_rows(std::ostream& out, const std::vector<ResultRow>& rows, OutputFormat format);

struct MinSigmaRecord {
  Scenario scenario;
  double target = 0.0;
  ProvisioningResult result;
};

struct MaxNRecord {
  Scenario scenario;  // n holds the protected parallelism (0 if none)
  double target = 0.0;
  std::optional<double> achieved;
  std::optional<double> omega;
};

void write_min_sigma(std::ostream& out, const MinSigmaRecord& record, OutputFormat format);
void write_max_n(std::ostream& out, const MaxNRecord& record, OutputFormat format);

}  // namespace sfcrel
