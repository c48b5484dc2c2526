#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfcrel/model.hpp"
#include "sfcrel/report.hpp"

namespace sfcrel {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// How sigma follows the varying parameter.
enum class Coupling {
  None,
  SigmaEqualsN,      // sigma := n
  FixedUtilization,  // sigma chosen so that omega equals `omega`
};

enum class Normalization {
  None,
  Serial,       // divide by the same point evaluated at n = 1
  Unprotected,  // divide by the no-backup strategy with the same active placement
};

// One series: a scenario template, one varying parameter and its range.
// `vary` is one of n, psi, N, sigma, sigma_total, m, phi, phi_r, upsilon,
// upsilon_r. sigma_total sets sigma_sum; aNbN divides it by m/N.
struct SweepSpec {
  Scenario base;
  std::string vary;
  double from = 0.0;
  double to = -1.0;
  double step = 1.0;
  Coupling coupling = Coupling::None;
  double omega = 0.5;
  Normalization normalization = Normalization::None;
  std::uint64_t trials = 0;
  std::uint64_t seed = 1;
  int line = 0;  // config line of the section header
};

struct SweepConfig {
  std::vector<SweepSpec> series;
};

// Flat key = value text. Keys before the first section are defaults; every
// section named after a strategy ([asbn], [anbn], ...) starts a series that
// inherits them. '#' starts a comment. Throws ConfigError naming the line.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig load_sweep_config(const std::filesystem::path& path);

// Values of the varying parameter, ascending. Empty when from > to.
std::vector<double> sweep_points(const SweepSpec& spec);

// Scenario for one value of the varying parameter, coupling applied.
// Throws std::invalid_argument naming the point when it does not resolve to
// a valid scenario.
Scenario resolve_point(const SweepSpec& spec, double value);

// One row per point per series, in declared order. Monte Carlo columns are
// filled when the series sets trials > 0.
std::vector<ResultRow> run_sweep(const SweepConfig& config, unsigned workers = 0);

}  // namespace sfcrel
