#include "sfcrel/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sfcrel/analytic.hpp"
#include "sfcrel/montecarlo.hpp"

namespace sfcrel {

namespace {

constexpr double kIntegralTolerance = 1e-9;

const std::vector<std::string> kVaryNames{"n",     "psi", "N",       "sigma",     "sigma_total",
                                          "m",     "phi", "phi_r",   "upsilon",   "upsilon_r"};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ConfigError("line " + std::to_string(line) + ": " + what);
}

double parse_real(const std::string& text, int line) {
  if (text.find('%') != std::string::npos) fail(line, "'" + text + "': percentages are not accepted");
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(value)) {
    fail(line, "'" + text + "' is not a number");
  }
  return value;
}

long long parse_integer(const std::string& text, int line) {
  char* end = nullptr;
  const long long value = std::strtoll(text.c_str(), &end, 10);
  if (text.empty() || end != text.c_str() + text.size()) fail(line, "'" + text + "' is not an integer");
  return value;
}

int to_int(long long value, int line) {
  if (value < -1000000 || value > 1000000) fail(line, "integer out of range");
  return static_cast<int>(value);
}

void apply_key(SweepSpec& spec, const std::string& key, const std::string& value, int line) {
  auto& s = spec.base;
  if (key == "vary") {
    if (std::find(kVaryNames.begin(), kVaryNames.end(), value) == kVaryNames.end()) {
      fail(line, "cannot vary '" + value + "'");
    }
    spec.vary = value;
  } else if (key == "from") {
    spec.from = parse_real(value, line);
  } else if (key == "to") {
    spec.to = parse_real(value, line);
  } else if (key == "step") {
    spec.step = parse_real(value, line);
    if (!(spec.step > 0.0)) fail(line, "step must be positive");
  } else if (key == "couple") {
    if (value == "none") {
      spec.coupling = Coupling::None;
    } else if (value == "sigma=n") {
      spec.coupling = Coupling::SigmaEqualsN;
    } else if (value.rfind("omega=", 0) == 0) {
      spec.coupling = Coupling::FixedUtilization;
      spec.omega = parse_real(value.substr(6), line);
      if (!(spec.omega > 0.0 && spec.omega <= 1.0)) fail(line, "omega must lie in (0,1]");
    } else {
      fail(line, "unknown coupling '" + value + "'");
    }
  } else if (key == "normalize") {
    if (value == "none") {
      spec.normalization = Normalization::None;
    } else if (value == "serial") {
      spec.normalization = Normalization::Serial;
    } else if (value == "unprotected") {
      spec.normalization = Normalization::Unprotected;
    } else {
      fail(line, "unknown normalization '" + value + "'");
    }
  } else if (key == "n") {
    s.chain.n = to_int(parse_integer(value, line), line);
  } else if (key == "psi") {
    s.chain.psi_total = to_int(parse_integer(value, line), line);
  } else if (key == "N") {
    s.chain.n_servers = to_int(parse_integer(value, line), line);
  } else if (key == "psi_split") {
    s.chain.psi_split.clear();
    std::stringstream items(value);
    for (std::string item; std::getline(items, item, ',');) {
      s.chain.psi_split.push_back(to_int(parse_integer(trim(item), line), line));
    }
  } else if (key == "sigma") {
    s.backup.sigma = to_int(parse_integer(value, line), line);
  } else if (key == "m") {
    s.backup.m = to_int(parse_integer(value, line), line);
  } else if (key == "phi") {
    s.params.phi = parse_real(value, line);
  } else if (key == "phi_r") {
    s.params.phi_r = parse_real(value, line);
  } else if (key == "upsilon") {
    s.params.upsilon = parse_real(value, line);
  } else if (key == "upsilon_r") {
    s.params.upsilon_r = parse_real(value, line);
  } else if (key == "trials") {
    const long long trials = parse_integer(value, line);
    if (trials < 0) fail(line, "trials must be >= 0");
    spec.trials = static_cast<std::uint64_t>(trials);
  } else if (key == "seed") {
    char* end = nullptr;
    spec.seed = std::strtoull(value.c_str(), &end, 10);
    if (value.empty() || value.front() == '-' || end != value.c_str() + value.size()) {
      fail(line, "'" + value + "' is not a seed");
    }
  } else {
    fail(line, "unknown key '" + key + "'");
  }
}

std::string describe(const SweepSpec& spec, double value) {
  return "series [" + std::string(to_string(spec.base.strategy)) + "] (line " + std::to_string(spec.line) +
         ") at " + spec.vary + "=" + format_number(value);
}

int integral(double value, const std::string& what) {
  const double rounded = std::round(value);
  if (std::abs(value - rounded) > kIntegralTolerance) {
    throw std::invalid_argument(what + " is not an integer (" + format_number(value) + ")");
  }
  return static_cast<int>(rounded);
}

}  // namespace

SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig config;
  SweepSpec defaults;
  SweepSpec* current = &defaults;
  int line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "malformed section header");
      const std::string name = trim(line.substr(1, line.size() - 2));
      const auto strategy = parse_strategy(name);
      if (!strategy) fail(line_no, "unknown strategy section '" + name + "'");
      config.series.push_back(defaults);
      current = &config.series.back();
      current->base.strategy = *strategy;
      current->line = line_no;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key = value");
    apply_key(*current, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no);
  }
  for (const auto& spec : config.series) {
    if (spec.vary.empty()) fail(spec.line, "series declares no varying parameter");
  }
  return config;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  return parse_sweep_config(in);
}

std::vector<double> sweep_points(const SweepSpec& spec) {
  std::vector<double> points;
  if (spec.from > spec.to) return points;
  const auto count = static_cast<long>(std::floor((spec.to - spec.from) / spec.step + kIntegralTolerance)) + 1;
  for (long i = 0; i < count; ++i) points.push_back(spec.from + static_cast<double>(i) * spec.step);
  return points;
}

Scenario resolve_point(const SweepSpec& spec, double value) {
  try {
    Scenario s = spec.base;
    const std::string& v = spec.vary;
    if (v == "n") {
      s.chain.n = integral(value, "n");
    } else if (v == "psi") {
      s.chain.psi_total = integral(value, "psi");
    } else if (v == "N") {
      s.chain.n_servers = integral(value, "N");
    } else if (v == "sigma") {
      s.backup.sigma = integral(value, "sigma");
    } else if (v == "m") {
      s.backup.m = integral(value, "m");
    } else if (v == "sigma_total") {
      const int total = integral(value, "sigma_total");
      if (s.strategy == Strategy::ANbN) {
        const int per_position = s.chain.n_servers > 0 ? s.backup.m / s.chain.n_servers : 0;
        if (per_position <= 0 || total % per_position != 0) {
          throw std::invalid_argument("sigma_total is not a multiple of m/N");
        }
        s.backup.sigma = total / per_position;
      } else {
        s.backup.sigma = total;
      }
    } else if (v == "phi") {
      s.params.phi = value;
    } else if (v == "phi_r") {
      s.params.phi_r = value;
    } else if (v == "upsilon") {
      s.params.upsilon = value;
    } else if (v == "upsilon_r") {
      s.params.upsilon_r = value;
    }

    if (spec.coupling == Coupling::SigmaEqualsN) {
      s.backup.sigma = s.chain.n;
    } else if (spec.coupling == Coupling::FixedUtilization) {
      const double ratio = (1.0 - spec.omega) / spec.omega;
      if (s.strategy == Strategy::ANbN) {
        if (s.backup.m <= 0) throw std::invalid_argument("omega coupling needs m > 0");
        s.backup.sigma = integral(ratio * s.chain.n * s.chain.n_servers / s.backup.m, "coupled sigma");
      } else {
        s.backup.sigma = integral(ratio * s.chain.n, "coupled sigma");
      }
    }

    if (const auto check = validate(s); !check) throw std::invalid_argument(check.message());
    return s;
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(describe(spec, value) + ": " + e.what());
  }
}

std::vector<ResultRow> run_sweep(const SweepConfig& config, unsigned workers) {
  std::vector<ResultRow> rows;
  for (const auto& spec : config.series) {
    for (double value : sweep_points(spec)) {
      const Scenario s = resolve_point(spec, value);
      ResultRow row = make_row(s);

      double baseline = 0.0;
      if (spec.normalization == Normalization::Serial) {
        SweepSpec serial = spec;
        serial.base.chain.n = 1;
        baseline = evaluate(resolve_point(serial, spec.vary == "n" ? 1.0 : value)).value();
      } else if (spec.normalization == Normalization::Unprotected) {
        Scenario unprotected = s;
        unprotected.strategy = unprotected_counterpart(s.strategy);
        baseline = evaluate(unprotected).value();
      }
      if (spec.normalization != Normalization::None && baseline > 0.0) row.normalized = row.analytic / baseline;

      if (spec.trials > 0) attach_estimate(row, estimate(s, spec.trials, spec.seed, workers));
      check_row_invariants(s, row);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace sfcrel
