#include "sfcrel/model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <utility>

namespace sfcrel {

namespace {

constexpr std::array<std::pair<Strategy, std::string_view>, 7> kStrategyNames{{
    {Strategy::CvNone, "cv-none"},
    {Strategy::DvNone, "dv-none"},
    {Strategy::ASbN, "asbn"},
    {Strategy::ASbS, "asbs"},
    {Strategy::ANbN, "anbn"},
    {Strategy::ANbS, "anbs"},
    {Strategy::VnfOnly, "vnf-only"},
}};

void check_probability(double value, std::string_view name, std::vector<std::string>& out) {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
    out.push_back(std::string(name) + " out of [0,1]");
  }
}

}  // namespace

std::string_view to_string(Strategy strategy) {
  for (const auto& [s, name] : kStrategyNames) {
    if (s == strategy) return name;
  }
  return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (const auto& [s, n] : kStrategyNames) {
    if (n == name) return s;
  }
  return std::nullopt;
}

const std::vector<Strategy>& all_strategies() {
  static const std::vector<Strategy> strategies = [] {
    std::vector<Strategy> v;
    for (const auto& entry : kStrategyNames) v.push_back(entry.first);
    return v;
  }();
  return strategies;
}

bool is_concentrated_active(Strategy strategy) {
  return strategy == Strategy::CvNone || strategy == Strategy::ASbN || strategy == Strategy::ASbS;
}

bool is_distributed_active(Strategy strategy) {
  return strategy == Strategy::DvNone || strategy == Strategy::ANbN || strategy == Strategy::ANbS;
}

bool has_backup(Strategy strategy) {
  return strategy != Strategy::CvNone && strategy != Strategy::DvNone;
}

Strategy unprotected_counterpart(Strategy strategy) {
  if (is_concentrated_active(strategy)) return Strategy::CvNone;
  if (is_distributed_active(strategy)) return Strategy::DvNone;
  return strategy;
}

std::string ValidationResult::message() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

std::vector<int> even_split(int total, int parts) {
  if (parts <= 0) return {};
  std::vector<int> split(static_cast<std::size_t>(parts), total / parts);
  for (int k = 0; k < total % parts; ++k) ++split[static_cast<std::size_t>(k)];
  return split;
}

ValidationResult validate(const Scenario& scenario) {
  ValidationResult result;
  auto& out = result.violations;
  const auto& p = scenario.params;
  const auto& chain = scenario.chain;
  const auto& backup = scenario.backup;

  check_probability(p.phi, "phi", out);
  check_probability(p.phi_r, "phi_r", out);
  check_probability(p.upsilon, "upsilon", out);
  check_probability(p.upsilon_r, "upsilon_r", out);

  if (to_string(scenario.strategy) == "unknown") out.emplace_back("unknown strategy");

  if (chain.n < 1) out.emplace_back("n must be >= 1");
  if (chain.n > kMaxParallelism) out.emplace_back("n exceeds cap of 64");
  if (chain.psi_total < 1) out.emplace_back("psi_total must be >= 1");
  if (chain.psi_total > kMaxChainLength) out.emplace_back("psi_total exceeds cap of 64");

  if (backup.sigma < 0) out.emplace_back("sigma must be >= 0");
  if (backup.sigma > kMaxBinomialOrder) out.emplace_back("sigma exceeds cap of 64");
  if (backup.m < 0) out.emplace_back("m must be >= 0");

  if (is_distributed_active(scenario.strategy)) {
    const int big_n = chain.n_servers;
    if (big_n < 1) {
      out.emplace_back("N must be >= 1");
    } else if (chain.psi_total >= 1 && big_n > chain.psi_total) {
      out.emplace_back("N must not exceed psi_total");
    }
    if (!chain.psi_split.empty()) {
      if (static_cast<int>(chain.psi_split.size()) != big_n) {
        out.emplace_back("psi_split length must equal N");
      }
      if (std::accumulate(chain.psi_split.begin(), chain.psi_split.end(), 0L) != chain.psi_total) {
        out.emplace_back("psi_split must sum to psi_total");
      }
      for (int psi : chain.psi_split) {
        if (psi < 1) {
          out.emplace_back("every psi_split entry must be >= 1");
          break;
        }
      }
    }
  }

  if (scenario.strategy == Strategy::ANbN && chain.n_servers >= 1 && backup.m >= 0) {
    if (backup.m % chain.n_servers != 0) {
      out.emplace_back("m must be a multiple of N");
    } else {
      const long pooled = static_cast<long>(backup.m / chain.n_servers) * std::max(backup.sigma, 0);
      if (pooled > kMaxBinomialOrder) out.emplace_back("(m/N)*sigma exceeds cap of 64");
    }
  }

  if (scenario.strategy == Strategy::VnfOnly && chain.n + backup.sigma > kMaxBinomialOrder) {
    out.emplace_back("n + sigma exceeds cap of 64");
  }
  return result;
}

Scenario normalized(Scenario scenario) {
  auto& chain = scenario.chain;
  if (is_concentrated_active(scenario.strategy)) {
    chain.n_servers = chain.psi_total;
    chain.psi_split.assign(static_cast<std::size_t>(std::max(chain.psi_total, 0)), 1);
  } else if (is_distributed_active(scenario.strategy)) {
    if (chain.psi_split.empty()) chain.psi_split = even_split(chain.psi_total, chain.n_servers);
  } else {
    chain.n_servers = 1;
    chain.psi_split = {chain.psi_total};
  }
  if (scenario.strategy != Strategy::ANbN) scenario.backup.m = 0;
  if (!has_backup(scenario.strategy)) scenario.backup.sigma = 0;
  return scenario;
}

std::vector<int> effective_split(const Scenario& scenario) {
  return normalized(scenario).chain.psi_split;
}

int backup_servers_per_position(const Scenario& scenario) {
  if (scenario.strategy != Strategy::ANbN) return 1;
  const int big_n = std::max(scenario.chain.n_servers, 1);
  return scenario.backup.m / big_n;
}

int total_backup_subchains(const Scenario& scenario) {
  if (!has_backup(scenario.strategy)) return 0;
  if (scenario.strategy == Strategy::ANbN) {
    return backup_servers_per_position(scenario) * scenario.backup.sigma;
  }
  return scenario.backup.sigma;
}

}  // namespace sfcrel
