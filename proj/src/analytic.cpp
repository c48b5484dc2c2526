#include "sfcrel/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sfcrel {

namespace {

void require(const Scenario& scenario, Strategy expected) {
  if (scenario.strategy != expected) {
    throw std::invalid_argument("scenario strategy " + std::string(to_string(scenario.strategy)) +
                                " passed to the " + std::string(to_string(expected)) + " formula");
  }
}

// Probability that one VNF type at a stage/position is still served when
// `failed_servers` of its n active hosts are down and `capacity` backup
// copies of that type exist: at most min(n-f, capacity-f) further active
// replicas fail, and the backups lose at most capacity-f-i copies.
double type_covered(int n, int failed_servers, int capacity, double upsilon, double upsilon_r) {
  const int up = n - failed_servers;
  double sum = 0.0;
  for (int i = 0; i <= std::min(up, capacity - failed_servers); ++i) {
    sum += binom_term(up, i, upsilon) * binom_sum(capacity, 0, capacity - failed_servers - i, upsilon_r);
  }
  return sum;
}

}  // namespace

SuccessProbability SuccessProbability::checked(double raw) {
  if (std::isnan(raw) || raw < -kRoundOffTolerance || raw > 1.0 + kRoundOffTolerance) {
    throw InternalConsistencyError("success probability " + std::to_string(raw) + " outside [0,1]");
  }
  return SuccessProbability(std::clamp(raw, 0.0, 1.0));
}

SuccessProbability success_vnf_only(double upsilon, int n, int sigma, int psi_total) {
  const double per_type = binom_sum(sigma + n, 0, sigma, upsilon);
  return SuccessProbability::checked(std::pow(per_type, psi_total));
}

SuccessProbability success_cv_none(const Scenario& scenario) {
  require(scenario, Strategy::CvNone);
  const auto& p = scenario.params;
  const auto& c = scenario.chain;
  return SuccessProbability::checked(std::pow(p.phi * std::pow(p.upsilon, c.n), c.psi_total));
}

SuccessProbability success_asbn(const Scenario& scenario) {
  require(scenario, Strategy::ASbN);
  const auto& p = scenario.params;
  const int n = scenario.chain.n;
  const int sigma = scenario.backup.sigma;

  // One stage: active server k with n replicas, backup server k with sigma.
  double repaired = 0.0;
  for (int i = 1; i <= std::min(n, sigma); ++i) {
    repaired += binom_term(n, i, p.upsilon) * binom_sum(sigma, 0, sigma - i, p.upsilon_r);
  }
  const double stage = p.phi * std::pow(p.upsilon, n) + p.phi * p.phi_r * repaired +
                       (1.0 - p.phi) * p.phi_r * binom_sum(sigma, 0, sigma - n, p.upsilon_r);
  return SuccessProbability::checked(std::pow(stage, scenario.chain.psi_total));
}

SuccessProbability success_asbs(const Scenario& scenario) {
  require(scenario, Strategy::ASbS);
  const auto& p = scenario.params;
  const int n = scenario.chain.n;
  const int psi = scenario.chain.psi_total;
  const int sigma = scenario.backup.sigma;

  // Per type: active server up, any mix of VNF failures covered by backups.
  const double server_up = type_covered(n, 0, sigma, p.upsilon, p.upsilon_r);
  // Per type: active server down, backups must supply all n replicas.
  const double server_down = binom_sum(sigma, 0, sigma - n, p.upsilon_r);
  const double no_failure = std::pow(p.upsilon, n * psi);

  double failed_servers = 0.0;
  for (int f = 1; f <= psi; ++f) {
    failed_servers += binom_term(psi, f, p.phi) * std::pow(server_down, f) * std::pow(server_up, psi - f);
  }
  const double value = std::pow(p.phi, psi) * no_failure +
                       std::pow(p.phi, psi) * p.phi_r * (std::pow(server_up, psi) - no_failure) +
                       p.phi_r * failed_servers;
  return SuccessProbability::checked(value);
}

SuccessProbability success_dv_none(const Scenario& scenario) {
  require(scenario, Strategy::DvNone);
  const auto& p = scenario.params;
  const Scenario s = normalized(scenario);
  double sub_flow = std::pow(p.phi, s.chain.n_servers);
  for (int psi_k : s.chain.psi_split) sub_flow *= std::pow(p.upsilon, psi_k);
  return SuccessProbability::checked(std::pow(sub_flow, s.chain.n));
}

SuccessProbability success_anbn(const Scenario& scenario) {
  require(scenario, Strategy::ANbN);
  const auto& p = scenario.params;
  const Scenario s = normalized(scenario);
  const int n = s.chain.n;
  const int sigma = s.backup.sigma;
  const int per_position = backup_servers_per_position(s);

  double value = 1.0;
  for (int psi_k : s.chain.psi_split) {
    const double no_failure = std::pow(p.upsilon, n * psi_k);
    double position = std::pow(p.phi * std::pow(p.upsilon, psi_k), n);
    // l of the m/N backup servers at this position are down; the rest pool
    // (m/N - l) * sigma copies of each type.
    for (int l = 0; l <= per_position - 1; ++l) {
      const int capacity = (per_position - l) * sigma;
      double pooled = std::pow(p.phi, n) *
                      (std::pow(type_covered(n, 0, capacity, p.upsilon, p.upsilon_r), psi_k) - no_failure);
      for (int f = 1; f <= std::min(n, capacity); ++f) {
        pooled += binom_term(n, f, p.phi) * std::pow(type_covered(n, f, capacity, p.upsilon, p.upsilon_r), psi_k);
      }
      position += static_cast<double>(binomial(per_position, l)) * std::pow(p.phi_r, per_position - l) *
                  std::pow(1.0 - p.phi_r, l) * pooled;
    }
    value *= position;
  }
  return SuccessProbability::checked(value);
}

SuccessProbability success_anbs(const Scenario& scenario) {
  require(scenario, Strategy::ANbS);
  const auto& p = scenario.params;
  const Scenario s = normalized(scenario);
  const int n = s.chain.n;
  const int sigma = s.backup.sigma;

  // Every position factor has the form a_k + phi_r * b_k. All positions share
  // the one backup server, so phi_r enters the product once:
  // prod(a_k + phi_r b_k) -> prod(a_k) + phi_r [prod(a_k + b_k) - prod(a_k)].
  double without_backup = 1.0;
  double with_backup = 1.0;
  for (int psi_k : s.chain.psi_split) {
    const double a = std::pow(p.phi * std::pow(p.upsilon, psi_k), n);
    double b = std::pow(p.phi, n) *
               (std::pow(type_covered(n, 0, sigma, p.upsilon, p.upsilon_r), psi_k) - std::pow(p.upsilon, n * psi_k));
    for (int f = 1; f <= std::min(n, sigma); ++f) {
      b += binom_term(n, f, p.phi) * std::pow(type_covered(n, f, sigma, p.upsilon, p.upsilon_r), psi_k);
    }
    without_backup *= a;
    with_backup *= a + b;
  }
  return SuccessProbability::checked(without_backup + p.phi_r * (with_backup - without_backup));
}

SuccessProbability evaluate(const Scenario& scenario) {
  switch (scenario.strategy) {
    case Strategy::CvNone:
      return success_cv_none(scenario);
    case Strategy::DvNone:
      return success_dv_none(scenario);
    case Strategy::ASbN:
      return success_asbn(scenario);
    case Strategy::ASbS:
      return success_asbs(scenario);
    case Strategy::ANbN:
      return success_anbn(scenario);
    case Strategy::ANbS:
      return success_anbs(scenario);
    case Strategy::VnfOnly:
      return success_vnf_only(scenario.params.upsilon, scenario.chain.n, scenario.backup.sigma,
                              scenario.chain.psi_total);
  }
  throw std::invalid_argument("unknown strategy tag");
}

}  // namespace sfcrel
