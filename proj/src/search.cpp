#include "sfcrel/search.hpp"

#include <algorithm>
#include <string>

namespace sfcrel {

namespace {

void check_target(double target) {
  if (!(target > 0.0 && target < 1.0)) throw std::invalid_argument("target must lie in (0,1)");
}

}  // namespace

ProvisioningResult min_sigma(Strategy strategy, const ReliabilityParams& params, const ChainSpec& chain, int m,
                             double target) {
  check_target(target);
  Scenario scenario{strategy, params, chain, BackupSpec{0, m}};
  if (const auto v = validate(scenario); !v) throw std::invalid_argument(v.message());

  double best = 0.0;
  std::optional<double> previous;
  // Unprotected strategies ignore sigma, so one evaluation settles them.
  const int last = has_backup(strategy) ? kMaxBinomialOrder : 0;
  for (int sigma = 0; sigma <= last; ++sigma) {
    scenario.backup.sigma = sigma;
    if (!validate(scenario)) break;
    const SuccessProbability value = evaluate(scenario);
    if (value.value() >= target) {
      return {sigma, total_backup_subchains(scenario), value, utilization(scenario), previous};
    }
    best = std::max(best, value.value());
    previous = value.value();
  }
  throw InfeasibleTarget("infeasible: best reachable success " + std::to_string(best) + " is below target " +
                             std::to_string(target),
                         best);
}

int max_protected_n(Strategy strategy, const ReliabilityParams& params, int psi_total, const BackupSpec& budget,
                    double target, int n_servers) {
  check_target(target);
  int best = 0;
  for (int n = 1; n <= kMaxParallelism; ++n) {
    const Scenario scenario{strategy, params, ChainSpec{n, psi_total, n_servers, {}}, budget};
    if (!validate(scenario)) continue;
    if (evaluate(scenario).value() >= target) best = n;
  }
  return best;
}

}  // namespace sfcrel
