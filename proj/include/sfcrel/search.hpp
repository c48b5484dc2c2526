#pragma once

#include <optional>
#include <stdexcept>

#include "sfcrel/analytic.hpp"
#include "sfcrel/model.hpp"
#include "sfcrel/overhead.hpp"

namespace sfcrel {

// No backup amount within the caps reaches the target.
class InfeasibleTarget : public std::runtime_error {
 public:
  InfeasibleTarget(const std::string& what, double best) : std::runtime_error(what), best_(best) {}
  // Highest success probability seen during the scan.
  double best() const { return best_; }

 private:
  double best_;
};

struct ProvisioningResult {
  int sigma_min = 0;
  int sigma_total = 0;
  SuccessProbability achieved;
  Utilization omega;
  // Success probability at sigma_min - 1; empty when sigma_min == 0.
  std::optional<double> below_minimum;
};

// Smallest sigma >= 0 whose success probability reaches `target`, scanning
// upward until the scenario stops validating (sigma caps). `m` is only used
// by aNbN. Throws std::invalid_argument for a target outside (0,1) or an
// invalid scenario at sigma = 0, InfeasibleTarget when nothing reaches it.
ProvisioningResult min_sigma(Strategy strategy, const ReliabilityParams& params, const ChainSpec& chain, int m,
                             double target);

// Largest n in [1, 64] whose success probability reaches `target` with the
// given backup budget, or 0. N and psi_split come from `n_servers` (even
// split). Points that fail validation are skipped.
int max_protected_n(Strategy strategy, const ReliabilityParams& params, int psi_total, const BackupSpec& budget,
                    double target, int n_servers = 1);

}  // namespace sfcrel
