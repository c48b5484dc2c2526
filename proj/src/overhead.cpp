#include "sfcrel/overhead.hpp"

namespace sfcrel {

Utilization utilization(const Scenario& scenario) {
  const double n = scenario.chain.n;
  switch (scenario.strategy) {
    case Strategy::CvNone:
    case Strategy::DvNone:
      return {1.0};
    case Strategy::ANbN: {
      const double active = n * scenario.chain.n_servers;
      return {active / (active + static_cast<double>(scenario.backup.m) * scenario.backup.sigma)};
    }
    case Strategy::ASbN:
    case Strategy::ASbS:
    case Strategy::ANbS:
    case Strategy::VnfOnly:
      break;
  }
  return {n / (n + scenario.backup.sigma)};
}

}  // namespace sfcrel
