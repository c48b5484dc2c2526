#pragma once

#include "sfcrel/model.hpp"

namespace sfcrel {

// Required active VNFs over all reserved (active + backup) VNFs.
struct Utilization {
  double value = 1.0;
};

// aSbN/aSbS/aNbS/VnfOnly: n / (n + sigma); aNbN: nN / (nN + m sigma);
// unprotected strategies: 1. Psi cancels in every case.
Utilization utilization(const Scenario& scenario);

}  // namespace sfcrel
