#pragma once

#include <stdexcept>

#include "sfcrel/binomial.hpp"
#include "sfcrel/model.hpp"

namespace sfcrel {

// Raised when a computed probability leaves [0,1] by more than round-off.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Service success: probability that all n sub-flows traverse all Psi VNF
// types without interruption.
class SuccessProbability {
 public:
  static constexpr double kRoundOffTolerance = 1e-9;

  SuccessProbability() = default;

  // Clamps excursions of at most kRoundOffTolerance outside [0,1]; anything
  // larger (or NaN) throws InternalConsistencyError.
  static SuccessProbability checked(double raw);

  double value() const { return value_; }
  operator double() const { return value_; }

 private:
  explicit SuccessProbability(double v) : value_(v) {}
  double value_ = 0.0;
};

// [sum_{f=0..sigma} C(sigma+n, f) (1-upsilon)^f upsilon^(sigma+n-f)]^Psi:
// every VNF type keeps at least n working replicas out of n + sigma.
SuccessProbability success_vnf_only(double upsilon, int n, int sigma, int psi_total);

// The per-strategy closed forms. Each throws std::invalid_argument when the
// scenario carries a different strategy tag. Scenarios are normalized
// internally; validity is the caller's responsibility.
SuccessProbability success_cv_none(const Scenario& scenario);
SuccessProbability success_asbn(const Scenario& scenario);
SuccessProbability success_asbs(const Scenario& scenario);
SuccessProbability success_dv_none(const Scenario& scenario);
SuccessProbability success_anbn(const Scenario& scenario);
SuccessProbability success_anbs(const Scenario& scenario);

// Dispatch on the strategy tag.
SuccessProbability evaluate(const Scenario& scenario);

}  // namespace sfcrel
