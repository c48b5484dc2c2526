#include "sfcrel/binomial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sfcrel/model.hpp"

namespace sfcrel {

namespace {

using PascalTable = std::array<std::array<std::uint64_t, kMaxBinomialOrder + 1>, kMaxBinomialOrder + 1>;

constexpr PascalTable make_pascal() {
  PascalTable t{};
  for (int k = 0; k <= kMaxBinomialOrder; ++k) {
    t[k][0] = 1;
    for (int i = 1; i <= k; ++i) t[k][i] = t[k - 1][i - 1] + (i < k ? t[k - 1][i] : 0);
  }
  return t;
}

constexpr PascalTable kPascal = make_pascal();

void check_order(int k) {
  if (k < 0 || k > kMaxBinomialOrder) {
    throw std::out_of_range("binomial order " + std::to_string(k) + " outside [0, 64]");
  }
}

}  // namespace

std::uint64_t binomial(int k, int i) {
  check_order(k);
  if (i < 0 || i > k) return 0;
  return kPascal[k][i];
}

double binom_term(int k, int failures, double p) {
  check_order(k);
  if (failures < 0 || failures > k) return 0.0;
  return static_cast<double>(kPascal[k][failures]) * std::pow(1.0 - p, failures) * std::pow(p, k - failures);
}

double binom_sum(int k, int lo, int hi, double p) {
  check_order(k);
  double sum = 0.0;
  for (int i = std::max(lo, 0); i <= std::min(hi, k); ++i) sum += binom_term(k, i, p);
  return sum;
}

}  // namespace sfcrel
