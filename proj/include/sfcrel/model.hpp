#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sfcrel {

// Upper bounds on parallelism and chain length. Binomial coefficients up to
// C(64, k) fit in 64-bit integers, which keeps every sum in the analytic
// module exact before conversion to double.
inline constexpr int kMaxParallelism = 64;
inline constexpr int kMaxChainLength = 64;
inline constexpr int kMaxBinomialOrder = 64;

// Active/backup placement. CvNone/DvNone are the unprotected baselines for
// concentrated (cVNF) and distributed (dVNF) active placement; VnfOnly is the
// server-failure-free k-out-of-n model.
enum class Strategy { CvNone, DvNone, ASbN, ASbS, ANbN, ANbS, VnfOnly };

std::string_view to_string(Strategy strategy);
std::optional<Strategy> parse_strategy(std::string_view name);
const std::vector<Strategy>& all_strategies();

// cVNF: all n replicas of a VNF type share one server, N = Psi.
bool is_concentrated_active(Strategy strategy);
// dVNF: every sub-flow's chain is spread over N servers of its own.
bool is_distributed_active(Strategy strategy);
bool has_backup(Strategy strategy);
// The no-backup strategy with the same active placement (CvNone for aS*,
// DvNone for aN*). VnfOnly maps to itself.
Strategy unprotected_counterpart(Strategy strategy);

struct ReliabilityParams {
  double phi = 1.0;        // active server
  double phi_r = 1.0;      // backup server
  double upsilon = 1.0;    // VNF on an active server
  double upsilon_r = 1.0;  // VNF on a backup server
};

struct ChainSpec {
  int n = 1;                   // parallel sub-flows / active sub-SFCs
  int psi_total = 1;           // VNFs per sub-SFC
  int n_servers = 1;           // active servers per sub-flow (dVNF)
  std::vector<int> psi_split;  // VNFs per server; empty means even split
};

struct BackupSpec {
  int sigma = 0;  // backup sub-SFC copies per backup server
  int m = 0;      // backup servers (aNbN only)
};

struct Scenario {
  Strategy strategy = Strategy::CvNone;
  ReliabilityParams params;
  ChainSpec chain;
  BackupSpec backup;
};

struct ValidationResult {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
  // All violations joined with "; ".
  std::string message() const;
};

// Most even split of `total` items over `parts` bins; the remainder goes to
// the lowest-index bins.
std::vector<int> even_split(int total, int parts);

// Reports every violated constraint. Never throws.
ValidationResult validate(const Scenario& scenario);

// Canonical form used by every computation: cVNF strategies get N = Psi with
// an all-ones split, dVNF strategies get the even split when none was given.
// Strategies without server structure (VnfOnly) are left with N = 1.
Scenario normalized(Scenario scenario);

// Per-server VNF counts of the normalized scenario.
std::vector<int> effective_split(const Scenario& scenario);

// m / N for aNbN, 1 for every other strategy.
int backup_servers_per_position(const Scenario& scenario);

// sigma_sum: sigma for aSbN/aSbS/aNbS/VnfOnly, (m/N) * sigma for aNbN,
// 0 for the unprotected strategies.
int total_backup_subchains(const Scenario& scenario);

}  // namespace sfcrel
