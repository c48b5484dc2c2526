#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sfcrel/analytic.hpp"
#include "sfcrel/model.hpp"

namespace sfcrel {

inline constexpr int kNoHost = -1;

// One VM/VNF instance and the server that hosts it (kNoHost for VnfOnly).
struct Slot {
  int host = kNoHost;
  int vnf = 0;
};

// One VNF type at one stage (cVNF) or position (dVNF). Demand is the number
// of active slots whose VNF or host is down; supply is the number of backup
// slots whose VNF and host are both up. The unit is served iff
// demand <= supply. Backups are typed: a unit only ever sees its own type.
struct DemandUnit {
  std::vector<Slot> active;
  std::vector<Slot> backup;
};

// Component inventory for a scenario. Index conventions:
//   cVNF:  active server k hosts n replicas of type k (slots k*n + r);
//          aSbN backup server k hosts sigma copies of type k;
//          aSbS has one backup server with sigma copies of every type.
//   dVNF:  active server s*N + k is position k of sub-flow s and hosts one
//          replica of each of its psi_k types (slot s*Psi + t);
//          aNbS has one backup server with sigma copies of every type;
//          aNbN has m/N backup servers per position k (server k*(m/N) + b),
//          each with sigma copies of every type of that position.
//   VnfOnly: no servers; n active and sigma backup replicas per type, all
//          with reliability upsilon.
struct WorldLayout {
  int active_servers = 0;
  int backup_servers = 0;
  std::vector<int> active_vnf_host;
  std::vector<int> backup_vnf_host;
  std::vector<DemandUnit> units;

  double active_server_reliability = 1.0;
  double active_vnf_reliability = 1.0;
  double backup_server_reliability = 1.0;
  double backup_vnf_reliability = 1.0;

  int active_vnfs() const { return static_cast<int>(active_vnf_host.size()); }
  int backup_vnfs() const { return static_cast<int>(backup_vnf_host.size()); }
  std::size_t component_count() const;
};

WorldLayout build_layout(const Scenario& scenario);

// Up/down state of every component; 1 = up.
struct World {
  std::vector<std::uint8_t> active_server_up;
  std::vector<std::uint8_t> active_vnf_up;
  std::vector<std::uint8_t> backup_server_up;
  std::vector<std::uint8_t> backup_vnf_up;

  bool operator==(const World&) const = default;
};

// SplitMix64 keyed by (seed, stream). Every trial owns one stream, so a trial
// draws the same numbers no matter which worker runs it.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next();
  // Uniform on [0, 1) with 53 random bits.
  double uniform();

 private:
  std::uint64_t state_;
};

// Each component is up independently with its reliability. A backup server
// is one component, drawn once per world, however many slots it hosts.
World sample_world(const Scenario& scenario, std::uint64_t trial_index, std::uint64_t seed);
void sample_world(const WorldLayout& layout, CounterRng& rng, World& world);

// Throws std::invalid_argument when the world does not match the layout.
bool succeeds(const Scenario& scenario, const World& world);
bool succeeds(const WorldLayout& layout, const World& world);
bool unit_served(const DemandUnit& unit, const World& world);

struct WilsonInterval {
  double low = 0.0;
  double high = 1.0;
};

// 95% Wilson score interval for a binomial proportion.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials);

struct Estimate {
  double mean = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;

  bool operator==(const Estimate&) const = default;
};

// Fraction of sampled worlds that succeed. The result depends only on
// (scenario, trials, seed); `workers` = 0 picks the hardware concurrency.
// Throws std::invalid_argument when trials == 0.
Estimate estimate(const Scenario& scenario, std::uint64_t trials, std::uint64_t seed, unsigned workers = 0);

// Largest number of free (non-deterministic) components that a single
// enumeration block may hold.
inline constexpr int kMaxEnumeratedComponents = 24;

// Exact probability that `succeeds` holds, summed over every up/down
// assignment. Demand units that share no server are independent, so the sum
// is taken per connected group of units: the group's servers are enumerated
// jointly and, for each server assignment, every unit's own VNFs are
// enumerated separately. Components with reliability 0 or 1 are fixed.
// Throws std::length_error when a group has more than 24 free servers or a
// unit more than 24 free VNFs.
SuccessProbability enumerate_exact(const Scenario& scenario);

// Plain sum over all 2^k worlds with the full `succeeds` predicate, for
// layouts with at most 24 components (std::length_error otherwise).
double enumerate_all_worlds(const Scenario& scenario);

}  // namespace sfcrel
