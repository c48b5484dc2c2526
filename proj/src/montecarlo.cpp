#include "sfcrel/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace sfcrel {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
// Two-sided 95% standard normal quantile.
constexpr double kZ95 = 1.959963984540054;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

bool slot_up(const Slot& slot, const std::vector<std::uint8_t>& vnf_up, const std::vector<std::uint8_t>& server_up) {
  return vnf_up[static_cast<std::size_t>(slot.vnf)] != 0 &&
         (slot.host == kNoHost || server_up[static_cast<std::size_t>(slot.host)] != 0);
}

void check_shape(const WorldLayout& layout, const World& world) {
  if (world.active_server_up.size() != static_cast<std::size_t>(layout.active_servers) ||
      world.active_vnf_up.size() != layout.active_vnf_host.size() ||
      world.backup_server_up.size() != static_cast<std::size_t>(layout.backup_servers) ||
      world.backup_vnf_up.size() != layout.backup_vnf_host.size()) {
    throw std::invalid_argument("world does not match the scenario's component layout");
  }
}

bool all_units_served(const WorldLayout& layout, const World& world) {
  return std::all_of(layout.units.begin(), layout.units.end(),
                     [&](const DemandUnit& unit) { return unit_served(unit, world); });
}

// A single component addressed inside a World.
struct Component {
  enum class Kind { ActiveServer, BackupServer, ActiveVnf, BackupVnf };
  Kind kind;
  int index;
  double reliability;

  std::uint8_t& in(World& world) const {
    const auto i = static_cast<std::size_t>(index);
    switch (kind) {
      case Kind::ActiveServer:
        return world.active_server_up[i];
      case Kind::BackupServer:
        return world.backup_server_up[i];
      case Kind::ActiveVnf:
        return world.active_vnf_up[i];
      case Kind::BackupVnf:
        break;
    }
    return world.backup_vnf_up[i];
  }
};

bool is_free(const Component& c) { return c.reliability > 0.0 && c.reliability < 1.0; }

// Fixes deterministic components in `world` and returns the free ones.
std::vector<Component> pin_fixed(const std::vector<Component>& components, World& world) {
  std::vector<Component> free;
  for (const auto& c : components) {
    if (is_free(c)) {
      free.push_back(c);
    } else {
      c.in(world) = c.reliability >= 1.0 ? 1 : 0;
    }
  }
  return free;
}

// Calls visit(weight) for every assignment of `free` written into `world`.
template <typename Visit>
void for_each_assignment(const std::vector<Component>& free, World& world, Visit&& visit) {
  const std::size_t count = free.size();
  if (count > static_cast<std::size_t>(kMaxEnumeratedComponents)) {
    throw std::length_error("enumeration block holds " + std::to_string(count) + " free components (cap 24)");
  }
  const std::uint64_t assignments = std::uint64_t{1} << count;
  for (std::uint64_t mask = 0; mask < assignments; ++mask) {
    double weight = 1.0;
    for (std::size_t b = 0; b < count; ++b) {
      const bool up = ((mask >> b) & 1U) != 0;
      free[b].in(world) = up ? 1 : 0;
      weight *= up ? free[b].reliability : 1.0 - free[b].reliability;
    }
    visit(weight);
  }
}

World empty_world(const WorldLayout& layout) {
  World world;
  world.active_server_up.assign(static_cast<std::size_t>(layout.active_servers), 1);
  world.active_vnf_up.assign(layout.active_vnf_host.size(), 1);
  world.backup_server_up.assign(static_cast<std::size_t>(layout.backup_servers), 1);
  world.backup_vnf_up.assign(layout.backup_vnf_host.size(), 1);
  return world;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

std::size_t WorldLayout::component_count() const {
  return static_cast<std::size_t>(active_servers + backup_servers) + active_vnf_host.size() + backup_vnf_host.size();
}

WorldLayout build_layout(const Scenario& input) {
  const Scenario s = normalized(input);
  const auto& p = s.params;
  const int n = s.chain.n;
  const int psi = s.chain.psi_total;
  const int sigma = s.backup.sigma;

  WorldLayout layout;
  layout.active_server_reliability = p.phi;
  layout.active_vnf_reliability = p.upsilon;
  layout.backup_server_reliability = p.phi_r;
  layout.backup_vnf_reliability = p.upsilon_r;
  layout.units.resize(static_cast<std::size_t>(psi));

  auto add_backup_slot = [&](int type, int host) {
    layout.units[static_cast<std::size_t>(type)].backup.push_back({host, layout.backup_vnfs()});
    layout.backup_vnf_host.push_back(host);
  };

  if (is_concentrated_active(s.strategy)) {
    layout.active_servers = psi;
    for (int k = 0; k < psi; ++k) {
      for (int r = 0; r < n; ++r) {
        layout.units[static_cast<std::size_t>(k)].active.push_back({k, layout.active_vnfs()});
        layout.active_vnf_host.push_back(k);
      }
    }
    if (s.strategy == Strategy::ASbN && sigma > 0) {
      layout.backup_servers = psi;
      for (int k = 0; k < psi; ++k) {
        for (int c = 0; c < sigma; ++c) add_backup_slot(k, k);
      }
    } else if (s.strategy == Strategy::ASbS && sigma > 0) {
      layout.backup_servers = 1;
      for (int k = 0; k < psi; ++k) {
        for (int c = 0; c < sigma; ++c) add_backup_slot(k, 0);
      }
    }
  } else if (is_distributed_active(s.strategy)) {
    const int big_n = s.chain.n_servers;
    std::vector<int> position_of_type;
    for (int k = 0; k < big_n; ++k) {
      position_of_type.insert(position_of_type.end(), static_cast<std::size_t>(s.chain.psi_split[static_cast<std::size_t>(k)]), k);
    }
    layout.active_servers = n * big_n;
    for (int sub_flow = 0; sub_flow < n; ++sub_flow) {
      for (int t = 0; t < psi; ++t) {
        const int host = sub_flow * big_n + position_of_type[static_cast<std::size_t>(t)];
        layout.units[static_cast<std::size_t>(t)].active.push_back({host, layout.active_vnfs()});
        layout.active_vnf_host.push_back(host);
      }
    }
    if (s.strategy == Strategy::ANbS && sigma > 0) {
      layout.backup_servers = 1;
      for (int t = 0; t < psi; ++t) {
        for (int c = 0; c < sigma; ++c) add_backup_slot(t, 0);
      }
    } else if (s.strategy == Strategy::ANbN && sigma > 0) {
      const int per_position = backup_servers_per_position(s);
      layout.backup_servers = per_position * big_n;
      for (int t = 0; t < psi; ++t) {
        for (int b = 0; b < per_position; ++b) {
          const int host = position_of_type[static_cast<std::size_t>(t)] * per_position + b;
          for (int c = 0; c < sigma; ++c) add_backup_slot(t, host);
        }
      }
    }
  } else {
    layout.backup_vnf_reliability = p.upsilon;
    for (int t = 0; t < psi; ++t) {
      for (int r = 0; r < n; ++r) {
        layout.units[static_cast<std::size_t>(t)].active.push_back({kNoHost, layout.active_vnfs()});
        layout.active_vnf_host.push_back(kNoHost);
      }
      for (int c = 0; c < sigma; ++c) add_backup_slot(t, kNoHost);
    }
  }
  return layout;
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(mix64(seed + kGolden) ^ mix64(stream * kGolden + 0x632BE59BD9B4E019ULL))) {}

std::uint64_t CounterRng::next() {
  state_ += kGolden;
  return mix64(state_);
}

double CounterRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

void sample_world(const WorldLayout& layout, CounterRng& rng, World& world) {
  auto draw = [&rng](std::vector<std::uint8_t>& bits, std::size_t count, double reliability) {
    bits.resize(count);
    for (auto& bit : bits) bit = rng.uniform() < reliability ? 1 : 0;
  };
  draw(world.active_server_up, static_cast<std::size_t>(layout.active_servers), layout.active_server_reliability);
  draw(world.active_vnf_up, layout.active_vnf_host.size(), layout.active_vnf_reliability);
  draw(world.backup_server_up, static_cast<std::size_t>(layout.backup_servers), layout.backup_server_reliability);
  draw(world.backup_vnf_up, layout.backup_vnf_host.size(), layout.backup_vnf_reliability);
}

World sample_world(const Scenario& scenario, std::uint64_t trial_index, std::uint64_t seed) {
  const WorldLayout layout = build_layout(scenario);
  CounterRng rng(seed, trial_index);
  World world;
  sample_world(layout, rng, world);
  return world;
}

bool unit_served(const DemandUnit& unit, const World& world) {
  int demand = 0;
  for (const auto& slot : unit.active) {
    if (!slot_up(slot, world.active_vnf_up, world.active_server_up)) ++demand;
  }
  if (demand == 0) return true;
  int supply = 0;
  for (const auto& slot : unit.backup) {
    if (slot_up(slot, world.backup_vnf_up, world.backup_server_up) && ++supply >= demand) return true;
  }
  return false;
}

bool succeeds(const WorldLayout& layout, const World& world) {
  check_shape(layout, world);
  return all_units_served(layout, world);
}

bool succeeds(const Scenario& scenario, const World& world) { return succeeds(build_layout(scenario), world); }

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  const double count = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / count;
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / count;
  const double center = (phat + z2 / (2.0 * count)) / denom;
  const double half = kZ95 / denom * std::sqrt(phat * (1.0 - phat) / count + z2 / (4.0 * count * count));
  return {std::clamp(std::min(center - half, phat), 0.0, 1.0), std::clamp(std::max(center + half, phat), 0.0, 1.0)};
}

Estimate estimate(const Scenario& scenario, std::uint64_t trials, std::uint64_t seed, unsigned workers) {
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  const WorldLayout layout = build_layout(scenario);
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

  std::vector<std::uint64_t> successes(workers, 0);
  auto run = [&](unsigned worker) {
    const std::uint64_t begin = trials / workers * worker + std::min<std::uint64_t>(worker, trials % workers);
    const std::uint64_t end = begin + trials / workers + (worker < trials % workers ? 1 : 0);
    World world = empty_world(layout);
    std::uint64_t hits = 0;
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      CounterRng rng(seed, trial);
      sample_world(layout, rng, world);
      if (all_units_served(layout, world)) ++hits;
    }
    successes[worker] = hits;
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
  }

  Estimate result;
  result.trials = trials;
  result.seed = seed;
  result.successes = std::accumulate(successes.begin(), successes.end(), std::uint64_t{0});
  result.mean = static_cast<double>(result.successes) / static_cast<double>(trials);
  const auto ci = wilson_interval(result.successes, trials);
  result.ci_low = ci.low;
  result.ci_high = ci.high;
  return result;
}

SuccessProbability enumerate_exact(const Scenario& scenario) {
  const WorldLayout layout = build_layout(scenario);
  World world = empty_world(layout);
  const std::size_t unit_count = layout.units.size();

  // Group units that share a server; active server s is node s, backup
  // server b is node active_servers + b.
  std::vector<int> parent(unit_count);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> owner(static_cast<std::size_t>(layout.active_servers + layout.backup_servers), -1);
  auto link = [&](int node, int unit) {
    if (node < 0) return;
    int& first = owner[static_cast<std::size_t>(node)];
    if (first < 0) {
      first = unit;
    } else {
      parent[static_cast<std::size_t>(find_root(parent, unit))] = find_root(parent, first);
    }
  };
  for (std::size_t u = 0; u < unit_count; ++u) {
    for (const auto& slot : layout.units[u].active) link(slot.host, static_cast<int>(u));
    for (const auto& slot : layout.units[u].backup) {
      link(slot.host == kNoHost ? kNoHost : layout.active_servers + slot.host, static_cast<int>(u));
    }
  }

  double total = 1.0;
  for (std::size_t root = 0; root < unit_count; ++root) {
    if (find_root(parent, static_cast<int>(root)) != static_cast<int>(root)) continue;

    std::vector<std::size_t> members;
    std::vector<Component> servers;
    std::vector<std::uint8_t> seen(owner.size(), 0);
    for (std::size_t u = 0; u < unit_count; ++u) {
      if (find_root(parent, static_cast<int>(u)) != static_cast<int>(root)) continue;
      members.push_back(u);
      for (const auto& slot : layout.units[u].active) {
        if (slot.host != kNoHost && !seen[static_cast<std::size_t>(slot.host)]) {
          seen[static_cast<std::size_t>(slot.host)] = 1;
          servers.push_back({Component::Kind::ActiveServer, slot.host, layout.active_server_reliability});
        }
      }
      for (const auto& slot : layout.units[u].backup) {
        if (slot.host == kNoHost) continue;
        const auto node = static_cast<std::size_t>(layout.active_servers + slot.host);
        if (!seen[node]) {
          seen[node] = 1;
          servers.push_back({Component::Kind::BackupServer, slot.host, layout.backup_server_reliability});
        }
      }
    }

    std::vector<std::vector<Component>> unit_vnfs;
    for (std::size_t u : members) {
      std::vector<Component> vnfs;
      for (const auto& slot : layout.units[u].active) {
        vnfs.push_back({Component::Kind::ActiveVnf, slot.vnf, layout.active_vnf_reliability});
      }
      for (const auto& slot : layout.units[u].backup) {
        vnfs.push_back({Component::Kind::BackupVnf, slot.vnf, layout.backup_vnf_reliability});
      }
      unit_vnfs.push_back(pin_fixed(vnfs, world));
    }

    double group = 0.0;
    for_each_assignment(pin_fixed(servers, world), world, [&](double server_weight) {
      if (server_weight == 0.0) return;
      double product = server_weight;
      for (std::size_t i = 0; i < members.size() && product != 0.0; ++i) {
        const DemandUnit& unit = layout.units[members[i]];
        double served = 0.0;
        for_each_assignment(unit_vnfs[i], world, [&](double weight) {
          if (unit_served(unit, world)) served += weight;
        });
        product *= served;
      }
      group += product;
    });
    total *= group;
  }
  return SuccessProbability::checked(total);
}

double enumerate_all_worlds(const Scenario& scenario) {
  const WorldLayout layout = build_layout(scenario);
  if (layout.component_count() > static_cast<std::size_t>(kMaxEnumeratedComponents)) {
    throw std::length_error("layout has " + std::to_string(layout.component_count()) + " components (cap 24)");
  }
  World world = empty_world(layout);
  std::vector<Component> all;
  for (int i = 0; i < layout.active_servers; ++i) {
    all.push_back({Component::Kind::ActiveServer, i, layout.active_server_reliability});
  }
  for (int i = 0; i < layout.active_vnfs(); ++i) {
    all.push_back({Component::Kind::ActiveVnf, i, layout.active_vnf_reliability});
  }
  for (int i = 0; i < layout.backup_servers; ++i) {
    all.push_back({Component::Kind::BackupServer, i, layout.backup_server_reliability});
  }
  for (int i = 0; i < layout.backup_vnfs(); ++i) {
    all.push_back({Component::Kind::BackupVnf, i, layout.backup_vnf_reliability});
  }
  double total = 0.0;
  for_each_assignment(all, world, [&](double weight) {
    if (weight != 0.0 && succeeds(layout, world)) total += weight;
  });
  return total;
}

}  // namespace sfcrel
