#include "paracook/sched/generator.hpp"

#include <algorithm>

#include "paracook/util/rng.hpp"

namespace paracook::sched {

Profile profile_by_name(std::string_view name) {
  if (name == "default-v1") return Profile{"default-v1"};
  if (name == "small-v1") {
    Profile p{"small-v1"};
    p.n_min = 2;
    p.n_max = 8;
    p.m_min = 1;
    p.m_max = 3;
    p.layers_min = 1;
    p.layers_max = 4;
    p.density = 0.35;
    return p;
  }
  throw InstanceError("unknown instance profile '" + std::string(name) + "'");
}

std::vector<std::string> profile_names() { return {"default-v1", "small-v1"}; }

AbstractInstance generate_instance(const Profile& p, std::uint64_t seed) {
  if (p.n_min < 1 || p.n_max < p.n_min) throw InstanceError("profile task range is empty");
  if (p.m_min < 1 || p.m_max < p.m_min) throw InstanceError("profile agent range is empty");
  if (p.layers_min < 1 || p.layers_max < p.layers_min) throw InstanceError("profile layer range is empty");
  if (p.t_min < 1 || p.t_max < p.t_min) throw InstanceError("task durations must be positive");
  if (p.d_min < 0 || p.d_max < p.d_min) throw InstanceError("delays must be non-negative");
  if (p.density < 0 || p.density > 1 || p.delay_probability < 0 || p.delay_probability > 1)
    throw InstanceError("probabilities must lie in [0, 1]");
  if (p.setup < 0) throw InstanceError("setup time must be non-negative");

  Rng rng(seed);
  AbstractInstance inst;
  const int n = rng.between(p.n_min, p.n_max);
  inst.m = rng.between(p.m_min, p.m_max);
  inst.setup = p.setup;
  const int layers = rng.between(std::min(p.layers_min, n), std::min(p.layers_max, n));

  // Every layer gets at least one task; the rest land uniformly.
  std::vector<int> layer(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) layer[static_cast<std::size_t>(v)] = v < layers ? v : rng.between(0, layers - 1);
  std::sort(layer.begin(), layer.end());
  for (int v = 0; v < n; ++v) {
    inst.ids.push_back(v);
    inst.t.push_back(p.t_min + static_cast<Ticks>(rng.index(static_cast<std::size_t>(p.t_max - p.t_min + 1))));
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (layer[static_cast<std::size_t>(u)] == layer[static_cast<std::size_t>(v)] || !rng.chance(p.density)) continue;
      Ticks d = 0;
      if (rng.chance(p.delay_probability))
        d = p.d_min + static_cast<Ticks>(rng.index(static_cast<std::size_t>(p.d_max - p.d_min + 1)));
      inst.edges.push_back({u, v, d});
    }
  check_instance(inst);
  return inst;
}

}  // namespace paracook::sched
