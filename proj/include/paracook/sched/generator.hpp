#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "paracook/sched/instance.hpp"

namespace paracook::sched {

/// Named, versioned instance-generation parameters.
struct Profile {
  std::string name;
  int n_min = 8, n_max = 16;
  int m_min = 2, m_max = 3;
  int layers_min = 2, layers_max = 5;  // clamped to n
  double density = 0.3;                // chance of an edge between tasks of different layers
  Ticks t_min = 1, t_max = 10;
  double delay_probability = 0.3;
  Ticks d_min = 1, d_max = 10;
  Ticks setup = 0;
};

/// "default-v1" (8-16 tasks, m in {2,3}, delays on 30% of edges) and "small-v1" (<= 8 tasks, m <= 3).
Profile profile_by_name(std::string_view name);
std::vector<std::string> profile_names();

/// Seeded layered DAG; throws InstanceError for an infeasible profile.
AbstractInstance generate_instance(const Profile& profile, std::uint64_t seed);

}  // namespace paracook::sched
