#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "paracook/util/rng.hpp"
#include "paracook/world/bundle.hpp"

namespace paracook::taskgen {

using paracook::Rng;

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMinDishes = 1;
inline constexpr int kMaxDishes = 4;
inline constexpr int kMinAgents = 1;
inline constexpr int kMaxAgents = 3;

/// Uniform draws with replacement from the category. Throws std::out_of_range / std::invalid_argument.
world::OrderQueue sample_order(std::string_view category, int n_dishes, Rng& rng);

/// One station to place, with its name and initial contents already decided.
struct StationSpec {
  std::string name;
  world::StationKind kind = world::StationKind::Counter;
  std::string ingredient;               // dispensers
  std::vector<world::Item> contents;    // cookware on stoves, plates on the plate counter
};

/// Two stations per kind needed by the recipes, plus sinks, windows, plate returns, two free
/// counters and one plate counter stocked with min(2, n_dishes) clean plates.
std::vector<StationSpec> required_stations(const std::vector<const world::Recipe*>& recipes, int n_dishes);

/// Places the stations on a size×size grid (border cells plus a few interior islands) and picks
/// spawns, retrying until the layout validates. Throws GenerationError after `max_attempts`.
world::GridMap generate_map(const std::vector<StationSpec>& stations, int n_agents, int size, Rng& rng,
                            int max_attempts = 200);

/// Smallest grid side used for this many stations (before the random +0/+1).
int base_map_size(std::size_t n_stations);

/// Floor area, mean pairwise station distance and the dense | balanced | sparse bucket.
world::Difficulty map_difficulty(const world::GridMap& map);

/// Deterministic bundle for the arguments; t_max / d_max come from the greedy single-agent solver.
world::TaskBundle assemble_bundle(std::string_view category, int n_dishes, int n_agents, std::uint64_t seed);

/// Same pipeline with a fixed order queue (category taken from the first dish).
world::TaskBundle assemble_bundle_for_orders(const std::vector<std::string>& dishes, int n_agents,
                                             std::uint64_t seed);

std::string bundle_id(std::string_view category, int n_dishes, int n_agents, std::uint64_t seed);

}  // namespace paracook::taskgen
