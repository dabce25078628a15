#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paracook/world/geometry.hpp"
#include "paracook/world/grid_map.hpp"
#include "paracook/world/recipe.hpp"

namespace paracook::world {

struct TimeConstants {
  Ticks move_per_tile = 1;
  Ticks interact = 1;
  Ticks cut = 3;
  Ticks pot_cook = 8;
  Ticks pan_cook = 6;
  Ticks wash_plate = 3;
  Ticks dirty_plate_return = 10;

  /// Throws std::invalid_argument unless every value is strictly positive.
  void validate() const;

  friend bool operator==(const TimeConstants&, const TimeConstants&) = default;
};

/// Dishes are served strictly in list order.
struct OrderQueue {
  std::vector<std::string> dishes;
  std::size_t next_index = 0;

  bool complete() const { return next_index >= dishes.size(); }

  friend bool operator==(const OrderQueue&, const OrderQueue&) = default;
};

/// The (recipe, order, map) difficulty triple of a bundle.
struct Difficulty {
  std::string c_recipe;  // easy | medium | hard
  int c_order = 0;       // number of dishes
  std::string c_map;     // dense | balanced | sparse
  int floor_area = 0;
  double station_spread = 0.0;
};

/// Opt-in rules that the core benchmark leaves disabled.
struct RuleFlags {
  bool overcooking = false;
};

/// One self-contained benchmark instance.
struct TaskBundle {
  std::string id;
  std::string category;
  GridMap map;
  std::vector<Recipe> recipes;  // distinct recipes referenced by the orders
  OrderQueue orders;
  TimeConstants constants;
  int n_agents = 1;
  std::uint64_t seed = 0;
  Ticks t_max = 0;
  double d_max = 0.0;
  Difficulty difficulty;
  RuleFlags rules;

  const Recipe* find_recipe(std::string_view id) const;
};

/// Agent identifiers are "agent1".."agentM".
std::string agent_name(AgentIndex index);
std::optional<AgentIndex> parse_agent_name(std::string_view name);

}  // namespace paracook::world
