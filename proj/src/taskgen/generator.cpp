#include "paracook/taskgen/generator.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "paracook/taskgen/catalog.hpp"
#include "paracook/taskgen/greedy_solver.hpp"

namespace paracook::taskgen {

using world::GridMap;
using world::Item;
using world::StationKind;

world::OrderQueue sample_order(std::string_view category, int n_dishes, Rng& rng) {
  if (n_dishes < kMinDishes || n_dishes > kMaxDishes)
    throw std::out_of_range("n_dishes must be in [1, 4], got " + std::to_string(n_dishes));
  const auto pool = recipes_in(category);
  if (pool.empty()) throw std::invalid_argument("unknown recipe category '" + std::string(category) + "'");
  world::OrderQueue q;
  for (int i = 0; i < n_dishes; ++i) q.dishes.push_back(pool[rng.index(pool.size())]->id);
  return q;
}

std::vector<StationSpec> required_stations(const std::vector<const world::Recipe*>& recipes, int n_dishes) {
  std::set<std::string> ingredients;
  bool chop = false, pot = false, pan = false;
  for (const world::Recipe* r : recipes)
    for (const auto& c : r->chains) {
      ingredients.insert(c.ingredient);
      chop = chop || c.chop;
      pot = pot || c.cook == world::CookMethod::Pot;
      pan = pan || c.cook == world::CookMethod::Pan;
    }

  std::vector<StationSpec> out;
  auto pair = [&](const std::string& stem, StationKind kind, std::string ingredient = {},
                  std::vector<Item> contents = {}, int first = 1) {
    for (int k = first; k < first + 2; ++k)
      out.push_back({stem + "_" + std::to_string(k), kind, ingredient, contents});
  };
  for (const auto& ing : ingredients) pair(ing + "_dispenser", StationKind::Dispenser, ing);
  if (chop) pair("cutting_board", StationKind::CuttingBoard);
  int stove = 1;
  if (pot) pair("stove", StationKind::Stove, {}, {Item::pot()}, (stove += 2) - 2);
  if (pan) pair("stove", StationKind::Stove, {}, {Item::pan()}, (stove += 2) - 2);
  pair("counter", StationKind::Counter);
  out.push_back({"plate_counter_1", StationKind::Counter, {},
                 std::vector<Item>(static_cast<std::size_t>(std::min(2, n_dishes)), Item::clean_plate())});
  pair("sink", StationKind::Sink);
  pair("serving_window", StationKind::ServingWindow);
  pair("dirty_plate_return", StationKind::DirtyPlateReturn);
  return out;
}

int base_map_size(std::size_t n_stations) {
  // Keep the border at most ~80% occupied: 4 * (side - 2) non-corner border cells.
  const int needed = static_cast<int>((n_stations * 5 + 15) / 16);
  return std::max(6, needed + 2);
}

GridMap generate_map(const std::vector<StationSpec>& specs, int n_agents, int size, Rng& rng, int max_attempts) {
  if (n_agents < kMinAgents || n_agents > kMaxAgents)
    throw std::out_of_range("n_agents must be in [1, 3], got " + std::to_string(n_agents));
  if (size < 3) throw GenerationError("map size " + std::to_string(size) + " is too small");
  const std::size_t n = specs.size();

  std::string last_error = "no attempt made";
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Coord> border, interior;
    for (int y = 0; y < size; ++y)
      for (int x = 0; x < size; ++x) {
        const bool edge_x = x == 0 || x == size - 1, edge_y = y == 0 || y == size - 1;
        if (edge_x && edge_y) continue;
        if (edge_x || edge_y) border.push_back({x, y});
        else if (x >= 2 && y >= 2 && x <= size - 3 && y <= size - 3) interior.push_back({x, y});
      }
    rng.shuffle(border);
    rng.shuffle(interior);

    std::size_t islands = interior.empty() ? 0 : rng.index(std::min(interior.size(), std::max<std::size_t>(1, n / 6)) + 1);
    if (border.size() + islands < n) islands = n - std::min(n, border.size());
    if (islands > interior.size())
      throw GenerationError("a " + std::to_string(size) + "x" + std::to_string(size) + " grid cannot host " +
                            std::to_string(n) + " stations");

    std::vector<Coord> cells(border.begin(), border.begin() + static_cast<std::ptrdiff_t>(n - islands));
    cells.insert(cells.end(), interior.begin(), interior.begin() + static_cast<std::ptrdiff_t>(islands));
    rng.shuffle(cells);

    std::vector<world::Station> stations;
    std::set<Coord> taken;
    for (std::size_t i = 0; i < n; ++i) {
      world::Station st;
      st.name = specs[i].name;
      st.kind = specs[i].kind;
      st.ingredient = specs[i].ingredient;
      st.contents = specs[i].contents;
      st.pos = cells[i];
      taken.insert(cells[i]);
      stations.push_back(std::move(st));
    }
    std::vector<Coord> floor;
    for (int y = 1; y < size - 1; ++y)
      for (int x = 1; x < size - 1; ++x)
        if (!taken.count({x, y})) floor.push_back({x, y});
    if (floor.size() < static_cast<std::size_t>(n_agents)) {
      last_error = "not enough floor for spawns";
      continue;
    }
    rng.shuffle(floor);
    std::vector<Coord> spawns(floor.begin(), floor.begin() + n_agents);
    try {
      GridMap map(size, size, std::move(stations), std::move(spawns));
      world::validate_map(map);
      return map;
    } catch (const world::MapError& e) {
      last_error = e.what();
    }
  }
  throw GenerationError("no valid layout after " + std::to_string(max_attempts) + " attempts: " + last_error);
}

world::Difficulty map_difficulty(const GridMap& map) {
  world::Difficulty d;
  for (int y = 0; y < map.height(); ++y)
    for (int x = 0; x < map.width(); ++x)
      if (map.cell({x, y}) == world::CellKind::Floor) ++d.floor_area;
  const auto& st = map.stations();
  long total = 0, pairs = 0;
  for (std::size_t i = 0; i < st.size(); ++i)
    for (std::size_t j = i + 1; j < st.size(); ++j, ++pairs) total += manhattan(st[i].pos, st[j].pos);
  d.station_spread = pairs ? static_cast<double>(total) / static_cast<double>(pairs) : 0.0;
  // Floor tiles per station: how crowded the kitchen is.
  const double per_station = st.empty() ? 0.0 : static_cast<double>(d.floor_area) / static_cast<double>(st.size());
  d.c_map = per_station < 3.0 ? "dense" : per_station < 3.75 ? "balanced" : "sparse";
  return d;
}

std::string bundle_id(std::string_view category, int n_dishes, int n_agents, std::uint64_t seed) {
  return std::string(category) + "-" + std::to_string(n_dishes) + "d-" + std::to_string(n_agents) + "a-s" +
         std::to_string(seed);
}

namespace {

world::TaskBundle assemble(world::TaskBundle b, Rng& rng) {
  const int n_dishes = static_cast<int>(b.orders.dishes.size());
  std::vector<const world::Recipe*> used;
  std::string c_recipe = "easy";
  const auto rank = [](const std::string& d) { return d == "hard" ? 2 : d == "medium" ? 1 : 0; };
  for (const auto& dish : b.orders.dishes) {
    const world::Recipe* r = find_recipe(dish);
    if (!r) throw std::invalid_argument("unknown recipe '" + dish + "'");
    if (std::find(used.begin(), used.end(), r) == used.end()) used.push_back(r);
    const std::string d = recipe_difficulty(r->category);
    if (rank(d) > rank(c_recipe)) c_recipe = d;
  }
  for (const auto* r : used) b.recipes.push_back(*r);
  const auto specs = required_stations(used, n_dishes);

  constexpr int kAttempts = 20;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const int side = base_map_size(specs.size()) + rng.between(0, 1);
    b.map = generate_map(specs, b.n_agents, side, rng);
    b.t_max = 0;
    auto candidate = std::make_shared<const world::TaskBundle>(b);
    const SolverResult solved = solve_greedy(candidate, SolverMode::SingleAgent);
    if (!solved.record.success) continue;
    b.t_max = 3 * solved.record.oct;
    b.d_max = 3.0 * solved.record.per_agent.front().distance;
    b.difficulty = map_difficulty(b.map);
    b.difficulty.c_recipe = c_recipe;
    b.difficulty.c_order = n_dishes;
    return b;
  }
  throw GenerationError("greedy solver could not solve any layout for " + b.id);
}

void check_agents(int n_agents) {
  if (n_agents < kMinAgents || n_agents > kMaxAgents)
    throw std::out_of_range("n_agents must be in [1, 3], got " + std::to_string(n_agents));
}

}  // namespace

world::TaskBundle assemble_bundle(std::string_view category, int n_dishes, int n_agents, std::uint64_t seed) {
  recipe_difficulty(category);  // validates the category
  check_agents(n_agents);
  Rng rng(seed);
  world::TaskBundle b;
  b.id = bundle_id(category, n_dishes, n_agents, seed);
  b.category = std::string(category);
  b.orders = sample_order(category, n_dishes, rng);
  b.n_agents = n_agents;
  b.seed = seed;
  return assemble(std::move(b), rng);
}

world::TaskBundle assemble_bundle_for_orders(const std::vector<std::string>& dishes, int n_agents,
                                             std::uint64_t seed) {
  if (dishes.size() < kMinDishes || dishes.size() > kMaxDishes)
    throw std::out_of_range("order length must be in [1, 4], got " + std::to_string(dishes.size()));
  check_agents(n_agents);
  const world::Recipe* first = find_recipe(dishes.front());
  if (!first) throw std::invalid_argument("unknown recipe '" + dishes.front() + "'");
  Rng rng(seed);
  world::TaskBundle b;
  b.id = dishes.front() + "-" + std::to_string(dishes.size()) + "d-" + std::to_string(n_agents) + "a-s" +
         std::to_string(seed);
  b.category = first->category;
  b.orders.dishes = dishes;
  b.n_agents = n_agents;
  b.seed = seed;
  return assemble(std::move(b), rng);
}

}  // namespace paracook::taskgen
