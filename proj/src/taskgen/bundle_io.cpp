#include "paracook/taskgen/bundle_io.hpp"

#include <fstream>
#include <sstream>

#include "paracook/taskgen/catalog.hpp"
#include "paracook/world/json_io.hpp"

namespace paracook::taskgen {

using world::SchemaError;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("bundle is missing '") + key + "'");
  return j.at(key);
}

template <class T>
T typed(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::type_error&) {
    throw SchemaError(std::string("bundle field '") + key + "' has the wrong type");
  }
}

}  // namespace

json bundle_to_json(const world::TaskBundle& b) {
  json recipes = json::array();
  for (const auto& r : b.recipes) recipes.push_back({{"id", r.id}, {"category", r.category}, {"text", r.text}});
  return {
      {"id", b.id},
      {"category", b.category},
      {"seed", b.seed},
      {"n_agents", b.n_agents},
      {"map", world::to_json(b.map)},
      {"recipes", recipes},
      {"orders", b.orders.dishes},
      {"constants", world::to_json(b.constants)},
      {"t_max", b.t_max},
      {"d_max", b.d_max},
      {"difficulty",
       {{"c_recipe", b.difficulty.c_recipe},
        {"c_order", b.difficulty.c_order},
        {"c_map", b.difficulty.c_map},
        {"floor_area", b.difficulty.floor_area},
        {"station_spread", b.difficulty.station_spread}}},
      {"rules", {{"overcooking", b.rules.overcooking}}},
  };
}

world::TaskBundle bundle_from_json(const json& j) {
  world::TaskBundle b;
  b.id = typed<std::string>(j, "id");
  b.category = j.contains("category") ? typed<std::string>(j, "category") : std::string();
  b.seed = j.contains("seed") ? typed<std::uint64_t>(j, "seed") : 0;
  b.n_agents = typed<int>(j, "n_agents");
  if (b.n_agents < 1) throw SchemaError("n_agents must be positive");
  b.map = world::map_from_json(field(j, "map"));
  if (b.map.agent_spawns().size() != static_cast<std::size_t>(b.n_agents))
    throw SchemaError("map spawns do not match n_agents");

  const json& recipes = field(j, "recipes");
  if (!recipes.is_array()) throw SchemaError("'recipes' must be an array");
  for (const json& rj : recipes) {
    const std::string id = rj.is_string() ? rj.get<std::string>() : typed<std::string>(rj, "id");
    const world::Recipe* r = find_recipe(id);
    if (!r) throw SchemaError("unknown recipe '" + id + "'");
    world::Recipe copy = *r;
    if (rj.is_object() && rj.contains("text")) copy.text = typed<std::string>(rj, "text");
    b.recipes.push_back(std::move(copy));
  }
  b.orders.dishes = typed<std::vector<std::string>>(j, "orders");
  if (b.orders.dishes.empty()) throw SchemaError("orders must not be empty");
  for (const auto& d : b.orders.dishes)
    if (!b.find_recipe(d)) throw SchemaError("order '" + d + "' is not among the bundle's recipes");

  if (j.contains("constants")) b.constants = world::constants_from_json(j.at("constants"));
  b.t_max = j.contains("t_max") ? typed<Ticks>(j, "t_max") : 0;
  b.d_max = j.contains("d_max") ? typed<double>(j, "d_max") : 0.0;
  if (j.contains("difficulty")) {
    const json& d = j.at("difficulty");
    b.difficulty.c_recipe = d.value("c_recipe", "");
    b.difficulty.c_order = d.value("c_order", 0);
    b.difficulty.c_map = d.value("c_map", "");
    b.difficulty.floor_area = d.value("floor_area", 0);
    b.difficulty.station_spread = d.value("station_spread", 0.0);
  }
  if (j.contains("rules")) b.rules.overcooking = j.at("rules").value("overcooking", false);
  return b;
}

std::string dump_bundle(const world::TaskBundle& b) { return bundle_to_json(b).dump(2) + "\n"; }

void save_bundle(const world::TaskBundle& b, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump_bundle(b);
}

world::TaskBundle load_bundle(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  try {
    return bundle_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

}  // namespace paracook::taskgen
