#include "paracook/world/json_io.hpp"

namespace paracook::world {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int require_int(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string require_string(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_string()) throw SchemaError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

json to_json(Coord c) { return json::array({c.x, c.y}); }

Coord coord_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw SchemaError("coordinate must be [x, y] with integer entries");
  return {j[0].get<int>(), j[1].get<int>()};
}

json to_json(const Item& item) {
  json j;
  j["kind"] = to_string(item.kind);
  if (item.is_ingredient()) {
    j["name"] = item.ingredient;
    j["state"] = to_string(item.food);
    if (item.food == FoodState::Cooking) j["progress"] = item.progress;
    return j;
  }
  if (item.is_plate()) j["state"] = item.dirty ? "dirty" : "clean";
  json contents = json::array();
  for (const Item& c : item.contents) contents.push_back(to_json(c));
  j["contents"] = std::move(contents);
  return j;
}

Item item_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "pot") return Item::pot();
    if (s == "pan") return Item::pan();
    if (s == "clean_plate" || s == "plate") return Item::clean_plate();
    if (s == "dirty_plate") return Item::dirty_plate();
    throw SchemaError("unknown item shorthand '" + s + "'");
  }
  const auto kind = parse_item_kind(require_string(j, "kind"));
  if (!kind) throw SchemaError("unknown item kind");
  Item item;
  item.kind = *kind;
  if (item.is_ingredient()) {
    item.ingredient = require_string(j, "name");
    if (!find_ingredient(item.ingredient)) throw SchemaError("unknown ingredient '" + item.ingredient + "'");
    if (j.contains("state")) {
      auto st = parse_food_state(j.at("state").get<std::string>());
      if (!st) throw SchemaError("unknown food state");
      item.food = *st;
    }
    if (j.contains("progress")) item.progress = j.at("progress").get<Ticks>();
    return item;
  }
  if (item.is_plate() && j.contains("state")) {
    const auto st = j.at("state").get<std::string>();
    if (st != "clean" && st != "dirty") throw SchemaError("plate state must be 'clean' or 'dirty'");
    item.dirty = st == "dirty";
  }
  if (j.contains("contents")) {
    if (!j.at("contents").is_array()) throw SchemaError("'contents' must be an array");
    for (const json& c : j.at("contents")) item.contents.push_back(item_from_json(c));
  }
  return item;
}

json to_json(const Station& s) {
  json j;
  j["name"] = s.name;
  j["kind"] = to_string(s.kind);
  if (s.kind == StationKind::Dispenser) j["ingredient"] = s.ingredient;
  j["pos"] = to_json(s.pos);
  if (!s.contents.empty()) {
    json contents = json::array();
    for (const Item& c : s.contents) contents.push_back(to_json(c));
    j["contents"] = std::move(contents);
  }
  return j;
}

json to_json(const GridMap& map) {
  json j;
  j["width"] = map.width();
  j["height"] = map.height();
  json stations = json::array();
  for (const Station& s : map.stations()) stations.push_back(to_json(s));
  j["stations"] = std::move(stations);
  json agents = json::array();
  for (Coord c : map.agent_spawns()) agents.push_back(to_json(c));
  j["agents"] = std::move(agents);
  return j;
}

GridMap map_from_json(const json& j) {
  const int width = require_int(j, "width");
  const int height = require_int(j, "height");
  const json& stations_j = require(j, "stations");
  if (!stations_j.is_array()) throw SchemaError("'stations' must be an array");
  std::vector<Station> stations;
  for (const json& sj : stations_j) {
    Station s;
    s.name = require_string(sj, "name");
    auto kind = parse_station_kind(require_string(sj, "kind"));
    if (!kind) throw SchemaError("unknown station kind for '" + s.name + "'");
    s.kind = *kind;
    if (s.kind == StationKind::Dispenser) s.ingredient = require_string(sj, "ingredient");
    s.pos = coord_from_json(require(sj, "pos"));
    if (sj.contains("contents")) {
      if (!sj.at("contents").is_array()) throw SchemaError("'contents' must be an array");
      for (const json& c : sj.at("contents")) s.contents.push_back(item_from_json(c));
    }
    stations.push_back(std::move(s));
  }
  const json& agents_j = require(j, "agents");
  if (!agents_j.is_array()) throw SchemaError("'agents' must be an array");
  std::vector<Coord> spawns;
  for (const json& a : agents_j) spawns.push_back(coord_from_json(a));
  try {
    GridMap map(width, height, std::move(stations), std::move(spawns));
    validate_map(map);
    return map;
  } catch (const MapError& e) {
    throw SchemaError(std::string("invalid map: ") + e.what());
  }
}

json to_json(const TimeConstants& c) {
  return json{{"move_per_tile", c.move_per_tile}, {"interact", c.interact},
              {"cut", c.cut},                     {"pot_cook", c.pot_cook},
              {"pan_cook", c.pan_cook},           {"wash_plate", c.wash_plate},
              {"dirty_plate_return", c.dirty_plate_return}};
}

TimeConstants constants_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("'constants' must be an object");
  TimeConstants c;
  auto read = [&](const char* key, Ticks& field) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_number_integer()) throw SchemaError(std::string("constant '") + key + "' must be an integer");
    field = j.at(key).get<Ticks>();
  };
  read("move_per_tile", c.move_per_tile);
  read("interact", c.interact);
  read("cut", c.cut);
  read("pot_cook", c.pot_cook);
  read("pan_cook", c.pan_cook);
  read("wash_plate", c.wash_plate);
  read("dirty_plate_return", c.dirty_plate_return);
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  return c;
}

}  // namespace paracook::world
