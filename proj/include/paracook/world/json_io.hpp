#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "paracook/world/bundle.hpp"
#include "paracook/world/grid_map.hpp"
#include "paracook/world/item.hpp"

namespace paracook::world {

using json = nlohmann::json;

/// Raised for any JSON document that violates one of the project's schemas.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(Coord c);
Coord coord_from_json(const json& j);

json to_json(const Item& item);
/// Accepts the object form or the shorthand strings "pot", "pan", "clean_plate", "dirty_plate".
Item item_from_json(const json& j);

json to_json(const Station& s);

/// Map JSON: {"width", "height", "stations": [{"name", "kind", "ingredient"?, "pos", "contents"?}], "agents"}.
json to_json(const GridMap& map);
GridMap map_from_json(const json& j);

json to_json(const TimeConstants& c);
TimeConstants constants_from_json(const json& j);

}  // namespace paracook::world
