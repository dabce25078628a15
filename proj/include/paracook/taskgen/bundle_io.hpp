#pragma once

#include <filesystem>

#include <json.hpp>

#include "paracook/world/bundle.hpp"

namespace paracook::taskgen {

using json = nlohmann::json;

/// Bundle file: map, recipe ids + texts, orders, constants, seed, t_max, d_max, difficulty, rules.
json bundle_to_json(const world::TaskBundle& b);

/// Recipe workflows are resolved through the catalog by id. Throws world::SchemaError.
world::TaskBundle bundle_from_json(const json& j);

/// Pretty-printed with sorted keys, so equal bundles give byte-identical files.
std::string dump_bundle(const world::TaskBundle& b);
void save_bundle(const world::TaskBundle& b, const std::filesystem::path& path);
world::TaskBundle load_bundle(const std::filesystem::path& path);

}  // namespace paracook::taskgen
