#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "paracook/world/recipe.hpp"

namespace paracook::taskgen {

/// The closed 20-recipe menu with hand-authored workflows.
const std::vector<world::Recipe>& recipe_catalog();

const world::Recipe* find_recipe(std::string_view id);

/// burger, burrito, pasta, salad, sashimi, sushi
const std::vector<std::string>& categories();

std::vector<const world::Recipe*> recipes_in(std::string_view category);

/// Fixed category -> easy | medium | hard convention.
std::string recipe_difficulty(std::string_view category);

}  // namespace paracook::taskgen
