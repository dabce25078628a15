#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paracook/world/item.hpp"

namespace paracook::world {

enum class StepKind { GetIngredient, Chop, CookInPot, CookInPan, Plate, Serve };

std::string_view to_string(StepKind k);

struct CookStep {
  StepKind kind = StepKind::GetIngredient;
  std::string ingredient;  // empty for Plate and Serve
};

/// Dependency DAG of cooking steps; edges are (before, after) step indices.
struct Workflow {
  std::vector<CookStep> steps;
  std::vector<std::pair<int, int>> edges;
};

/// One ingredient's preparation chain inside a recipe.
struct IngredientChain {
  std::string ingredient;
  bool chop = false;
  CookMethod cook = CookMethod::None;

  FoodState final_state() const;
};

/// (ingredient, state) pair as it must appear on the served plate.
struct PlatedItem {
  std::string ingredient;
  FoodState state = FoodState::Raw;

  friend auto operator<=>(const PlatedItem&, const PlatedItem&) = default;
};

struct Recipe {
  std::string id;
  std::string category;
  std::string text;
  std::vector<IngredientChain> chains;

  /// Per-ingredient chains joined at a single Plate step followed by Serve.
  Workflow workflow() const;

  /// Sorted multiset of what a correct plate holds.
  std::vector<PlatedItem> plated() const;
};

/// True when `plate` holds exactly the recipe's finished ingredients (order irrelevant).
bool plate_matches(const Item& plate, const Recipe& recipe);

}  // namespace paracook::world
