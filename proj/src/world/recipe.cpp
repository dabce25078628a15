#include "paracook/world/recipe.hpp"

#include <algorithm>

namespace paracook::world {

std::string_view to_string(StepKind k) {
  switch (k) {
    case StepKind::GetIngredient: return "get";
    case StepKind::Chop: return "chop";
    case StepKind::CookInPot: return "cook_in_pot";
    case StepKind::CookInPan: return "cook_in_pan";
    case StepKind::Plate: return "plate";
    case StepKind::Serve: return "serve";
  }
  return "?";
}

FoodState IngredientChain::final_state() const {
  if (cook != CookMethod::None) return FoodState::Cooked;
  return chop ? FoodState::Chopped : FoodState::Raw;
}

Workflow Recipe::workflow() const {
  Workflow w;
  std::vector<int> chain_tails;
  for (const IngredientChain& c : chains) {
    int prev = static_cast<int>(w.steps.size());
    w.steps.push_back({StepKind::GetIngredient, c.ingredient});
    auto extend = [&](StepKind k) {
      const int idx = static_cast<int>(w.steps.size());
      w.steps.push_back({k, c.ingredient});
      w.edges.emplace_back(prev, idx);
      prev = idx;
    };
    if (c.chop) extend(StepKind::Chop);
    if (c.cook == CookMethod::Pot) extend(StepKind::CookInPot);
    if (c.cook == CookMethod::Pan) extend(StepKind::CookInPan);
    chain_tails.push_back(prev);
  }
  const int plate = static_cast<int>(w.steps.size());
  w.steps.push_back({StepKind::Plate, {}});
  for (int tail : chain_tails) w.edges.emplace_back(tail, plate);
  const int serve = static_cast<int>(w.steps.size());
  w.steps.push_back({StepKind::Serve, {}});
  w.edges.emplace_back(plate, serve);
  return w;
}

std::vector<PlatedItem> Recipe::plated() const {
  std::vector<PlatedItem> out;
  out.reserve(chains.size());
  for (const IngredientChain& c : chains) out.push_back({c.ingredient, c.final_state()});
  std::sort(out.begin(), out.end());
  return out;
}

bool plate_matches(const Item& plate, const Recipe& recipe) {
  if (!plate.is_clean_plate()) return false;
  std::vector<PlatedItem> have;
  for (const Item& i : plate.contents) {
    if (!i.is_ingredient()) return false;
    have.push_back({i.ingredient, i.food});
  }
  std::sort(have.begin(), have.end());
  return have == recipe.plated();
}

}  // namespace paracook::world
