#include "paracook/world/item.hpp"

#include <algorithm>

namespace paracook::world {

namespace {

const std::vector<IngredientTraits> kIngredients = {
    {"bread", false, CookMethod::None},    {"cheese", false, CookMethod::None},
    {"chicken", true, CookMethod::Pan},    {"cucumber", true, CookMethod::None},
    {"fish", true, CookMethod::Pan},       {"lettuce", true, CookMethod::None},
    {"meat", true, CookMethod::Pan},       {"mushroom", true, CookMethod::Pan},
    {"nori", false, CookMethod::None},     {"pasta", false, CookMethod::Pot},
    {"prawn", true, CookMethod::Pan},      {"rice", false, CookMethod::Pot},
    {"shrimp", true, CookMethod::None},    {"tomato", true, CookMethod::Pan},
    {"tortilla", false, CookMethod::None},
};

}  // namespace

const std::vector<IngredientTraits>& ingredient_table() { return kIngredients; }

const IngredientTraits* find_ingredient(std::string_view name) {
  auto it = std::find_if(kIngredients.begin(), kIngredients.end(),
                         [&](const IngredientTraits& t) { return t.name == name; });
  return it == kIngredients.end() ? nullptr : &*it;
}

Item Item::raw(std::string name) {
  Item i;
  i.kind = ItemKind::Ingredient;
  i.ingredient = std::move(name);
  return i;
}

Item Item::clean_plate() {
  Item i;
  i.kind = ItemKind::Plate;
  return i;
}

Item Item::dirty_plate() {
  Item i = clean_plate();
  i.dirty = true;
  return i;
}

Item Item::pot() {
  Item i;
  i.kind = ItemKind::Pot;
  return i;
}

Item Item::pan() {
  Item i;
  i.kind = ItemKind::Pan;
  return i;
}

bool cookware_accepts(const Item& cookware, const Item& ingredient) {
  if (!cookware.is_cookware() || !cookware.contents.empty() || !ingredient.is_ingredient()) return false;
  const IngredientTraits* traits = find_ingredient(ingredient.ingredient);
  if (traits == nullptr) return false;
  if (cookware.kind == ItemKind::Pot)
    return traits->cook == CookMethod::Pot && ingredient.food == FoodState::Raw;
  // Pan food must be chopped first.
  return traits->cook == CookMethod::Pan && ingredient.food == FoodState::Chopped;
}

int count_ingredients(const Item& item) {
  int n = item.is_ingredient() ? 1 : 0;
  for (const Item& c : item.contents) n += count_ingredients(c);
  return n;
}

int count_plates(const Item& item) {
  int n = item.is_plate() ? 1 : 0;
  for (const Item& c : item.contents) n += count_plates(c);
  return n;
}

std::string_view to_string(ItemKind k) {
  switch (k) {
    case ItemKind::Ingredient: return "ingredient";
    case ItemKind::Plate: return "plate";
    case ItemKind::Pot: return "pot";
    case ItemKind::Pan: return "pan";
  }
  return "?";
}

std::string_view to_string(FoodState s) {
  switch (s) {
    case FoodState::Raw: return "raw";
    case FoodState::Chopped: return "chopped";
    case FoodState::Cooking: return "cooking";
    case FoodState::Cooked: return "cooked";
  }
  return "?";
}

std::optional<ItemKind> parse_item_kind(std::string_view s) {
  for (ItemKind k : {ItemKind::Ingredient, ItemKind::Plate, ItemKind::Pot, ItemKind::Pan})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

std::optional<FoodState> parse_food_state(std::string_view s) {
  for (FoodState f : {FoodState::Raw, FoodState::Chopped, FoodState::Cooking, FoodState::Cooked})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

std::string describe(const Item& item) {
  std::string out;
  if (item.is_ingredient()) {
    out.append(to_string(item.food));
    out.push_back(' ');
    out.append(item.ingredient);
    return out;
  }
  if (item.is_plate()) out = item.dirty ? "dirty plate" : "plate";
  else out = std::string(to_string(item.kind));
  if (!item.contents.empty()) {
    out.push_back('[');
    for (std::size_t i = 0; i < item.contents.size(); ++i) {
      if (i) out.append(", ");
      out.append(describe(item.contents[i]));
    }
    out.push_back(']');
  }
  return out;
}

}  // namespace paracook::world
