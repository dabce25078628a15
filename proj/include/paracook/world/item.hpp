#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paracook/world/geometry.hpp"

namespace paracook::world {

enum class ItemKind { Ingredient, Plate, Pot, Pan };

/// Life cycle of a food item. Cooking is only ever observed inside cookware.
enum class FoodState { Raw, Chopped, Cooking, Cooked };

enum class CookMethod { None, Pot, Pan };

/// Static properties of one ingredient type.
struct IngredientTraits {
  std::string_view name;
  bool choppable = false;
  CookMethod cook = CookMethod::None;
};

/// Looks up an ingredient in the closed ingredient table; nullptr when unknown.
const IngredientTraits* find_ingredient(std::string_view name);
const std::vector<IngredientTraits>& ingredient_table();

struct Item {
  ItemKind kind = ItemKind::Ingredient;
  std::string ingredient;               // Ingredient only
  FoodState food = FoodState::Raw;      // Ingredient only
  Ticks progress = 0;                   // Ingredient only: accumulated cook time
  bool dirty = false;                   // Plate only
  std::vector<Item> contents;           // Plate and cookware

  static Item raw(std::string name);
  static Item clean_plate();
  static Item dirty_plate();
  static Item pot();
  static Item pan();

  bool is_plate() const { return kind == ItemKind::Plate; }
  bool is_clean_plate() const { return is_plate() && !dirty; }
  bool is_cookware() const { return kind == ItemKind::Pot || kind == ItemKind::Pan; }
  bool is_ingredient() const { return kind == ItemKind::Ingredient; }
  bool empty() const { return contents.empty(); }

  friend bool operator==(const Item&, const Item&) = default;
};

/// True when `cookware` can take `ingredient` right now (capacity one, method and state must fit).
bool cookware_accepts(const Item& cookware, const Item& ingredient);

/// Counts ingredients, recursing into containers.
int count_ingredients(const Item& item);

/// Counts plates (clean or dirty), recursing into containers.
int count_plates(const Item& item);

std::string_view to_string(ItemKind k);
std::string_view to_string(FoodState s);
std::optional<ItemKind> parse_item_kind(std::string_view s);
std::optional<FoodState> parse_food_state(std::string_view s);

/// Short human-readable description, e.g. "plate[chopped lettuce]".
std::string describe(const Item& item);

}  // namespace paracook::world
