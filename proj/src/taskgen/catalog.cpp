#include "paracook/taskgen/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace paracook::taskgen {

using world::CookMethod;
using world::IngredientChain;
using world::Recipe;

namespace {

IngredientChain raw(std::string name) { return {std::move(name), false, CookMethod::None}; }
IngredientChain chopped(std::string name) { return {std::move(name), true, CookMethod::None}; }
IngredientChain pan_fried(std::string name) { return {std::move(name), true, CookMethod::Pan}; }
IngredientChain boiled(std::string name) { return {std::move(name), false, CookMethod::Pot}; }

std::vector<Recipe> build_catalog() {
  return {
      {"burger_basic", "burger",
       "First chop the meat and cook it in pan. Then put the cooked meat with a piece of bread on a plate to make a "
       "basic burger.",
       {pan_fried("meat"), raw("bread")}},
      {"burger_lettuce", "burger",
       "Chop the meat and cook it in pan. Chop the lettuce. Then put the cooked meat, chopped lettuce with a piece of "
       "bread on a plate to make a burger with lettuce.",
       {pan_fried("meat"), chopped("lettuce"), raw("bread")}},
      {"burger_full", "burger",
       "Chop the meat and cook it in pan. Chop the lettuce and tomato. Then put the cooked meat, chopped lettuce, "
       "chopped tomato with a piece of bread on a plate to make a full burger.",
       {pan_fried("meat"), chopped("lettuce"), chopped("tomato"), raw("bread")}},
      {"burger_cheese", "burger",
       "Chop the meat and cook it in pan. Then put the cooked meat with a piece of bread and a slice of cheese on a "
       "plate to make a burger with cheese.",
       {pan_fried("meat"), raw("bread"), raw("cheese")}},
      {"burger_cheese_lettuce", "burger",
       "Chop the meat and cook it in pan. Chop the lettuce. Then put the cooked meat, chopped lettuce with a piece of "
       "bread and a slice of cheese on a plate to make a burger with cheese and lettuce.",
       {pan_fried("meat"), chopped("lettuce"), raw("bread"), raw("cheese")}},
      {"burrito_meat", "burrito",
       "Chop and cook the meat in pan, cook the rice in pot, then put cooked meat and cooked rice together with a raw "
       "tortilla to a plate to make a burrito with meat.",
       {pan_fried("meat"), boiled("rice"), raw("tortilla")}},
      {"burrito_chicken", "burrito",
       "Chop and cook the chicken in pan, cook the rice in pot, then put cooked chicken and cooked rice together with "
       "a raw tortilla to a plate to make a burrito with chicken.",
       {pan_fried("chicken"), boiled("rice"), raw("tortilla")}},
      {"burrito_mushroom", "burrito",
       "Chop and cook the mushroom in pan, cook the rice in pot, then put cooked mushroom and cooked rice together "
       "with a raw tortilla to a plate to make a burrito with mushroom.",
       {pan_fried("mushroom"), boiled("rice"), raw("tortilla")}},
      {"pasta_tomato", "pasta",
       "Cook the pasta in pot, chop the tomato and cook it in pan, then put cooked pasta and cooked tomato together to "
       "a plate to make pasta with tomato pasta.",
       {boiled("pasta"), pan_fried("tomato")}},
      {"pasta_meat", "pasta",
       "Cook the pasta in pot, chop the meat and cook it in pan, then put cooked pasta and cooked meat together to a "
       "plate to make pasta with meat sauce.",
       {boiled("pasta"), pan_fried("meat")}},
      {"pasta_mushroom", "pasta",
       "Cook the pasta in pot, chop the mushroom and cook it in pan, then put cooked pasta and cooked mushroom "
       "together to a plate to make pasta with mushroom sauce.",
       {boiled("pasta"), pan_fried("mushroom")}},
      {"pasta_seafood", "pasta",
       "Cook the pasta in pot, chop the fish and prawn and cook them in pan respectively, then put cooked pasta, "
       "cooked fish and cooked prawn together to a plate to make seafood pasta.",
       {boiled("pasta"), pan_fried("fish"), pan_fried("prawn")}},
      {"salad_basic", "salad", "Put chopped lettuce on a plate to make a salad.", {chopped("lettuce")}},
      {"salad_advanced", "salad", "Put chopped lettuce and chopped tomato together to a plate to make a salad.",
       {chopped("lettuce"), chopped("tomato")}},
      {"salad_full", "salad",
       "Put chopped lettuce, chopped tomato and chopped cucumber together to a plate to make a salad.",
       {chopped("lettuce"), chopped("tomato"), chopped("cucumber")}},
      {"sashimi_fish", "sashimi", "Chop the fish and put the chopped fish to a plate to make sashimi with fish.",
       {chopped("fish")}},
      {"sashimi_shrimp", "sashimi", "Chop the shrimp and put the chopped shrimp to a plate to make sashimi with shrimp.",
       {chopped("shrimp")}},
      {"sushi_fish", "sushi",
       "First chop the fish and cook the rice. Then put the chopped fish and cooked rice and a piece of nori on a "
       "plate to make a fish sushi.",
       {chopped("fish"), boiled("rice"), raw("nori")}},
      {"sushi_cucumber", "sushi",
       "First chop the cucumber and cook the rice. Then put the chopped cucumber and cooked rice and a piece of nori "
       "on a plate to make a cucumber sushi.",
       {chopped("cucumber"), boiled("rice"), raw("nori")}},
      {"sushi_full", "sushi",
       "First chop the fish and cucumber and cook the rice. Then put the chopped fish, chopped cucumber and cooked "
       "rice and a piece of nori on a plate to make a full sushi.",
       {chopped("fish"), chopped("cucumber"), boiled("rice"), raw("nori")}},
  };
}

}  // namespace

const std::vector<Recipe>& recipe_catalog() {
  static const std::vector<Recipe> catalog = build_catalog();
  return catalog;
}

const Recipe* find_recipe(std::string_view id) {
  const auto& c = recipe_catalog();
  auto it = std::find_if(c.begin(), c.end(), [&](const Recipe& r) { return r.id == id; });
  return it == c.end() ? nullptr : &*it;
}

const std::vector<std::string>& categories() {
  static const std::vector<std::string> cats = {"burger", "burrito", "pasta", "salad", "sashimi", "sushi"};
  return cats;
}

std::vector<const Recipe*> recipes_in(std::string_view category) {
  std::vector<const Recipe*> out;
  for (const Recipe& r : recipe_catalog())
    if (r.category == category) out.push_back(&r);
  return out;
}

std::string recipe_difficulty(std::string_view category) {
  if (category == "salad" || category == "sashimi") return "easy";
  if (category == "burger" || category == "sushi") return "medium";
  if (category == "burrito" || category == "pasta") return "hard";
  throw std::invalid_argument("unknown recipe category '" + std::string(category) + "'");
}

}  // namespace paracook::taskgen
