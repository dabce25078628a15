#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "paracook/sim/action.hpp"
#include "paracook/world/bundle.hpp"

namespace paracook::harness {

using json = nlohmann::json;

enum class Method { IO, CoT };

std::string_view to_string(Method m);
/// Accepts "io" / "IO" and "cot" / "CoT".
std::optional<Method> parse_method(std::string_view s);

class PromptError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Format-string substitution: "{name}" is replaced from `values`, "{{" and "}}" become single
/// braces. Throws PromptError for a placeholder without a value or an unbalanced brace.
std::string render_template(std::string_view tmpl, const std::map<std::string, std::string>& values);

/// The "{task}" body: map JSON, recipe texts, and the ordered dish list.
std::string task_description(const world::TaskBundle& bundle);

/// Full prompt for a bundle; identical bytes for identical inputs.
std::string render_prompt(const world::TaskBundle& bundle, Method method);

struct ParsedOutput {
  std::optional<sim::Plan> plan;
  std::optional<json> cot;  // kept for the record, never part of the plan
  std::string error;        // set iff plan is empty

  bool ok() const { return plan.has_value(); }
};

/// Finds the outermost JSON object in free text (markdown fences tolerated), or nullopt.
std::optional<json> extract_json_object(std::string_view text);

/// Never throws: every failure comes back as `error`.
ParsedOutput parse_plan(std::string_view raw);

}  // namespace paracook::harness
