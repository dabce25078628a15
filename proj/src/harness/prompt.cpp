#include "paracook/harness/prompt.hpp"

#include <sstream>

#include "paracook/harness/templates.hpp"
#include "paracook/world/json_io.hpp"

namespace paracook::harness {

std::string_view to_string(Method m) { return m == Method::IO ? "IO" : "CoT"; }

std::optional<Method> parse_method(std::string_view s) {
  if (s == "io" || s == "IO" || s == "I/O") return Method::IO;
  if (s == "cot" || s == "CoT" || s == "COT") return Method::CoT;
  return std::nullopt;
}

std::string render_template(std::string_view tmpl, const std::map<std::string, std::string>& values) {
  std::string out;
  out.reserve(tmpl.size() + 1024);
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    const char c = tmpl[i];
    if (c == '{' && i + 1 < tmpl.size() && tmpl[i + 1] == '{') {
      out += '{';
      ++i;
    } else if (c == '}' && i + 1 < tmpl.size() && tmpl[i + 1] == '}') {
      out += '}';
      ++i;
    } else if (c == '{') {
      const std::size_t close = tmpl.find('}', i);
      if (close == std::string_view::npos) throw PromptError("unterminated placeholder in template");
      const std::string name(tmpl.substr(i + 1, close - i - 1));
      auto it = values.find(name);
      if (it == values.end()) throw PromptError("no value for placeholder {" + name + "}");
      out += it->second;
      i = close;
    } else if (c == '}') {
      throw PromptError("unbalanced '}' in template");
    } else {
      out += c;
    }
  }
  return out;
}

std::string task_description(const world::TaskBundle& b) {
  std::ostringstream os;
  os << "Map JSON:\n" << world::to_json(b.map).dump(2) << "\n\n";
  os << "Recipes:\n";
  for (const auto& r : b.recipes) os << "    " << r.id << ": " << r.text << "\n";
  os << "\nOrders:\n";
  for (std::size_t i = 0; i < b.orders.dishes.size(); ++i) os << "    " << i + 1 << ". " << b.orders.dishes[i] << "\n";
  os << "\nAgents: ";
  for (int a = 0; a < b.n_agents; ++a) os << (a ? ", " : "") << world::agent_name(static_cast<std::size_t>(a));
  os << "\n";
  return os.str();
}

std::string render_prompt(const world::TaskBundle& b, Method method) {
  b.constants.validate();
  const auto& c = b.constants;
  const std::map<std::string, std::string> values{
      {"task", task_description(b)},
      {"INTERACT_TIME", std::to_string(c.interact)},
      {"PROCESS_CUT_TIME", std::to_string(c.cut)},
      {"PROCESS_POT_COOK_TIME", std::to_string(c.pot_cook)},
      {"PROCESS_PAN_COOK_TIME", std::to_string(c.pan_cook)},
      {"PROCESS_WASH_PLATE_TIME", std::to_string(c.wash_plate)},
      {"RETURN_DIRTY_PLATE_TIME", std::to_string(c.dirty_plate_return)},
  };
  std::string text = method == Method::IO
                         ? render_template(templates::kIoPart1, values) + "\n" + render_template(templates::kIoPart2, values) +
                               "\n" + render_template(templates::kIoPart3, values)
                         : render_template(templates::kCotPart1, values) + "\n" + render_template(templates::kCotPart2, values);
  if (c.move_per_tile != 1) {
    // The templates spell out the default movement cost; keep the prompt truthful for other bundles.
    const std::string from = "Move: 1 unit per tile";
    const std::string to = "Move: " + std::to_string(c.move_per_tile) + " units per tile";
    for (std::size_t pos = text.find(from); pos != std::string::npos; pos = text.find(from, pos + to.size()))
      text.replace(pos, from.size(), to);
  }
  return text;
}

namespace {

/// End of the balanced object starting at `open`, honouring JSON strings; npos if unbalanced.
std::size_t match_object(std::string_view s, std::size_t open) {
  int depth = 0;
  bool in_string = false;
  for (std::size_t i = open; i < s.size(); ++i) {
    const char c = s[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
      continue;
    }
    if (c == '"') in_string = true;
    else if (c == '{') ++depth;
    else if (c == '}' && --depth == 0) return i;
  }
  return std::string_view::npos;
}

// First top-level object carrying a "plan" key, else the first parseable object at all.
std::optional<json> first_object(std::string_view text) {
  std::optional<json> fallback;
  for (std::size_t open = text.find('{'); open != std::string_view::npos; open = text.find('{', open + 1)) {
    const std::size_t close = match_object(text, open);
    if (close == std::string_view::npos) continue;
    json j = json::parse(text.substr(open, close - open + 1), nullptr, false);
    if (j.is_discarded() || !j.is_object()) continue;
    if (j.contains("plan")) return j;
    if (!fallback) fallback = std::move(j);
    open = close;  // do not descend into an object that already parsed
  }
  return fallback;
}

}  // namespace

std::optional<json> extract_json_object(std::string_view text) {
  // Fenced blocks first: models often wrap the answer in ```json ... ```.
  for (std::size_t fence = text.find("```"); fence != std::string_view::npos;) {
    const std::size_t body = text.find('\n', fence);
    if (body == std::string_view::npos) break;
    const std::size_t end = text.find("```", body);
    if (end == std::string_view::npos) break;
    if (auto j = first_object(text.substr(body + 1, end - body - 1)); j && j->contains("plan")) return j;
    fence = text.find("```", end + 3);
  }
  return first_object(text);
}

ParsedOutput parse_plan(std::string_view raw) {
  ParsedOutput out;
  const auto doc = extract_json_object(raw);
  if (!doc) {
    out.error = "no JSON object found in model output";
    return out;
  }
  if (doc->contains("CoT")) out.cot = doc->at("CoT");
  try {
    out.plan = sim::plan_from_json(*doc);
  } catch (const sim::PlanError& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace paracook::harness
