#include "paracook/sim/action.hpp"

#include <cmath>

#include "paracook/world/bundle.hpp"

namespace paracook::sim {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string target_name(const json& j) {
  if (!j.contains("target") || !j.at("target").is_string() || j.at("target").get<std::string>().empty())
    throw PlanError("action target must be a station name");
  return j.at("target").get<std::string>();
}

}  // namespace

json to_json(const Action& a) {
  return std::visit(Overloaded{
                        [](const MoveTo& m) { return json{{"action", "MoveTo"}, {"target", {m.target.x, m.target.y}}}; },
                        [](const Interact& i) { return json{{"action", "Interact"}, {"target", i.target}}; },
                        [](const Process& p) { return json{{"action", "Process"}, {"target", p.target}}; },
                        [](const Wait& w) { return json{{"action", "Wait"}, {"duration", w.duration}}; },
                        [](const Finish&) { return json{{"action", "Finish"}}; },
                    },
                    a);
}

Action action_from_json(const json& j) {
  if (!j.is_object() || !j.contains("action") || !j.at("action").is_string())
    throw PlanError("each action must be an object with an \"action\" string");
  const std::string kind = j.at("action").get<std::string>();
  if (kind == "MoveTo") {
    if (!j.contains("target")) throw PlanError("MoveTo requires a target coordinate");
    const json& t = j.at("target");
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_number_integer())
      throw PlanError("MoveTo target must be [x, y] with integer entries");
    return MoveTo{{t[0].get<int>(), t[1].get<int>()}};
  }
  if (kind == "Interact") return Interact{target_name(j)};
  if (kind == "Process") return Process{target_name(j)};
  if (kind == "Wait") {
    if (!j.contains("duration") || !j.at("duration").is_number()) throw PlanError("Wait requires a numeric duration");
    const json& d = j.at("duration");
    Ticks value = 0;
    if (d.is_number_integer()) {
      value = d.get<Ticks>();
    } else {
      const double v = d.get<double>();
      if (std::floor(v) != v) throw PlanError("Wait duration must be a whole number of time units");
      value = static_cast<Ticks>(v);
    }
    if (value < 0) throw PlanError("Wait duration must be non-negative");
    return Wait{value};
  }
  if (kind == "Finish") return Finish{};
  throw PlanError("unknown action '" + kind + "'");
}

json to_json(const Plan& p) {
  json agents = json::object();
  for (std::size_t i = 0; i < p.per_agent.size(); ++i) {
    json list = json::array();
    for (const Action& a : p.per_agent[i]) list.push_back(to_json(a));
    agents[world::agent_name(i)] = std::move(list);
  }
  return json{{"plan", std::move(agents)}};
}

Plan plan_from_json(const json& j) {
  if (!j.is_object() || !j.contains("plan") || !j.at("plan").is_object())
    throw PlanError("document must contain a \"plan\" object");
  Plan plan;
  for (const auto& [key, list] : j.at("plan").items()) {
    auto index = world::parse_agent_name(key);
    if (!index) throw PlanError("invalid agent id '" + key + "'");
    if (!list.is_array()) throw PlanError("action list for '" + key + "' must be an array");
    if (plan.per_agent.size() <= *index) plan.per_agent.resize(*index + 1);
    for (const json& a : list) plan.per_agent[*index].push_back(action_from_json(a));
  }
  return plan;
}

std::string describe(const Action& a) {
  return std::visit(Overloaded{
                        [](const MoveTo& m) {
                          return "MoveTo(" + std::to_string(m.target.x) + ", " + std::to_string(m.target.y) + ")";
                        },
                        [](const Interact& i) { return "Interact(" + i.target + ")"; },
                        [](const Process& p) { return "Process(" + p.target + ")"; },
                        [](const Wait& w) { return "Wait(" + std::to_string(w.duration) + ")"; },
                        [](const Finish&) { return std::string("Finish"); },
                    },
                    a);
}

}  // namespace paracook::sim
