#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "paracook/world/geometry.hpp"

namespace paracook::sim {

using json = nlohmann::json;

struct MoveTo {
  Coord target;
  friend bool operator==(const MoveTo&, const MoveTo&) = default;
};

struct Interact {
  std::string target;
  friend bool operator==(const Interact&, const Interact&) = default;
};

struct Process {
  std::string target;
  friend bool operator==(const Process&, const Process&) = default;
};

struct Wait {
  Ticks duration = 0;
  friend bool operator==(const Wait&, const Wait&) = default;
};

struct Finish {
  friend bool operator==(const Finish&, const Finish&) = default;
};

/// The closed action set: nothing else parses.
using Action = std::variant<MoveTo, Interact, Process, Wait, Finish>;

/// Per-agent ordered action lists; index 0 is "agent1".
struct Plan {
  std::vector<std::vector<Action>> per_agent;

  friend bool operator==(const Plan&, const Plan&) = default;
};

class PlanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Action& a);
/// Throws PlanError on anything outside the five-action schema.
Action action_from_json(const json& j);

/// {"plan": {"agent1": [...], ...}}
json to_json(const Plan& p);
/// Accepts the document above; agent keys must be "agentK". Throws PlanError.
Plan plan_from_json(const json& j);

std::string describe(const Action& a);

}  // namespace paracook::sim
