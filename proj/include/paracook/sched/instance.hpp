#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "paracook/world/geometry.hpp"

namespace paracook::sched {

using json = nlohmann::json;

struct Edge {
  int u = 0;
  int v = 0;
  Ticks d = 0;  // minimum wait between the end of u and the start of v

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// DAG scheduling instance: tasks with durations, delayed precedence edges, m identical agents.
struct AbstractInstance {
  std::vector<json> ids;    // external task ids (strings or integers), parallel to `t`
  std::vector<Ticks> t;
  std::vector<Edge> edges;
  int m = 1;
  Ticks setup = 0;          // transition time between consecutive tasks of one agent

  int n() const { return static_cast<int>(t.size()); }

  friend bool operator==(const AbstractInstance&, const AbstractInstance&) = default;
};

struct Schedule {
  std::vector<int> agent;    // per task, 0-based
  std::vector<Ticks> start;  // per task
  Ticks makespan = 0;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws InstanceError on cycles, bad durations, negative delays, bad indices or m < 1.
void check_instance(const AbstractInstance& inst);

/// Tasks in a topological order (ties by index), or nullopt when the edges form a cycle.
std::optional<std::vector<int>> topological_order(int n, const std::vector<Edge>& edges);

/// Longest path through durations and delays; a lower bound on any makespan.
Ticks critical_path(const AbstractInstance& inst);

/// Everything on one agent back to back, plus every delay and setup; an upper bound on the optimum.
Ticks serial_bound(const AbstractInstance& inst);

/// {"tasks": [{"id", "t"}], "edges": [{"u", "v", "d"}], "agents": m, "setup"?}
json to_json(const AbstractInstance& inst);
AbstractInstance instance_from_json(const json& j);

/// {"assignment": {id: agent}, "start": {id: time}, "makespan": M}; object keys are the task ids as text.
json to_json(const Schedule& s, const AbstractInstance& inst);
/// Throws InstanceError for ids the instance does not contain.
Schedule schedule_from_json(const json& j, const AbstractInstance& inst);

std::string id_text(const json& id);

}  // namespace paracook::sched
