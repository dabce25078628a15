#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "paracook/sim/action.hpp"
#include "paracook/world/grid_map.hpp"

namespace paracook::sim {

enum class Outcome { Started, Completed, Rejected };

std::string_view to_string(Outcome o);

struct Event {
  Ticks clock = 0;
  world::AgentIndex agent = 0;
  Action action;
  Outcome outcome = Outcome::Started;
  std::string reason;  // rejection code, e.g. "illegal-process"
  std::string detail;  // human-readable context for rejections

  friend bool operator==(const Event&, const Event&) = default;
};

struct AgentTotals {
  int distance = 0;
  Ticks work_time = 0;

  friend bool operator==(const AgentTotals&, const AgentTotals&) = default;
};

struct ServedDish {
  std::string dish;
  Ticks clock = 0;

  friend bool operator==(const ServedDish&, const ServedDish&) = default;
};

/// Execution outcome of one task, shared by batch runs and live sessions.
struct RunRecord {
  bool success = false;
  Ticks oct = 0;
  std::vector<AgentTotals> per_agent;
  std::vector<ServedDish> served;
  std::optional<std::string> failure_reason;
  std::vector<Event> events;
  std::string controller = "model";  // model | human | scripted

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

json to_json(const Event& e);
Event event_from_json(const json& j);

json to_json(const RunRecord& r);
/// Throws world::SchemaError on malformed input.
RunRecord run_record_from_json(const json& j);

}  // namespace paracook::sim
