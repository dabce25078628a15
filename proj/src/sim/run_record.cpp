#include "paracook/sim/run_record.hpp"

#include "paracook/world/bundle.hpp"
#include "paracook/world/json_io.hpp"

namespace paracook::sim {

using world::SchemaError;

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Started: return "started";
    case Outcome::Completed: return "completed";
    case Outcome::Rejected: return "rejected";
  }
  return "?";
}

json to_json(const Event& e) {
  json j{{"clock", e.clock},
         {"agent", world::agent_name(e.agent)},
         {"action", to_json(e.action)},
         {"outcome", to_string(e.outcome)}};
  if (e.outcome == Outcome::Rejected) {
    j["reason"] = e.reason;
    j["detail"] = e.detail;
  }
  return j;
}

Event event_from_json(const json& j) {
  try {
    Event e;
    e.clock = j.at("clock").get<Ticks>();
    auto agent = world::parse_agent_name(j.at("agent").get<std::string>());
    if (!agent) throw SchemaError("bad agent id in event");
    e.agent = *agent;
    e.action = action_from_json(j.at("action"));
    const auto outcome = j.at("outcome").get<std::string>();
    if (outcome == "started") e.outcome = Outcome::Started;
    else if (outcome == "completed") e.outcome = Outcome::Completed;
    else if (outcome == "rejected") e.outcome = Outcome::Rejected;
    else throw SchemaError("unknown event outcome '" + outcome + "'");
    if (j.contains("reason")) e.reason = j.at("reason").get<std::string>();
    if (j.contains("detail")) e.detail = j.at("detail").get<std::string>();
    return e;
  } catch (const json::exception& ex) {
    throw SchemaError(std::string("malformed event: ") + ex.what());
  } catch (const PlanError& ex) {
    throw SchemaError(std::string("malformed event action: ") + ex.what());
  }
}

json to_json(const RunRecord& r) {
  json per_agent = json::array();
  for (std::size_t i = 0; i < r.per_agent.size(); ++i)
    per_agent.push_back({{"agent", world::agent_name(i)},
                         {"distance", r.per_agent[i].distance},
                         {"work_time", r.per_agent[i].work_time}});
  json served = json::array();
  for (const ServedDish& s : r.served) served.push_back({{"dish", s.dish}, {"clock", s.clock}});
  json events = json::array();
  for (const Event& e : r.events) events.push_back(to_json(e));
  return json{{"success", r.success},
              {"oct", r.oct},
              {"per_agent", std::move(per_agent)},
              {"served", std::move(served)},
              {"failure_reason", r.failure_reason ? json(*r.failure_reason) : json(nullptr)},
              {"events", std::move(events)},
              {"controller", r.controller}};
}

RunRecord run_record_from_json(const json& j) {
  try {
    RunRecord r;
    r.success = j.at("success").get<bool>();
    r.oct = j.at("oct").get<Ticks>();
    for (const json& a : j.at("per_agent"))
      r.per_agent.push_back({a.at("distance").get<int>(), a.at("work_time").get<Ticks>()});
    for (const json& s : j.at("served")) r.served.push_back({s.at("dish").get<std::string>(), s.at("clock").get<Ticks>()});
    if (!j.at("failure_reason").is_null()) r.failure_reason = j.at("failure_reason").get<std::string>();
    for (const json& e : j.at("events")) r.events.push_back(event_from_json(e));
    r.controller = j.at("controller").get<std::string>();
    return r;
  } catch (const json::exception& ex) {
    throw SchemaError(std::string("malformed run record: ") + ex.what());
  }
}

}  // namespace paracook::sim
