#include "paracook/sched/instance.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace paracook::sched {

std::optional<std::vector<int>> topological_order(int n, const std::vector<Edge>& edges) {
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    out[static_cast<std::size_t>(e.u)].push_back(e.v);
    ++indeg[static_cast<std::size_t>(e.v)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
  std::vector<int> order;
  while (!ready.empty()) {
    const int u = ready.top();
    ready.pop();
    order.push_back(u);
    for (int v : out[static_cast<std::size_t>(u)])
      if (--indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

void check_instance(const AbstractInstance& inst) {
  if (inst.m < 1) throw InstanceError("an instance needs at least one agent");
  if (inst.setup < 0) throw InstanceError("setup time must be non-negative");
  if (inst.ids.size() != inst.t.size()) throw InstanceError("task ids and durations differ in length");
  for (std::size_t i = 0; i < inst.t.size(); ++i)
    if (inst.t[i] <= 0) throw InstanceError("task " + id_text(inst.ids[i]) + " has a non-positive duration");
  for (const Edge& e : inst.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= inst.n() || e.v >= inst.n()) throw InstanceError("edge references an unknown task");
    if (e.u == e.v) throw InstanceError("self-loop on task " + id_text(inst.ids[static_cast<std::size_t>(e.u)]));
    if (e.d < 0) throw InstanceError("edge delays must be non-negative");
  }
  if (!topological_order(inst.n(), inst.edges)) throw InstanceError("dependency graph has a cycle");
}

Ticks critical_path(const AbstractInstance& inst) {
  const auto order = topological_order(inst.n(), inst.edges);
  if (!order) throw InstanceError("dependency graph has a cycle");
  std::vector<std::vector<const Edge*>> in(inst.t.size());
  for (const Edge& e : inst.edges) in[static_cast<std::size_t>(e.v)].push_back(&e);
  std::vector<Ticks> finish(inst.t.size(), 0);
  Ticks best = 0;
  for (int v : *order) {
    Ticks start = 0;
    for (const Edge* e : in[static_cast<std::size_t>(v)])
      start = std::max(start, finish[static_cast<std::size_t>(e->u)] + e->d);
    finish[static_cast<std::size_t>(v)] = start + inst.t[static_cast<std::size_t>(v)];
    best = std::max(best, finish[static_cast<std::size_t>(v)]);
  }
  return best;
}

Ticks serial_bound(const AbstractInstance& inst) {
  Ticks sum = 0;
  for (Ticks x : inst.t) sum += x;
  for (const Edge& e : inst.edges) sum += e.d;
  if (inst.n() > 1) sum += static_cast<Ticks>(inst.n() - 1) * inst.setup;
  return sum;
}

std::string id_text(const json& id) { return id.is_string() ? id.get<std::string>() : id.dump(); }

json to_json(const AbstractInstance& inst) {
  json tasks = json::array();
  for (std::size_t i = 0; i < inst.t.size(); ++i) tasks.push_back({{"id", inst.ids[i]}, {"t", inst.t[i]}});
  json edges = json::array();
  for (const Edge& e : inst.edges)
    edges.push_back({{"u", inst.ids[static_cast<std::size_t>(e.u)]}, {"v", inst.ids[static_cast<std::size_t>(e.v)]}, {"d", e.d}});
  json j{{"tasks", tasks}, {"edges", edges}, {"agents", inst.m}};
  if (inst.setup != 0) j["setup"] = inst.setup;
  return j;
}

AbstractInstance instance_from_json(const json& j) {
  try {
    AbstractInstance inst;
    std::map<std::string, int> index;
    for (const json& tj : j.at("tasks")) {
      const json& id = tj.at("id");
      if (!id.is_string() && !id.is_number_integer()) throw InstanceError("task ids must be strings or integers");
      if (!index.emplace(id_text(id), inst.n()).second) throw InstanceError("duplicate task id " + id_text(id));
      inst.ids.push_back(id);
      inst.t.push_back(tj.at("t").get<Ticks>());
    }
    auto lookup = [&](const json& id) {
      auto it = index.find(id_text(id));
      if (it == index.end()) throw InstanceError("edge references unknown task " + id_text(id));
      return it->second;
    };
    if (j.contains("edges"))
      for (const json& ej : j.at("edges"))
        inst.edges.push_back({lookup(ej.at("u")), lookup(ej.at("v")), ej.value("d", Ticks{0})});
    inst.m = j.at("agents").get<int>();
    inst.setup = j.value("setup", Ticks{0});
    check_instance(inst);
    return inst;
  } catch (const json::exception& e) {
    throw InstanceError(std::string("malformed instance: ") + e.what());
  }
}

json to_json(const Schedule& s, const AbstractInstance& inst) {
  json assignment = json::object(), start = json::object();
  for (std::size_t i = 0; i < inst.t.size() && i < s.agent.size(); ++i) {
    assignment[id_text(inst.ids[i])] = s.agent[i];
    start[id_text(inst.ids[i])] = s.start[i];
  }
  return {{"assignment", assignment}, {"start", start}, {"makespan", s.makespan}};
}

Schedule schedule_from_json(const json& j, const AbstractInstance& inst) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < inst.ids.size(); ++i) index[id_text(inst.ids[i])] = i;
  Schedule s;
  s.agent.assign(inst.t.size(), -1);
  s.start.assign(inst.t.size(), -1);
  try {
    auto fill = [&](const char* key, auto& out) {
      for (const auto& [id, value] : j.at(key).items()) {
        auto it = index.find(id);
        if (it == index.end()) throw InstanceError("schedule references unknown task " + id);
        out[it->second] = value.template get<typename std::decay_t<decltype(out)>::value_type>();
      }
    };
    fill("assignment", s.agent);
    fill("start", s.start);
    s.makespan = j.at("makespan").get<Ticks>();
  } catch (const json::exception& e) {
    throw InstanceError(std::string("malformed schedule: ") + e.what());
  }
  return s;
}

}  // namespace paracook::sched
