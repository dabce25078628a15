#include "paracook/taskgen/greedy_solver.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace paracook::taskgen {

using sim::Action;
using world::AgentIndex;
using world::ItemKind;
using world::StationId;
using world::StationKind;

namespace {

enum class Rule { Dispenser, FreeBoard, FreeStove, Assembly, Window, Bound };

struct Step {
  enum class Kind { Visit, AcquirePlate, AwaitCooked, Release } kind = Kind::Visit;
  Rule rule = Rule::Bound;
  bool process = false;
  std::string ingredient;
  ItemKind cookware = ItemKind::Pot;
  int slot = -1;
};

constexpr int kBoardSlot = 0;
constexpr int kStoveSlot = 1;
constexpr int kSinkSlot = 2;

Step visit(Rule rule, int slot = -1, bool process = false) {
  Step s;
  s.rule = rule;
  s.slot = slot;
  s.process = process;
  return s;
}

Step marker(Step::Kind kind, int slot = -1) {
  Step s;
  s.kind = kind;
  s.slot = slot;
  return s;
}

void append_chain(std::vector<Step>& out, const world::IngredientChain& chain) {
  Step fetch = visit(Rule::Dispenser);
  fetch.ingredient = chain.ingredient;
  out.push_back(fetch);
  if (chain.chop) {
    out.push_back(visit(Rule::FreeBoard, kBoardSlot));
    out.push_back(visit(Rule::Bound, kBoardSlot, true));
    out.push_back(visit(Rule::Bound, kBoardSlot));
    out.push_back(marker(Step::Kind::Release, kBoardSlot));
  }
  if (chain.cook == world::CookMethod::None) {
    out.push_back(visit(Rule::Assembly));
    return;
  }
  Step stove = visit(Rule::FreeStove, kStoveSlot);
  stove.cookware = chain.cook == world::CookMethod::Pot ? ItemKind::Pot : ItemKind::Pan;
  out.push_back(stove);                                  // food into the cookware
  out.push_back(marker(Step::Kind::AwaitCooked, kStoveSlot));
  out.push_back(visit(Rule::Bound, kStoveSlot));         // lift the cookware
  out.push_back(visit(Rule::Assembly));                  // pour onto the plate
  out.push_back(visit(Rule::Bound, kStoveSlot));         // put it back
  out.push_back(marker(Step::Kind::Release, kStoveSlot));
}

std::vector<Step> dish_script(const world::Recipe& recipe) {
  std::vector<Step> out{marker(Step::Kind::AcquirePlate)};
  for (const auto& chain : recipe.chains) append_chain(out, chain);
  out.push_back(visit(Rule::Assembly));  // pick the finished plate up
  out.push_back(visit(Rule::Window));
  return out;
}

class Solver {
 public:
  Solver(std::shared_ptr<const world::TaskBundle> bundle, SolverMode mode, Ticks horizon)
      : bundle_(*bundle), sim_(bundle), horizon_(horizon) {
    const std::size_t n = sim_.agent_count();
    scripts_.resize(n);
    cursor_.assign(n, 0);
    slots_.resize(n);
    assembly_.resize(n);
    plan_.per_agent.resize(n);

    std::vector<StationId> free_counters;
    const auto& stations = bundle_.map.stations();
    for (StationId s = 0; s < stations.size(); ++s)
      if (stations[s].kind == StationKind::Counter && stations[s].contents.empty()) free_counters.push_back(s);
    std::size_t workers = mode == SolverMode::SingleAgent ? 1 : std::min(n, free_counters.size());
    if (workers == 0) throw std::invalid_argument("greedy solver needs at least one empty counter");
    for (std::size_t w = 0; w < workers; ++w) assembly_[w] = free_counters[w];

    const auto& dishes = bundle_.orders.dishes;
    for (std::size_t d = 0; d < dishes.size(); ++d) {
      const world::Recipe* r = bundle_.find_recipe(dishes[d]);
      if (!r) throw std::invalid_argument("order references unknown recipe '" + dishes[d] + "'");
      auto steps = dish_script(*r);
      auto& script = scripts_[d % workers];
      script.insert(script.end(), steps.begin(), steps.end());
    }
  }

  SolverResult run() {
    while (sim_.status() == sim::RunStatus::Running) {
      if (sim_.orders_complete()) {
        sim_.succeed();
        break;
      }
      for (AgentIndex a = 0; a < sim_.agent_count() && sim_.status() == sim::RunStatus::Running; ++a) {
        while (sim_.idle(a) && !sim_.finished(a)) {
          bool advance = false;
          Action act = decide(a, advance);
          sim::Event ev = sim_.start(a, act);
          if (ev.outcome == sim::Outcome::Rejected) {
            sim_.fail(ev.reason);
            break;
          }
          if (advance) ++cursor_[a];
          record(a, act);
        }
      }
      if (sim_.status() != sim::RunStatus::Running) break;
      const auto next = sim_.next_event_time();
      if (!next) {
        sim_.fail("plan-exhausted");
        break;
      }
      if (*next > horizon_) {
        sim_.fail("timeout");
        break;
      }
      sim_.advance_to(*next);
    }
    return {plan_, sim_.record("scripted")};
  }

 private:
  const world::Station& station(StationId s) const { return sim_.state().stations[s]; }
  const sim::AgentState& agent(AgentIndex a) const { return sim_.state().agents[a]; }

  void record(AgentIndex a, const Action& act) {
    auto& list = plan_.per_agent[a];
    if (auto* w = std::get_if<sim::Wait>(&act); w && !list.empty())
      if (auto* prev = std::get_if<sim::Wait>(&list.back())) {
        prev->duration += w->duration;
        return;
      }
    list.push_back(act);
  }

  /// Walking cost to stand next to `s`, or -1 when no adjacent floor is reachable.
  int approach_cost(const std::vector<int>& dist, StationId s, Coord* best_cell = nullptr) const {
    const auto& map = bundle_.map;
    int best = -1;
    for (Coord off : kNeighbourOffsets) {
      Coord c = station(s).pos + off;
      if (!map.in_bounds(c) || !world::passable(map, c)) continue;
      int d = dist[static_cast<std::size_t>(c.y * map.width() + c.x)];
      if (d >= 0 && (best < 0 || d < best)) {
        best = d;
        if (best_cell) *best_cell = c;
      }
    }
    return best;
  }

  template <class Pred>
  std::optional<StationId> nearest(AgentIndex a, Pred pred) const {
    const auto dist = world::floor_distances(bundle_.map, agent(a).pos);
    std::optional<StationId> best;
    int best_cost = -1;
    for (StationId s = 0; s < sim_.state().stations.size(); ++s) {
      if (!pred(station(s), s)) continue;
      int c = approach_cost(dist, s);
      if (c >= 0 && (best_cost < 0 || c < best_cost)) {
        best = s;
        best_cost = c;
      }
    }
    return best;
  }

  /// Walks next to the station, then issues `act` once the engine would accept it.
  Action approach(AgentIndex a, StationId s, Action act, bool& advance) {
    const Coord pos = agent(a).pos;
    if (manhattan(pos, station(s).pos) != 1) {
      Coord cell = pos;
      const auto dist = world::floor_distances(bundle_.map, pos);
      if (approach_cost(dist, s, &cell) < 0) throw std::logic_error("station unreachable");
      return sim::MoveTo{cell};
    }
    if (sim_.check(a, act).outcome == sim::Outcome::Rejected) return sim::Wait{1};
    advance = true;
    return act;
  }

  Action use(AgentIndex a, StationId s, bool process, bool& advance) {
    const std::string& name = station(s).name;
    return process ? approach(a, s, sim::Process{name}, advance) : approach(a, s, sim::Interact{name}, advance);
  }

  std::optional<StationId> reserve(AgentIndex a, int slot, const std::function<bool(const world::Station&, StationId)>& ok) {
    if (auto it = slots_[a].find(slot); it != slots_[a].end()) return it->second;
    std::optional<StationId> best;
    const auto dist = world::floor_distances(bundle_.map, agent(a).pos);
    int best_cost = -1;
    for (StationId s = 0; s < sim_.state().stations.size(); ++s) {
      if (reserved_.count(s) || !ok(station(s), s)) continue;
      int c = approach_cost(dist, s);
      if (c >= 0 && (best_cost < 0 || c < best_cost)) {
        best = s;
        best_cost = c;
      }
    }
    if (best) {
      slots_[a][slot] = *best;
      reserved_[*best] = a;
    }
    return best;
  }

  void release(AgentIndex a, int slot) {
    auto it = slots_[a].find(slot);
    if (it == slots_[a].end()) return;
    reserved_.erase(it->second);
    slots_[a].erase(it);
  }

  bool is_assembly(StationId s) const {
    for (const auto& as : assembly_)
      if (as && *as == s) return true;
    return false;
  }

  Action acquire_plate(AgentIndex a, bool& advance) {
    const auto& held = agent(a).held;
    if (held && held->is_clean_plate()) {
      bool placed = false;
      Action act = use(a, *assembly_[a], false, placed);
      if (placed) {
        release(a, kSinkSlot);
        advance = true;
      }
      return act;
    }
    if (held && held->is_plate()) {
      auto sink = reserve(a, kSinkSlot, [](const world::Station& st, StationId) {
        return st.kind == StationKind::Sink && !st.busy_by;
      });
      if (!sink) return sim::Wait{1};
      bool unused = false;
      return use(a, *sink, true, unused);
    }
    if (held) throw std::logic_error("agent needs empty hands to fetch a plate");
    auto source = nearest(a, [&](const world::Station& st, StationId s) {
      const world::Item* top = st.top();
      if (!top) return false;
      if (st.kind == StationKind::Counter)
        return top->is_clean_plate() && top->empty() && !is_assembly(s);
      return st.kind == StationKind::DirtyPlateReturn && top->is_plate();
    });
    if (!source) return sim::Wait{1};
    bool unused = false;
    return use(a, *source, false, unused);
  }

  Action decide(AgentIndex a, bool& advance) {
    auto& script = scripts_[a];
    while (cursor_[a] < script.size()) {
      const Step& step = script[cursor_[a]];
      switch (step.kind) {
        case Step::Kind::Release:
          release(a, step.slot);
          ++cursor_[a];
          continue;
        case Step::Kind::AwaitCooked: {
          const world::Item* cw = station(slots_[a].at(step.slot)).top();
          if (cw && cw->contents.size() == 1 && cw->contents.front().food == world::FoodState::Cooked) {
            ++cursor_[a];
            continue;
          }
          return sim::Wait{1};
        }
        case Step::Kind::AcquirePlate:
          return acquire_plate(a, advance);
        case Step::Kind::Visit:
          break;
      }
      std::optional<StationId> target;
      switch (step.rule) {
        case Rule::Bound:
          target = slots_[a].at(step.slot);
          break;
        case Rule::Assembly:
          target = assembly_[a];
          break;
        case Rule::Dispenser:
          target = nearest(a, [&](const world::Station& st, StationId) {
            return st.kind == StationKind::Dispenser && st.ingredient == step.ingredient;
          });
          break;
        case Rule::Window:
          target = nearest(a, [](const world::Station& st, StationId) { return st.kind == StationKind::ServingWindow; });
          break;
        case Rule::FreeBoard:
          target = reserve(a, step.slot, [](const world::Station& st, StationId) {
            return st.kind == StationKind::CuttingBoard && st.contents.empty() && !st.busy_by;
          });
          break;
        case Rule::FreeStove:
          target = reserve(a, step.slot, [&](const world::Station& st, StationId) {
            const world::Item* top = st.top();
            return st.kind == StationKind::Stove && top && top->kind == step.cookware && top->empty();
          });
          break;
      }
      if (!target) return sim::Wait{1};
      return use(a, *target, step.process, advance);
    }
    return sim::Finish{};
  }

  const world::TaskBundle& bundle_;
  sim::Simulation sim_;
  Ticks horizon_;
  std::vector<std::vector<Step>> scripts_;
  std::vector<std::size_t> cursor_;
  std::vector<std::map<int, StationId>> slots_;
  std::vector<std::optional<StationId>> assembly_;
  std::map<StationId, AgentIndex> reserved_;
  sim::Plan plan_;
};

}  // namespace

SolverResult solve_greedy(std::shared_ptr<const world::TaskBundle> bundle, SolverMode mode, Ticks horizon) {
  if (!bundle) throw std::invalid_argument("null bundle");
  Solver solver(bundle, mode, horizon);
  return solver.run();
}

}  // namespace paracook::taskgen
