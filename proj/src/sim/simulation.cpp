#include "paracook/sim/simulation.hpp"

#include <algorithm>
#include <stdexcept>

#include "paracook/world/json_io.hpp"

namespace paracook::sim {

using world::FoodState;
using world::ItemKind;
using world::StationKind;

namespace {

constexpr int kClassEnvironment = 0;
constexpr int kClassPlates = 1;
constexpr int kClassAgents = 2;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool holds_cookable(const Item& cookware) {
  if (!cookware.is_cookware() || cookware.contents.size() != 1) return false;
  const Item& food = cookware.contents.front();
  if (food.food == FoodState::Cooking) return true;
  if (cookware.kind == ItemKind::Pot) return food.food == FoodState::Raw;
  return food.food == FoodState::Chopped;
}

bool holds_cooked(const Item& cookware) {
  return cookware.is_cookware() && cookware.contents.size() == 1 &&
         cookware.contents.front().food == FoodState::Cooked;
}

bool empty_plate_of_same_kind(const Item& a, const Item& b) {
  return a.is_plate() && b.is_plate() && a.empty() && b.empty() && a.dirty == b.dirty;
}

}  // namespace

Simulation::Simulation(std::shared_ptr<const world::TaskBundle> bundle) : bundle_(std::move(bundle)) {
  if (!bundle_) throw std::invalid_argument("simulation needs a bundle");
  const world::TaskBundle& b = *bundle_;
  b.constants.validate();
  if (b.n_agents < 1) throw std::invalid_argument("bundle needs at least one agent");
  if (static_cast<std::size_t>(b.n_agents) > b.map.agent_spawns().size())
    throw std::invalid_argument("bundle has more agents than spawn points");
  for (const std::string& dish : b.orders.dishes)
    if (!b.find_recipe(dish)) throw std::invalid_argument("order references unknown recipe '" + dish + "'");

  state_.stations = b.map.stations();
  state_.orders = b.orders;
  state_.orders.next_index = 0;
  for (int i = 0; i < b.n_agents; ++i) {
    AgentState a;
    a.id = world::agent_name(static_cast<AgentIndex>(i));
    a.pos = b.map.agent_spawns()[static_cast<std::size_t>(i)];
    state_.agents.push_back(std::move(a));
  }
  work_.resize(state_.agents.size());
  cook_since_.assign(state_.stations.size(), 0);
  cook_generation_.assign(state_.stations.size(), 0);
  for (StationId s = 0; s < state_.stations.size(); ++s)
    if (state_.stations[s].kind == StationKind::Stove) resume_cooking(s);
}

bool Simulation::idle(AgentIndex a) const {
  const AgentState& ag = state_.agents.at(a);
  return !ag.current && ag.busy_until <= state_.clock;
}

bool Simulation::orders_complete() const { return state_.served.size() >= state_.orders.dishes.size(); }

Ticks Simulation::cook_time(ItemKind cookware) const {
  return cookware == ItemKind::Pot ? bundle_->constants.pot_cook : bundle_->constants.pan_cook;
}

std::optional<Ticks> Simulation::cook_progress(StationId stove) const {
  const world::Station& st = state_.stations.at(stove);
  if (st.kind != StationKind::Stove || !st.top() || st.top()->contents.size() != 1) return std::nullopt;
  const Item& food = st.top()->contents.front();
  if (food.food == FoodState::Cooking) return food.progress + (state_.clock - cook_since_[stove]);
  if (food.food == FoodState::Cooked) return food.progress;
  return std::nullopt;
}

int Simulation::plates_in_transit() const {
  return static_cast<int>(std::count_if(queue_.begin(), queue_.end(),
                                        [](const Pending& p) { return p.kind == PendingKind::PlateReturn; }));
}

void Simulation::schedule(Pending p) {
  p.seq = seq_++;
  queue_.insert(p);
}

void Simulation::resume_cooking(StationId stove) {
  world::Station& st = state_.stations[stove];
  if (!st.top() || !st.top()->is_cookware() || st.top()->contents.size() != 1) return;
  Item& cookware = *st.top();
  Item& food = cookware.contents.front();
  const Ticks total = cook_time(cookware.kind);
  ++cook_generation_[stove];
  cook_since_[stove] = state_.clock;
  if (holds_cookable(cookware)) {
    food.food = FoodState::Cooking;
    schedule({state_.clock + (total - food.progress), kClassEnvironment, stove, 0, PendingKind::CookDone,
              cook_generation_[stove]});
  } else if (bundle_->rules.overcooking && food.food == FoodState::Cooked) {
    schedule({state_.clock + std::max<Ticks>(0, 2 * total - food.progress), kClassEnvironment, stove, 0,
              PendingKind::CookBurn, cook_generation_[stove]});
  }
}

StationId Simulation::plate_return_for(StationId window) const {
  const Coord from = state_.stations[window].pos;
  std::optional<StationId> best;
  for (StationId s = 0; s < state_.stations.size(); ++s) {
    if (state_.stations[s].kind != StationKind::DirtyPlateReturn) continue;
    if (!best || manhattan(from, state_.stations[s].pos) < manhattan(from, state_.stations[*best].pos))
      best = s;
  }
  // Without a return station the plate goes back to the window itself.
  return best.value_or(window);
}

std::optional<Simulation::Rejection> Simulation::resolve_station(AgentIndex a, const std::string& name,
                                                                 StationId& out) const {
  auto id = bundle_->map.find_station(name);
  if (!id) return Rejection{"unknown-station", "no station named '" + name + "'"};
  const world::Station& st = state_.stations[*id];
  if (manhattan(state_.agents[a].pos, st.pos) != 1)
    return Rejection{"not-adjacent", "'" + name + "' is not next to the agent"};
  if (st.busy_by) return Rejection{"station-busy", "'" + name + "' is being processed by " + world::agent_name(*st.busy_by)};
  out = *id;
  return std::nullopt;
}

std::optional<Simulation::Rejection> Simulation::start_move(AgentIndex a, const MoveTo& m, Ticks& duration) {
  const world::GridMap& map = bundle_->map;
  if (!map.in_bounds(m.target) || !world::passable(map, m.target))
    return Rejection{"invalid-target", "MoveTo target is not a floor tile"};
  auto path = world::shortest_path(map, state_.agents[a].pos, m.target);
  if (!path) return Rejection{"unreachable", "no floor path to the target"};
  work_[a].move_tiles = world::path_tiles(*path);
  duration = work_[a].move_tiles * bundle_->constants.move_per_tile;
  return std::nullopt;
}

std::optional<Simulation::Rejection> Simulation::start_interact(AgentIndex a, const Interact& i, Ticks& duration) {
  StationId sid = 0;
  if (auto r = resolve_station(a, i.target, sid)) return r;
  world::Station& st = state_.stations[sid];
  AgentState& ag = state_.agents[a];
  const bool stove = st.kind == StationKind::Stove;

  std::optional<Item> hand = ag.held;
  std::vector<Item> stack = st.contents;
  if (stove && !stack.empty() && stack.back().contents.size() == 1) {
    Item& food = stack.back().contents.front();
    const bool tracking =
        food.food == FoodState::Cooking || (bundle_->rules.overcooking && food.food == FoodState::Cooked);
    if (tracking) food.progress += state_.clock - cook_since_[sid];
  }
  int dispensed = 0;
  bool serving = false;
  std::string dish;

  auto reject = [&](std::string code, std::string detail) { return Rejection{std::move(code), std::move(detail)}; };

  switch (st.kind) {
    case StationKind::Dispenser: {
      Item ingredient = Item::raw(st.ingredient);
      if (!hand) hand = ingredient;
      else if (hand->is_clean_plate()) hand->contents.push_back(ingredient);
      else if (world::cookware_accepts(*hand, ingredient)) hand->contents.push_back(ingredient);
      else return reject("hands-full", "agent already holds " + world::describe(*hand));
      dispensed = 1;
      break;
    }
    case StationKind::ServingWindow: {
      if (!hand || !hand->is_clean_plate() || hand->empty())
        return reject("cannot-serve", "only a plated dish can be served");
      const world::OrderQueue& orders = state_.orders;
      if (orders.complete()) return reject("no-pending-order", "every ordered dish is already served");
      const world::Recipe* next = bundle_->find_recipe(orders.dishes[orders.next_index]);
      if (!world::plate_matches(*hand, *next)) {
        for (std::size_t k = orders.next_index + 1; k < orders.dishes.size(); ++k)
          if (world::plate_matches(*hand, *bundle_->find_recipe(orders.dishes[k])))
            return reject("out-of-order", "dish '" + orders.dishes[k] + "' must wait for '" + next->id + "'");
        return reject("wrong-dish", world::describe(*hand) + " does not match '" + next->id + "'");
      }
      hand.reset();
      serving = true;
      dish = next->id;
      break;
    }
    case StationKind::DirtyPlateReturn: {
      if (!hand) {
        if (stack.empty()) return reject("nothing-to-pick-up", "'" + st.name + "' is empty");
        hand = stack.back();
        stack.pop_back();
      } else if (hand->is_plate() && hand->dirty) {
        stack.push_back(*hand);
        hand.reset();
      } else {
        return reject("cannot-place", "'" + st.name + "' only takes dirty plates");
      }
      break;
    }
    case StationKind::Stove: {
      if (stack.empty()) {
        if (!hand) return reject("nothing-to-pick-up", "'" + st.name + "' is empty");
        if (!hand->is_cookware()) return reject("stove-requires-cookware", "stoves only hold pots and pans");
        stack.push_back(*hand);
        hand.reset();
        break;
      }
      Item& cookware = stack.back();
      if (!hand) {
        hand = cookware;
        stack.pop_back();
      } else if (hand->is_ingredient() && world::cookware_accepts(cookware, *hand)) {
        cookware.contents.push_back(*hand);
        hand.reset();
      } else if (hand->is_clean_plate() && !cookware.empty()) {
        if (!holds_cooked(cookware)) return reject("not-cooked", "the food in '" + st.name + "' is not cooked yet");
        hand->contents.push_back(cookware.contents.front());
        hand->contents.back().progress = 0;
        cookware.contents.clear();
      } else {
        return reject("cannot-combine", "cannot use " + world::describe(*hand) + " with " + world::describe(cookware));
      }
      break;
    }
    case StationKind::Counter:
    case StationKind::CuttingBoard:
    case StationKind::Sink: {
      if (st.kind == StationKind::Sink && hand && !hand->is_plate())
        return reject("cannot-place", "sinks only take plates");
      if (stack.empty()) {
        if (!hand) return reject("nothing-to-pick-up", "'" + st.name + "' is empty");
        stack.push_back(*hand);
        hand.reset();
        break;
      }
      if (!hand) {
        hand = stack.back();
        stack.pop_back();
        break;
      }
      Item& top = stack.back();
      if (empty_plate_of_same_kind(*hand, top)) {
        stack.push_back(*hand);
        hand.reset();
      } else if (hand->is_ingredient() && top.is_clean_plate()) {
        top.contents.push_back(*hand);
        hand.reset();
      } else if (hand->is_clean_plate() && top.is_ingredient()) {
        hand->contents.push_back(top);
        stack.pop_back();
      } else if (hand->is_clean_plate() && top.is_cookware() && !top.empty()) {
        if (!holds_cooked(top)) return reject("not-cooked", "the food in the " + world::describe(top) + " is not cooked");
        hand->contents.push_back(top.contents.front());
        hand->contents.back().progress = 0;
        top.contents.clear();
      } else if (hand->is_cookware() && !hand->empty() && top.is_clean_plate()) {
        if (!holds_cooked(*hand)) return reject("not-cooked", "the food in the " + world::describe(*hand) + " is not cooked");
        top.contents.push_back(hand->contents.front());
        top.contents.back().progress = 0;
        hand->contents.clear();
      } else if (hand->is_ingredient() && world::cookware_accepts(top, *hand)) {
        top.contents.push_back(*hand);
        hand.reset();
      } else if (hand->is_cookware() && top.is_ingredient() && world::cookware_accepts(*hand, top)) {
        hand->contents.push_back(top);
        stack.pop_back();
      } else {
        return reject("station-occupied", "'" + st.name + "' already holds " + world::describe(top));
      }
      break;
    }
  }

  if (stove) ++cook_generation_[sid];
  st.contents = std::move(stack);
  ag.held = std::move(hand);
  if (stove) resume_cooking(sid);
  dispensed_ += dispensed;
  if (serving) ++state_.orders.next_index;  // the slot is claimed as soon as the plate leaves the hands
  work_[a].serving = serving;
  work_[a].dish = std::move(dish);
  work_[a].window = sid;
  duration = bundle_->constants.interact;
  return std::nullopt;
}

std::optional<Simulation::Rejection> Simulation::start_process(AgentIndex a, const Process& p, Ticks& duration) {
  StationId sid = 0;
  if (auto r = resolve_station(a, p.target, sid)) return r;
  world::Station& st = state_.stations[sid];
  const AgentState& ag = state_.agents[a];
  ActiveWork& w = work_[a];
  switch (st.kind) {
    case StationKind::CuttingBoard: {
      const Item* top = st.top();
      if (!top) return Rejection{"illegal-process", "'" + st.name + "' has nothing to chop"};
      const world::IngredientTraits* traits = top->is_ingredient() ? world::find_ingredient(top->ingredient) : nullptr;
      if (!traits || !traits->choppable || top->food != FoodState::Raw)
        return Rejection{"illegal-process", world::describe(*top) + " cannot be chopped"};
      w.item_index = st.contents.size() - 1;
      duration = bundle_->constants.cut;
      break;
    }
    case StationKind::Sink: {
      w.wash_in_hand = ag.held && ag.held->is_plate() && ag.held->dirty;
      if (!w.wash_in_hand) {
        auto it = std::find_if(st.contents.rbegin(), st.contents.rend(), [](const Item& i) { return i.is_plate() && i.dirty; });
        if (it == st.contents.rend()) return Rejection{"illegal-process", "no dirty plate to wash"};
        w.item_index = static_cast<std::size_t>(std::distance(it, st.contents.rend())) - 1;
      }
      duration = bundle_->constants.wash_plate;
      break;
    }
    case StationKind::Stove:
      return Rejection{"illegal-process", "stoves cook on their own; '" + st.name + "' cannot be processed"};
    default:
      return Rejection{"illegal-process", "'" + st.name + "' does not support Process"};
  }
  w.station = sid;
  st.busy_by = a;
  return std::nullopt;
}

Event Simulation::start(AgentIndex a, const Action& action) {
  if (a >= state_.agents.size()) throw std::out_of_range("unknown agent index");
  Event ev{state_.clock, a, action, Outcome::Started, {}, {}};
  auto rejected = [&](std::string code, std::string detail) {
    ev.outcome = Outcome::Rejected;
    ev.reason = std::move(code);
    ev.detail = std::move(detail);
    events_.push_back(ev);
    return ev;
  };
  if (status_ != RunStatus::Running) return rejected("run-over", "the run has already ended");
  AgentState& ag = state_.agents[a];
  if (ag.finished) return rejected("agent-finished", ag.id + " has already finished");
  if (!idle(a)) return rejected("agent-busy", ag.id + " is busy until " + std::to_string(ag.busy_until));

  work_[a] = ActiveWork{};
  Ticks duration = 0;
  std::optional<Rejection> rej = std::visit(
      Overloaded{
          [&](const MoveTo& m) { return start_move(a, m, duration); },
          [&](const Interact& i) { return start_interact(a, i, duration); },
          [&](const Process& p) { return start_process(a, p, duration); },
          [&](const Wait& w) -> std::optional<Rejection> {
            if (w.duration < 0) return Rejection{"invalid-duration", "Wait duration must be non-negative"};
            duration = w.duration;
            return std::nullopt;
          },
          [&](const Finish&) -> std::optional<Rejection> { return std::nullopt; },
      },
      action);
  if (rej) return rejected(std::move(rej->reason), std::move(rej->detail));

  events_.push_back(ev);
  ag.current = action;
  ag.busy_until = state_.clock + duration;
  if (std::holds_alternative<Finish>(action)) ag.finished = true;
  if (duration == 0) complete_action(a);
  else schedule({ag.busy_until, kClassAgents, a, 0, PendingKind::ActionDone, 0});
  return ev;
}

Simulation::Simulation(const Simulation& o, WithoutLog)
    : bundle_(o.bundle_),
      state_(o.state_),
      work_(o.work_),
      cook_since_(o.cook_since_),
      cook_generation_(o.cook_generation_),
      queue_(o.queue_),
      seq_(o.seq_),
      status_(o.status_),
      failure_(o.failure_),
      oct_(o.oct_),
      dispensed_(o.dispensed_) {}

Event Simulation::check(AgentIndex a, const Action& action) const {
  Simulation copy(*this, WithoutLog{});
  return copy.start(a, action);
}

void Simulation::complete_action(AgentIndex a) {
  AgentState& ag = state_.agents[a];
  ActiveWork& w = work_[a];
  const Action action = *ag.current;
  std::visit(Overloaded{
                 [&](const MoveTo& m) {
                   ag.pos = m.target;
                   ag.distance_traveled += w.move_tiles;
                   ag.work_time += w.move_tiles * bundle_->constants.move_per_tile;
                 },
                 [&](const Interact&) {
                   ag.work_time += bundle_->constants.interact;
                   if (w.serving) {
                     state_.served.push_back({w.dish, state_.clock});
                     schedule({state_.clock + bundle_->constants.dirty_plate_return, kClassPlates,
                               plate_return_for(w.window), 0, PendingKind::PlateReturn, 0});
                   }
                 },
                 [&](const Process&) {
                   world::Station& st = state_.stations[*w.station];
                   if (st.kind == StationKind::CuttingBoard) {
                     st.contents[w.item_index].food = FoodState::Chopped;
                     ag.work_time += bundle_->constants.cut;
                   } else {
                     if (w.wash_in_hand) ag.held->dirty = false;
                     else st.contents[w.item_index].dirty = false;
                     ag.work_time += bundle_->constants.wash_plate;
                   }
                   st.busy_by.reset();
                 },
                 [&](const Wait&) {},
                 [&](const Finish&) {},
             },
             action);
  ag.current.reset();
  ag.busy_until = state_.clock;
  w = ActiveWork{};
  events_.push_back({state_.clock, a, action, Outcome::Completed, {}, {}});
}

std::optional<Ticks> Simulation::next_event_time() const {
  if (queue_.empty()) return std::nullopt;
  return queue_.begin()->at;
}

void Simulation::advance_to(Ticks t) {
  while (!queue_.empty() && queue_.begin()->at <= t && status_ == RunStatus::Running) {
    const Pending p = *queue_.begin();
    queue_.erase(queue_.begin());
    state_.clock = std::max(state_.clock, p.at);
    switch (p.kind) {
      case PendingKind::ActionDone:
        complete_action(p.actor);
        break;
      case PendingKind::PlateReturn:
        state_.stations[p.actor].contents.push_back(Item::dirty_plate());
        break;
      case PendingKind::CookDone: {
        if (p.generation != cook_generation_[p.actor]) break;
        world::Station& st = state_.stations[p.actor];
        Item& cookware = *st.top();
        Item& food = cookware.contents.front();
        food.food = FoodState::Cooked;
        food.progress = cook_time(cookware.kind);
        cook_since_[p.actor] = state_.clock;
        if (bundle_->rules.overcooking)
          schedule({state_.clock + cook_time(cookware.kind), kClassEnvironment, p.actor, 0, PendingKind::CookBurn,
                    p.generation});
        break;
      }
      case PendingKind::CookBurn:
        if (p.generation == cook_generation_[p.actor]) fail("overcooked");
        break;
    }
  }
  if (status_ == RunStatus::Running) state_.clock = std::max(state_.clock, t);
}

void Simulation::fail(std::string reason) {
  if (status_ != RunStatus::Running) return;
  status_ = RunStatus::Failed;
  failure_ = std::move(reason);
}

void Simulation::succeed() {
  if (status_ != RunStatus::Running) return;
  status_ = RunStatus::Succeeded;
  oct_ = state_.served.empty() ? state_.clock : state_.served.back().clock;
}

RunRecord Simulation::record(std::string controller) const {
  RunRecord r;
  r.success = status_ == RunStatus::Succeeded;
  r.oct = r.success ? oct_ : state_.clock;
  for (const AgentState& a : state_.agents) r.per_agent.push_back({a.distance_traveled, a.work_time});
  r.served = state_.served;
  r.failure_reason = failure_;
  r.events = events_;
  std::stable_sort(r.events.begin(), r.events.end(), [](const Event& x, const Event& y) {
    return std::tie(x.clock, x.agent) < std::tie(y.clock, y.agent);
  });
  r.controller = std::move(controller);
  return r;
}

RunRecord execute(const world::TaskBundle& bundle, const Plan& plan) {
  return execute(std::make_shared<const world::TaskBundle>(bundle), plan);
}

RunRecord execute(std::shared_ptr<const world::TaskBundle> bundle, const Plan& plan) {
  Simulation sim(bundle);
  const std::size_t n = sim.agent_count();
  if (plan.per_agent.size() > n) {
    sim.fail("invalid-plan");
    return sim.record();
  }
  std::vector<std::size_t> cursor(n, 0);
  auto remaining = [&](std::size_t a) { return a < plan.per_agent.size() && cursor[a] < plan.per_agent[a].size(); };
  while (sim.status() == RunStatus::Running) {
    if (sim.orders_complete()) {
      sim.succeed();
      break;
    }
    for (std::size_t a = 0; a < n && sim.status() == RunStatus::Running; ++a) {
      while (sim.idle(a) && !sim.finished(a) && remaining(a)) {
        const Event ev = sim.start(a, plan.per_agent[a][cursor[a]++]);
        if (ev.outcome == Outcome::Rejected) {
          sim.fail(ev.reason);
          break;
        }
      }
    }
    if (sim.status() != RunStatus::Running || sim.orders_complete()) continue;
    const auto next = sim.next_event_time();
    if (!next) {
      sim.fail("plan-exhausted");
      break;
    }
    const Ticks t_max = sim.bundle().t_max;
    if (t_max > 0 && *next > t_max) {
      sim.advance_to(t_max);
      sim.fail("timeout");
      break;
    }
    sim.advance_to(*next);
  }
  return sim.record();
}

LegalActions legal_actions(const Simulation& sim, AgentIndex agent) {
  if (agent >= sim.agent_count()) throw std::out_of_range("unknown agent index");
  LegalActions out;
  if (sim.status() != RunStatus::Running || sim.finished(agent) || !sim.idle(agent)) return out;
  const AgentState& ag = sim.state().agents[agent];
  const world::GridMap& map = sim.bundle().map;
  for (StationId s : world::adjacent_stations(map, ag.pos)) {
    const std::string& name = map.stations()[s].name;
    for (Action candidate : {Action{Interact{name}}, Action{Process{name}}})
      if (sim.check(agent, candidate).outcome != Outcome::Rejected) out.actions.push_back(candidate);
  }
  out.actions.push_back(Wait{1});
  out.actions.push_back(Finish{});
  const std::vector<int> dist = world::floor_distances(map, ag.pos);
  for (int y = 0; y < map.height(); ++y)
    for (int x = 0; x < map.width(); ++x)
      if (dist[static_cast<std::size_t>(y) * map.width() + x] >= 0) out.reachable.push_back({x, y});
  return out;
}

json to_json(const WorldState& state, const Simulation& sim) {
  json agents = json::array();
  for (const AgentState& a : state.agents) {
    agents.push_back({{"id", a.id},
                      {"pos", world::to_json(a.pos)},
                      {"held", a.held ? world::to_json(*a.held) : json(nullptr)},
                      {"busy_until", a.busy_until},
                      {"distance", a.distance_traveled},
                      {"work_time", a.work_time},
                      {"finished", a.finished},
                      {"current", a.current ? to_json(*a.current) : json(nullptr)}});
  }
  json stations = json::array();
  for (StationId s = 0; s < state.stations.size(); ++s) {
    const world::Station& st = state.stations[s];
    json j = world::to_json(st);
    if (!j.contains("contents")) j["contents"] = json::array();
    if (auto progress = sim.cook_progress(s)) {
      j["cook_progress"] = *progress;
      j["cook_time"] = sim.cook_time(st.top()->kind);
    }
    j["busy_by"] = st.busy_by ? json(world::agent_name(*st.busy_by)) : json(nullptr);
    stations.push_back(std::move(j));
  }
  json served = json::array();
  for (const ServedDish& d : state.served) served.push_back({{"dish", d.dish}, {"clock", d.clock}});
  std::string status = sim.status() == RunStatus::Running ? "running" : sim.status() == RunStatus::Succeeded ? "succeeded" : "failed";
  return json{{"clock", state.clock},
              {"agents", std::move(agents)},
              {"stations", std::move(stations)},
              {"orders", {{"dishes", state.orders.dishes}, {"next_index", state.orders.next_index}}},
              {"served", std::move(served)},
              {"status", status},
              {"failure_reason", sim.failure_reason() ? json(*sim.failure_reason()) : json(nullptr)}};
}

}  // namespace paracook::sim
