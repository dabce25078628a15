#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "paracook/sim/action.hpp"
#include "paracook/sim/run_record.hpp"
#include "paracook/world/bundle.hpp"

namespace paracook::sim {

using world::AgentIndex;
using world::Item;
using world::StationId;

struct AgentState {
  std::string id;
  Coord pos;
  std::optional<Item> held;
  Ticks busy_until = 0;
  int distance_traveled = 0;
  Ticks work_time = 0;
  bool finished = false;
  std::optional<Action> current;  // action in progress
};

/// Full kitchen snapshot.
struct WorldState {
  Ticks clock = 0;
  std::vector<world::Station> stations;
  std::vector<AgentState> agents;
  world::OrderQueue orders;
  std::vector<ServedDish> served;
};

enum class RunStatus { Running, Succeeded, Failed };

/// Deterministic discrete-event kitchen. One instance is one session; it is not thread-safe.
///
/// Rules are applied when an action starts; the acting agent is then busy for the action's
/// duration. Completions, finished cooking and returning dirty plates are queued events ordered
/// by (time, class, actor, sequence), which makes every replay identical.
class Simulation {
 public:
  explicit Simulation(std::shared_ptr<const world::TaskBundle> bundle);

  const world::TaskBundle& bundle() const { return *bundle_; }
  const WorldState& state() const { return state_; }
  Ticks clock() const { return state_.clock; }
  RunStatus status() const { return status_; }
  const std::optional<std::string>& failure_reason() const { return failure_; }
  const std::vector<Event>& events() const { return events_; }

  bool idle(AgentIndex a) const;
  bool finished(AgentIndex a) const { return state_.agents.at(a).finished; }
  std::size_t agent_count() const { return state_.agents.size(); }

  /// True once every ordered dish has been served (the serving Interact completed).
  bool orders_complete() const;

  /// Starts `action` for an idle agent at the current clock. Illegal actions yield a Rejected
  /// event and leave the world untouched. Zero-duration actions complete immediately.
  Event start(AgentIndex agent, const Action& action);

  /// Dry run of `start`: the outcome it would have now, without changing anything.
  Event check(AgentIndex agent, const Action& action) const;

  std::optional<Ticks> next_event_time() const;

  /// Processes every queued event with time <= t and moves the clock to t.
  void advance_to(Ticks t);

  /// Marks the run failed; the first reason wins.
  void fail(std::string reason);
  void succeed();

  /// Cook progress of the ingredient inside the stove's cookware, as of the current clock.
  std::optional<Ticks> cook_progress(StationId stove) const;
  Ticks cook_time(world::ItemKind cookware) const;

  /// Totals ingredients handed out by dispensers so far.
  int dispensed() const { return dispensed_; }
  /// Dirty plates scheduled to reappear.
  int plates_in_transit() const;

  RunRecord record(std::string controller = "model") const;

 private:
  struct WithoutLog {};
  // Copies everything but the event log; used for cheap dry runs.
  Simulation(const Simulation& other, WithoutLog);

  enum class PendingKind { CookDone, CookBurn, PlateReturn, ActionDone };

  struct Pending {
    Ticks at = 0;
    int klass = 0;
    std::size_t actor = 0;
    std::uint64_t seq = 0;
    PendingKind kind = PendingKind::ActionDone;
    std::uint64_t generation = 0;

    auto key() const { return std::tie(at, klass, actor, seq); }
    friend bool operator<(const Pending& a, const Pending& b) { return a.key() < b.key(); }
  };

  struct Rejection {
    std::string reason;
    std::string detail;
  };

  struct ActiveWork {
    std::optional<StationId> station;  // Process target
    bool wash_in_hand = false;
    std::size_t item_index = 0;        // item under process on the station
    bool serving = false;
    std::string dish;
    StationId window = 0;
    int move_tiles = 0;
  };

  std::optional<Rejection> start_move(AgentIndex a, const MoveTo& m, Ticks& duration);
  std::optional<Rejection> start_interact(AgentIndex a, const Interact& i, Ticks& duration);
  std::optional<Rejection> start_process(AgentIndex a, const Process& p, Ticks& duration);
  std::optional<Rejection> resolve_station(AgentIndex a, const std::string& name, StationId& out) const;

  void schedule(Pending p);
  void complete_action(AgentIndex a);
  void resume_cooking(StationId stove);
  StationId plate_return_for(StationId window) const;

  std::shared_ptr<const world::TaskBundle> bundle_;
  WorldState state_;
  std::vector<ActiveWork> work_;
  std::vector<Ticks> cook_since_;
  std::vector<std::uint64_t> cook_generation_;
  std::set<Pending> queue_;
  std::uint64_t seq_ = 0;
  std::vector<Event> events_;
  RunStatus status_ = RunStatus::Running;
  std::optional<std::string> failure_;
  Ticks oct_ = 0;
  int dispensed_ = 0;
};

/// Batch execution: every agent consumes its list in order; any rejection fails the run.
RunRecord execute(const world::TaskBundle& bundle, const Plan& plan);
RunRecord execute(std::shared_ptr<const world::TaskBundle> bundle, const Plan& plan);

/// Immediately legal Interact/Process targets plus a MoveTo reachability summary.
struct LegalActions {
  std::vector<Action> actions;  // Interact, Process, Wait, Finish
  std::vector<Coord> reachable; // every floor cell a MoveTo would accept
};

/// Throws std::out_of_range for an unknown agent.
LegalActions legal_actions(const Simulation& sim, AgentIndex agent);

json to_json(const WorldState& state, const Simulation& sim);

}  // namespace paracook::sim
