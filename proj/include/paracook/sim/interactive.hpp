#pragma once

#include <memory>
#include <vector>

#include "paracook/sim/simulation.hpp"

namespace paracook::sim {

enum class Controller { Human, Scripted };

/// Drives a Simulation one submitted action at a time. The clock moves only between decision
/// points (some human-controlled agent idle), never with wall time. Rejections are not fatal here.
class InteractiveRun {
 public:
  /// `controllers` defaults to all-human; scripted agents consume `scripts[agent]` on their own.
  explicit InteractiveRun(std::shared_ptr<const world::TaskBundle> bundle, std::vector<Controller> controllers = {},
                          std::vector<std::vector<Action>> scripts = {});

  const Simulation& sim() const { return sim_; }
  const WorldState& state() const { return sim_.state(); }
  Controller controller(AgentIndex a) const { return controllers_.at(a); }

  /// Submits one action for an idle agent and advances to the next decision point.
  /// A Rejected event leaves both state and clock unchanged.
  Event step(AgentIndex agent, const Action& action);

  bool over() const { return sim_.status() != RunStatus::Running; }
  bool awaiting_input() const;
  void abandon();
  RunRecord record(std::string controller) const { return sim_.record(std::move(controller)); }

 private:
  void settle();

  Simulation sim_;
  std::vector<Controller> controllers_;
  std::vector<std::vector<Action>> scripts_;
  std::vector<std::size_t> cursor_;
};

}  // namespace paracook::sim
