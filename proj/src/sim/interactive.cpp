#include "paracook/sim/interactive.hpp"

#include <stdexcept>

namespace paracook::sim {

InteractiveRun::InteractiveRun(std::shared_ptr<const world::TaskBundle> bundle, std::vector<Controller> controllers,
                               std::vector<std::vector<Action>> scripts)
    : sim_(std::move(bundle)), controllers_(std::move(controllers)), scripts_(std::move(scripts)) {
  const std::size_t n = sim_.agent_count();
  if (controllers_.empty()) controllers_.assign(n, Controller::Human);
  if (controllers_.size() != n) throw std::invalid_argument("one controller per agent is required");
  scripts_.resize(n);
  cursor_.assign(n, 0);
  settle();
}

bool InteractiveRun::awaiting_input() const {
  if (over()) return false;
  for (AgentIndex a = 0; a < sim_.agent_count(); ++a)
    if (controllers_[a] == Controller::Human && !sim_.finished(a) && sim_.idle(a)) return true;
  return false;
}

Event InteractiveRun::step(AgentIndex agent, const Action& action) {
  if (agent >= sim_.agent_count()) throw std::out_of_range("unknown agent index");
  if (controllers_[agent] != Controller::Human) {
    // Recorded through a dry run so the log and state stay untouched.
    Event ev = sim_.check(agent, action);
    ev.outcome = Outcome::Rejected;
    ev.reason = "agent-scripted";
    ev.detail = world::agent_name(agent) + " is controlled by a script";
    return ev;
  }
  Event ev = sim_.start(agent, action);
  if (ev.outcome != Outcome::Rejected) settle();
  return ev;
}

void InteractiveRun::abandon() { sim_.fail("abandoned"); }

void InteractiveRun::settle() {
  while (sim_.status() == RunStatus::Running) {
    if (sim_.orders_complete()) {
      sim_.succeed();
      return;
    }
    for (AgentIndex a = 0; a < sim_.agent_count(); ++a) {
      if (controllers_[a] != Controller::Scripted) continue;
      while (sim_.idle(a) && !sim_.finished(a) && cursor_[a] < scripts_[a].size())
        sim_.start(a, scripts_[a][cursor_[a]++]);
    }
    if (awaiting_input()) return;
    const auto next = sim_.next_event_time();
    if (!next) {
      bool anyone_left = false;
      for (AgentIndex a = 0; a < sim_.agent_count(); ++a)
        anyone_left = anyone_left || (controllers_[a] == Controller::Human && !sim_.finished(a));
      if (!anyone_left) sim_.fail("plan-exhausted");
      return;
    }
    const Ticks t_max = sim_.bundle().t_max;
    if (t_max > 0 && *next > t_max) {
      sim_.advance_to(t_max);
      sim_.fail("timeout");
      return;
    }
    sim_.advance_to(*next);
  }
}

}  // namespace paracook::sim
