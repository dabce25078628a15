#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "paracook/sched/instance.hpp"

namespace paracook::sched {

struct Validation {
  bool valid = true;
  std::string reason;  // precedence | agent-overlap | bad-agent | negative-start | makespan-mismatch | incomplete
  std::string detail;

  explicit operator bool() const { return valid; }
};

Validation validate(const AbstractInstance& inst, const Schedule& s);

struct SolveResult {
  Schedule schedule;
  Ticks makespan = 0;
  bool optimal = false;  // false only when the budget ran out first
  std::uint64_t nodes = 0;
};

/// Exact branch-and-bound. `budget_seconds` (if set) bounds wall time; when it expires the best
/// schedule found so far is returned with optimal = false.
SolveResult optimal_makespan(const AbstractInstance& inst, std::optional<double> budget_seconds = std::nullopt);

/// Greedy list schedule (longest tail first, earliest start); the solver's initial incumbent.
Schedule list_schedule(const AbstractInstance& inst);

/// Earliest start times for fixed agent sequences; nullopt when the sequences contradict the edges.
std::optional<Schedule> schedule_from_sequences(const AbstractInstance& inst,
                                                const std::vector<std::vector<int>>& sequences);

struct PlanScore {
  bool valid = false;
  std::optional<double> noct;  // makespan / optimum for valid plans
  double poct = 0.0;           // makespan, or 1.2 x optimum for invalid plans
};

PlanScore score_plan(const AbstractInstance& inst, const Schedule& s, Ticks optimum);

}  // namespace paracook::sched
