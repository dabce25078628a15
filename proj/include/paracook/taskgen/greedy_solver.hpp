#pragma once

#include <memory>

#include "paracook/sim/simulation.hpp"

namespace paracook::taskgen {

enum class SolverMode {
  SingleAgent,  // agent1 cooks every dish; the others finish at once
  SplitDishes,  // dishes dealt round-robin over agents that have their own assembly counter
};

struct SolverResult {
  sim::Plan plan;
  sim::RunRecord record;
};

/// Scripted online solver: serial workflow steps, nearest-station routing, polling Waits when a
/// resource is taken. Consecutive Waits are merged, so batch replay of the plan reproduces the
/// outcome, OCT and per-agent totals (the event log differs only in the merged Waits).
/// `horizon` caps simulated time (the bundle's t_max is ignored).
SolverResult solve_greedy(std::shared_ptr<const world::TaskBundle> bundle, SolverMode mode,
                          Ticks horizon = 100000);

}  // namespace paracook::taskgen
