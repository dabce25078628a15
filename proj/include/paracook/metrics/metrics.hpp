#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "paracook/sim/run_record.hpp"

namespace paracook::metrics {

using json = nlohmann::json;

/// A RunRecord together with the bounds of the bundle it ran on.
struct ScoredRun {
  sim::RunRecord record;
  std::optional<Ticks> t_max;   // required for failures (pOCT) and successes (nOCT)
  std::optional<double> d_max;  // required for failures (pMD)
  int n_agents = 0;             // 0 skips the per-agent count check
};

struct DatasetScore {
  double sr = 0.0;
  double poct = 0.0;
  std::optional<double> noct;  // absent without successes
  double pmd = 0.0;
  std::optional<double> au;    // absent without successes
  int n_total = 0;
  int n_success = 0;
};

/// All aggregates throw std::invalid_argument on empty input or a missing bound.
double success_rate(const std::vector<ScoredRun>& runs);
double poct(const std::vector<ScoredRun>& runs);
std::optional<double> noct(const std::vector<ScoredRun>& runs);

/// Mean distance over the record's agents.
double task_md(const sim::RunRecord& r);
/// Mean over agents of work_time / OCT; zero when OCT is zero.
double task_au(const sim::RunRecord& r);

struct Movement {
  std::vector<double> md;  // one entry per success, in input order
  double pmd = 0.0;
};
Movement movement(const std::vector<ScoredRun>& runs);

/// Dataset AU: mean task AU over successes only.
std::optional<double> agent_utilization(const std::vector<ScoredRun>& runs);

DatasetScore score(const std::vector<ScoredRun>& runs);

/// Raw ratios only; absent aggregates become null.
json to_json(const DatasetScore& s);
DatasetScore dataset_score_from_json(const json& j);

}  // namespace paracook::metrics
