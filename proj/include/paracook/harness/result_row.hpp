#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "paracook/metrics/metrics.hpp"
#include "paracook/sim/run_record.hpp"
#include "paracook/world/bundle.hpp"

namespace paracook::harness {

using json = nlohmann::json;

/// One line of the results JSONL. Self-contained: carries the bounds needed for re-scoring.
struct ResultRow {
  std::string bundle_id;
  std::string model;
  std::string method;  // IO | CoT | live
  std::string category;
  std::string difficulty;  // c_recipe
  int n_agents = 0;
  int n_dishes = 0;
  Ticks t_max = 0;
  double d_max = 0.0;
  std::string raw_output;
  std::optional<json> plan;
  std::optional<json> cot;
  std::optional<std::string> parse_error;
  std::optional<sim::RunRecord> record;  // absent only for infrastructure failures
  bool infrastructure_failure = false;
  std::optional<std::string> error;
  double wall_seconds = 0.0;
  long prompt_tokens = 0;
  long completion_tokens = 0;
  int attempts = 0;
  std::string timestamp;  // UTC ISO-8601

  bool success() const { return record && record->success; }
};

/// Fills the bundle-derived fields.
ResultRow row_for(const world::TaskBundle& b, std::string model, std::string method);

/// Failed record with zeroed per-agent totals, for plans that never ran.
sim::RunRecord failed_record(int n_agents, std::string reason);

json to_json(const ResultRow& r);
/// Throws world::SchemaError.
ResultRow result_row_from_json(const json& j);

/// Rows that can be scored (everything but infrastructure failures).
metrics::ScoredRun scored(const ResultRow& r);

std::string utc_timestamp();

/// Append-only JSONL store shared by the harness and live sessions. Appends are serialised and flushed.
class ResultStore {
 public:
  explicit ResultStore(std::filesystem::path path);

  const std::filesystem::path& path() const { return path_; }
  void append(const ResultRow& row);

  /// Every parseable row; malformed lines are skipped.
  std::vector<ResultRow> load() const;

  using Key = std::tuple<std::string, std::string, std::string>;  // bundle, model, method
  std::set<Key> keys() const;

 private:
  std::filesystem::path path_;
  mutable std::mutex mutex_;
};

std::vector<ResultRow> load_rows(const std::filesystem::path& path);

}  // namespace paracook::harness
