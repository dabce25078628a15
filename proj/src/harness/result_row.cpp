#include "paracook/harness/result_row.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include "paracook/world/json_io.hpp"

namespace paracook::harness {

ResultRow row_for(const world::TaskBundle& b, std::string model, std::string method) {
  ResultRow r;
  r.bundle_id = b.id;
  r.model = std::move(model);
  r.method = std::move(method);
  r.category = b.category;
  r.difficulty = b.difficulty.c_recipe;
  r.n_agents = b.n_agents;
  r.n_dishes = static_cast<int>(b.orders.dishes.size());
  r.t_max = b.t_max;
  r.d_max = b.d_max;
  return r;
}

sim::RunRecord failed_record(int n_agents, std::string reason) {
  sim::RunRecord rec;
  rec.success = false;
  rec.per_agent.assign(static_cast<std::size_t>(std::max(n_agents, 0)), sim::AgentTotals{});
  rec.failure_reason = std::move(reason);
  return rec;
}

json to_json(const ResultRow& r) {
  auto opt_str = [](const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); };
  return {
      {"bundle_id", r.bundle_id},
      {"model", r.model},
      {"method", r.method},
      {"category", r.category},
      {"difficulty", r.difficulty},
      {"n_agents", r.n_agents},
      {"n_dishes", r.n_dishes},
      {"t_max", r.t_max},
      {"d_max", r.d_max},
      {"raw_output", r.raw_output},
      {"plan", r.plan ? *r.plan : json(nullptr)},
      {"cot", r.cot ? *r.cot : json(nullptr)},
      {"parse_error", opt_str(r.parse_error)},
      {"record", r.record ? sim::to_json(*r.record) : json(nullptr)},
      {"infrastructure_failure", r.infrastructure_failure},
      {"error", opt_str(r.error)},
      {"wall_seconds", r.wall_seconds},
      {"prompt_tokens", r.prompt_tokens},
      {"completion_tokens", r.completion_tokens},
      {"attempts", r.attempts},
      {"timestamp", r.timestamp},
  };
}

ResultRow result_row_from_json(const json& j) {
  try {
    auto opt_str = [&](const char* k) -> std::optional<std::string> {
      if (!j.contains(k) || j.at(k).is_null()) return std::nullopt;
      return j.at(k).get<std::string>();
    };
    auto opt_json = [&](const char* k) -> std::optional<json> {
      if (!j.contains(k) || j.at(k).is_null()) return std::nullopt;
      return j.at(k);
    };
    ResultRow r;
    r.bundle_id = j.at("bundle_id").get<std::string>();
    r.model = j.at("model").get<std::string>();
    r.method = j.at("method").get<std::string>();
    r.category = j.value("category", "");
    r.difficulty = j.value("difficulty", "");
    r.n_agents = j.value("n_agents", 0);
    r.n_dishes = j.value("n_dishes", 0);
    r.t_max = j.value("t_max", Ticks{0});
    r.d_max = j.value("d_max", 0.0);
    r.raw_output = j.value("raw_output", "");
    r.plan = opt_json("plan");
    r.cot = opt_json("cot");
    r.parse_error = opt_str("parse_error");
    if (auto rec = opt_json("record")) r.record = sim::run_record_from_json(*rec);
    r.infrastructure_failure = j.value("infrastructure_failure", false);
    r.error = opt_str("error");
    r.wall_seconds = j.value("wall_seconds", 0.0);
    r.prompt_tokens = j.value("prompt_tokens", 0L);
    r.completion_tokens = j.value("completion_tokens", 0L);
    r.attempts = j.value("attempts", 0);
    r.timestamp = j.value("timestamp", "");
    if (!r.infrastructure_failure && !r.record) throw world::SchemaError("result row without a run record");
    return r;
  } catch (const json::exception& e) {
    throw world::SchemaError(std::string("malformed result row: ") + e.what());
  }
}

metrics::ScoredRun scored(const ResultRow& r) {
  if (!r.record) throw std::invalid_argument("row " + r.bundle_id + " has no run record");
  return {*r.record, r.t_max, r.d_max, r.n_agents};
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ResultStore::ResultStore(std::filesystem::path path) : path_(std::move(path)) {
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
}

void ResultStore::append(const ResultRow& row) {
  const std::string line = to_json(row).dump() + "\n";
  std::lock_guard lock(mutex_);
  std::ofstream out(path_, std::ios::app | std::ios::binary);
  if (!out) throw std::runtime_error("cannot append to " + path_.string());
  out << line;
  out.flush();
}

std::vector<ResultRow> load_rows(const std::filesystem::path& path) {
  std::vector<ResultRow> rows;
  std::ifstream in(path, std::ios::binary);
  if (!in) return rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) continue;  // a torn final line from an interrupted run
    try {
      rows.push_back(result_row_from_json(j));
    } catch (const world::SchemaError&) {
    }
  }
  return rows;
}

std::vector<ResultRow> ResultStore::load() const {
  std::lock_guard lock(mutex_);
  return load_rows(path_);
}

std::set<ResultStore::Key> ResultStore::keys() const {
  std::set<Key> out;
  for (const auto& r : load()) out.insert({r.bundle_id, r.model, r.method});
  return out;
}

}  // namespace paracook::harness
