#include "paracook/metrics/metrics.hpp"

#include <stdexcept>

namespace paracook::metrics {

namespace {

void require_nonempty(const std::vector<ScoredRun>& runs) {
  if (runs.empty()) throw std::invalid_argument("metrics need at least one run");
}

Ticks t_max_of(const ScoredRun& r) {
  if (!r.t_max) throw std::invalid_argument("run is missing its bundle's t_max");
  return *r.t_max;
}

void check_agents(const ScoredRun& r) {
  if (r.record.per_agent.empty()) throw std::invalid_argument("run has no per-agent totals");
  if (r.n_agents > 0 && r.record.per_agent.size() != static_cast<std::size_t>(r.n_agents))
    throw std::invalid_argument("per-agent totals do not match the bundle's agent count");
}

}  // namespace

double success_rate(const std::vector<ScoredRun>& runs) {
  require_nonempty(runs);
  std::size_t ok = 0;
  for (const auto& r : runs) ok += r.record.success ? 1 : 0;
  return static_cast<double>(ok) / static_cast<double>(runs.size());
}

double poct(const std::vector<ScoredRun>& runs) {
  require_nonempty(runs);
  double sum = 0.0;
  for (const auto& r : runs)
    sum += r.record.success ? static_cast<double>(r.record.oct) : static_cast<double>(t_max_of(r));
  return sum / static_cast<double>(runs.size());
}

std::optional<double> noct(const std::vector<ScoredRun>& runs) {
  require_nonempty(runs);
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& r : runs) {
    if (!r.record.success) continue;
    const Ticks t = t_max_of(r);
    if (t <= 0) throw std::invalid_argument("nOCT needs a positive t_max");
    sum += static_cast<double>(r.record.oct) / static_cast<double>(t);
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

double task_md(const sim::RunRecord& r) {
  if (r.per_agent.empty()) throw std::invalid_argument("run has no per-agent totals");
  double sum = 0.0;
  for (const auto& a : r.per_agent) sum += a.distance;
  return sum / static_cast<double>(r.per_agent.size());
}

double task_au(const sim::RunRecord& r) {
  if (r.per_agent.empty()) throw std::invalid_argument("run has no per-agent totals");
  if (r.oct <= 0) return 0.0;
  double sum = 0.0;
  for (const auto& a : r.per_agent) sum += static_cast<double>(a.work_time) / static_cast<double>(r.oct);
  return sum / static_cast<double>(r.per_agent.size());
}

Movement movement(const std::vector<ScoredRun>& runs) {
  require_nonempty(runs);
  Movement m;
  double sum = 0.0;
  for (const auto& r : runs) {
    check_agents(r);
    if (r.record.success) {
      const double md = task_md(r.record);
      m.md.push_back(md);
      sum += md;
    } else {
      if (!r.d_max) throw std::invalid_argument("failed run is missing its bundle's d_max");
      sum += *r.d_max;
    }
  }
  m.pmd = sum / static_cast<double>(runs.size());
  return m;
}

std::optional<double> agent_utilization(const std::vector<ScoredRun>& runs) {
  require_nonempty(runs);
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& r : runs) {
    if (!r.record.success) continue;
    sum += task_au(r.record);
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

DatasetScore score(const std::vector<ScoredRun>& runs) {
  DatasetScore s;
  s.sr = success_rate(runs);
  s.poct = poct(runs);
  s.noct = noct(runs);
  s.pmd = movement(runs).pmd;
  s.au = agent_utilization(runs);
  s.n_total = static_cast<int>(runs.size());
  for (const auto& r : runs) s.n_success += r.record.success ? 1 : 0;
  return s;
}

json to_json(const DatasetScore& s) {
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  return {{"sr", s.sr},       {"poct", s.poct},       {"noct", opt(s.noct)},        {"pmd", s.pmd},
          {"au", opt(s.au)},  {"n_total", s.n_total}, {"n_success", s.n_success}};
}

DatasetScore dataset_score_from_json(const json& j) {
  auto opt = [&](const char* k) -> std::optional<double> {
    if (!j.contains(k) || j.at(k).is_null()) return std::nullopt;
    return j.at(k).get<double>();
  };
  DatasetScore s;
  s.sr = j.at("sr").get<double>();
  s.poct = j.at("poct").get<double>();
  s.noct = opt("noct");
  s.pmd = j.at("pmd").get<double>();
  s.au = opt("au");
  s.n_total = j.at("n_total").get<int>();
  s.n_success = j.at("n_success").get<int>();
  return s;
}

}  // namespace paracook::metrics
