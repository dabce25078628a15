#include "paracook/harness/evaluate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace paracook::harness {

namespace {

json field(const ResultRow& r, const std::string& f) {
  if (f == "model") return r.model;
  if (f == "method") return r.method;
  if (f == "category") return r.category;
  if (f == "difficulty") return r.difficulty;
  if (f == "n_agents") return r.n_agents;
  if (f == "n_dishes") return r.n_dishes;
  if (f == "controller") return r.record ? json(r.record->controller) : json(nullptr);
  throw std::invalid_argument("unknown grouping field '" + f + "'");
}

}  // namespace

std::vector<GroupScore> evaluate(const std::vector<ResultRow>& rows, const std::vector<std::string>& by) {
  for (const auto& f : by)
    if (std::find(kGroupFields.begin(), kGroupFields.end(), f) == kGroupFields.end())
      throw std::invalid_argument("unknown grouping field '" + f + "'");

  struct Bucket {
    json key = json::object();
    std::vector<metrics::ScoredRun> runs;
    int infra = 0;
  };
  // json arrays compare lexicographically, which gives a stable, readable order.
  std::map<json, Bucket> buckets;
  for (const auto& r : rows) {
    json k = json::array();
    json named = json::object();
    for (const auto& f : by) {
      k.push_back(field(r, f));
      named[f] = k.back();
    }
    Bucket& b = buckets[k];
    b.key = named;
    if (r.infrastructure_failure || !r.record) {
      ++b.infra;
      continue;
    }
    b.runs.push_back(scored(r));
  }

  std::vector<GroupScore> out;
  for (auto& [_, b] : buckets) {
    GroupScore g;
    g.key = b.key;
    g.infrastructure_failures = b.infra;
    if (!b.runs.empty()) g.score = metrics::score(b.runs);
    out.push_back(std::move(g));
  }
  return out;
}

json to_json(const GroupScore& g) {
  json j = g.key;
  if (g.score.n_total == 0) {
    j.update(json{{"sr", nullptr}, {"poct", nullptr}, {"noct", nullptr}, {"pmd", nullptr}, {"au", nullptr},
                  {"n_total", 0}, {"n_success", 0}});
  } else {
    j.update(metrics::to_json(g.score));
  }
  j["infrastructure_failures"] = g.infrastructure_failures;
  return j;
}

json to_json(const std::vector<GroupScore>& groups) {
  json arr = json::array();
  for (const auto& g : groups) arr.push_back(to_json(g));
  return arr;
}

}  // namespace paracook::harness
