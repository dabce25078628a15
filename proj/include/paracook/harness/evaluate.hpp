#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "paracook/harness/result_row.hpp"
#include "paracook/metrics/metrics.hpp"

namespace paracook::harness {

/// Row fields usable as grouping keys.
inline const std::vector<std::string> kGroupFields = {"model", "method", "category", "difficulty", "n_agents",
                                                      "n_dishes", "controller"};
inline const std::vector<std::string> kDefaultGrouping = {"model", "method", "difficulty", "n_agents", "n_dishes"};

struct GroupScore {
  json key;  // {field: value} for each grouping field
  metrics::DatasetScore score;
  int infrastructure_failures = 0;  // excluded from `score`
};

/// Groups rows and scores each group. Groups made only of infrastructure failures are reported
/// with n_total = 0. Throws std::invalid_argument on an unknown field.
std::vector<GroupScore> evaluate(const std::vector<ResultRow>& rows,
                                 const std::vector<std::string>& by = kDefaultGrouping);

json to_json(const GroupScore& g);
json to_json(const std::vector<GroupScore>& groups);

}  // namespace paracook::harness
