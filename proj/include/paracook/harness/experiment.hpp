#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "paracook/harness/client.hpp"
#include "paracook/harness/prompt.hpp"
#include "paracook/harness/result_row.hpp"
#include "paracook/world/bundle.hpp"

namespace paracook::harness {

/// Either a directory of bundle files or a generation grid.
struct BundleSource {
  std::optional<std::filesystem::path> dir;
  std::vector<std::string> categories;
  std::vector<int> dishes{1, 2, 3, 4};
  std::vector<int> agents{1, 2, 3};
  std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4};
};

struct ExperimentConfig {
  EndpointConfig endpoint;
  std::vector<Method> methods{Method::IO};
  int retries = 3;
  double retry_backoff_seconds = 2.0;
  int parallelism = 4;
  std::filesystem::path output = "results.jsonl";
  BundleSource bundles;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the TOML experiment file. Throws ConfigError.
ExperimentConfig load_config(const std::filesystem::path& path);
ExperimentConfig parse_config(std::string_view toml_text, const std::filesystem::path& base_dir = {});

/// Bundles in a stable order (file name order, or grid order).
std::vector<world::TaskBundle> load_bundles(const BundleSource& source);

/// render -> call (with retries) -> parse -> execute. Never throws for model or transport trouble.
ResultRow run_one(const world::TaskBundle& bundle, Method method, const std::string& model, ChatClient& client,
                  int retries, double backoff_seconds);

struct ExperimentSummary {
  int total = 0;
  int skipped = 0;  // already present in the output file
  int completed = 0;
  int successes = 0;
  int infrastructure_failures = 0;
};

/// Runs every (bundle, method) pair not already in the output file, `parallelism` at a time,
/// appending one row per pair through a single writer.
ExperimentSummary run_experiment(const ExperimentConfig& config, ChatClient& client,
                                 const std::vector<world::TaskBundle>& bundles,
                                 const std::function<void(const ResultRow&)>& on_row = {});

}  // namespace paracook::harness
