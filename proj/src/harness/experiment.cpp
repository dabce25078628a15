#include "paracook/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include <toml.hpp>

#include "paracook/sim/simulation.hpp"
#include "paracook/taskgen/bundle_io.hpp"
#include "paracook/taskgen/catalog.hpp"
#include "paracook/taskgen/generator.hpp"

namespace paracook::harness {

namespace {

template <class T>
std::vector<T> int_list(const toml::table& t, std::string_view key, std::vector<T> fallback) {
  const toml::array* arr = t[key].as_array();
  if (!arr) return fallback;
  std::vector<T> out;
  for (const auto& v : *arr) {
    auto x = v.value<std::int64_t>();
    if (!x || *x < 0) throw ConfigError("'" + std::string(key) + "' must list non-negative integers");
    out.push_back(static_cast<T>(*x));
  }
  return out;
}

}  // namespace

ExperimentConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  toml::table doc;
  try {
    doc = toml::parse(text);
  } catch (const toml::parse_error& e) {
    throw ConfigError(std::string("invalid TOML: ") + std::string(e.description()));
  }
  ExperimentConfig c;
  const toml::table* ep = doc["endpoint"].as_table();
  if (!ep) throw ConfigError("missing [endpoint] table");
  c.endpoint.url = (*ep)["url"].value_or(std::string());
  c.endpoint.model = (*ep)["model"].value_or(std::string());
  if (c.endpoint.url.empty() || c.endpoint.model.empty()) throw ConfigError("[endpoint] needs url and model");
  if ((*ep)["api_key"]) throw ConfigError("put the key in an environment variable and name it with api_key_env");
  c.endpoint.api_key_env = (*ep)["api_key_env"].value_or(std::string());
  c.endpoint.temperature = (*ep)["temperature"].value_or(0.0);
  c.endpoint.timeout_seconds = static_cast<int>((*ep)["timeout_seconds"].value_or(std::int64_t{120}));
  if (auto mt = (*ep)["max_tokens"].value<std::int64_t>()) c.endpoint.max_tokens = static_cast<int>(*mt);

  if (const toml::table* run = doc["run"].as_table()) {
    std::vector<std::string> names;
    if (auto m = (*run)["method"].value<std::string>()) names.push_back(*m);
    if (const toml::array* ms = (*run)["methods"].as_array())
      for (const auto& v : *ms) names.push_back(v.value_or(std::string()));
    if (!names.empty()) {
      c.methods.clear();
      for (const auto& n : names) {
        auto m = parse_method(n);
        if (!m) throw ConfigError("unknown method '" + n + "' (expected io or cot)");
        c.methods.push_back(*m);
      }
    }
    c.retries = static_cast<int>((*run)["retries"].value_or(std::int64_t{c.retries}));
    c.retry_backoff_seconds = (*run)["retry_backoff_seconds"].value_or(c.retry_backoff_seconds);
    c.parallelism = static_cast<int>((*run)["parallelism"].value_or(std::int64_t{c.parallelism}));
    if (auto out = (*run)["output"].value<std::string>()) c.output = *out;
  }
  if (c.retries < 0 || c.parallelism < 1) throw ConfigError("retries must be >= 0 and parallelism >= 1");

  if (const toml::table* b = doc["bundles"].as_table()) {
    if (auto dir = (*b)["dir"].value<std::string>()) c.bundles.dir = std::filesystem::path(*dir);
    if (const toml::array* cats = (*b)["categories"].as_array())
      for (const auto& v : *cats) c.bundles.categories.push_back(v.value_or(std::string()));
    c.bundles.dishes = int_list<int>(*b, "dishes", c.bundles.dishes);
    c.bundles.agents = int_list<int>(*b, "agents", c.bundles.agents);
    c.bundles.seeds = int_list<std::uint64_t>(*b, "seeds", c.bundles.seeds);
  }
  if (!base_dir.empty()) {
    if (c.output.is_relative()) c.output = base_dir / c.output;
    if (c.bundles.dir && c.bundles.dir->is_relative()) c.bundles.dir = base_dir / *c.bundles.dir;
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_config(text, path.parent_path());
}

std::vector<world::TaskBundle> load_bundles(const BundleSource& source) {
  std::vector<world::TaskBundle> out;
  if (source.dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(*source.dir))
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out.push_back(taskgen::load_bundle(f));
    return out;
  }
  const auto& cats = source.categories.empty() ? taskgen::categories() : source.categories;
  for (const auto& c : cats)
    for (int d : source.dishes)
      for (int a : source.agents)
        for (auto s : source.seeds) out.push_back(taskgen::assemble_bundle(c, d, a, s));
  return out;
}

ResultRow run_one(const world::TaskBundle& bundle, Method method, const std::string& model, ChatClient& client,
                  int retries, double backoff_seconds) {
  ResultRow row = row_for(bundle, model, std::string(to_string(method)));
  const auto t0 = std::chrono::steady_clock::now();
  const std::string prompt = render_prompt(bundle, method);

  std::optional<ChatResponse> reply;
  for (int attempt = 0; attempt <= retries && !reply; ++attempt) {
    row.attempts = attempt + 1;
    try {
      reply = client.complete(prompt);
    } catch (const TransportError& e) {
      row.error = e.what();
      if (!e.retryable()) break;
      if (attempt < retries && backoff_seconds > 0)
        std::this_thread::sleep_for(std::chrono::duration<double>(backoff_seconds * (1 << std::min(attempt, 6))));
    }
  }
  row.timestamp = utc_timestamp();
  if (!reply) {
    row.infrastructure_failure = true;
    row.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return row;
  }
  row.error.reset();
  row.raw_output = reply->content;
  row.prompt_tokens = reply->prompt_tokens;
  row.completion_tokens = reply->completion_tokens;

  ParsedOutput parsed = parse_plan(reply->content);
  row.cot = parsed.cot;
  if (!parsed.ok()) {
    row.parse_error = parsed.error;
    row.record = failed_record(bundle.n_agents, "parse-error");
  } else {
    row.plan = sim::to_json(*parsed.plan);
    row.record = sim::execute(bundle, *parsed.plan);
  }
  row.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

ExperimentSummary run_experiment(const ExperimentConfig& config, ChatClient& client,
                                 const std::vector<world::TaskBundle>& bundles,
                                 const std::function<void(const ResultRow&)>& on_row) {
  ResultStore store(config.output);
  const auto done = store.keys();

  struct Job {
    const world::TaskBundle* bundle;
    Method method;
  };
  std::vector<Job> jobs;
  ExperimentSummary summary;
  for (const auto& b : bundles)
    for (Method m : config.methods) {
      ++summary.total;
      if (done.count({b.id, config.endpoint.model, std::string(to_string(m))})) {
        ++summary.skipped;
        continue;
      }
      jobs.push_back({&b, m});
    }

  std::atomic<std::size_t> next{0};
  std::mutex tally;
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      ResultRow row = run_one(*jobs[i].bundle, jobs[i].method, config.endpoint.model, client, config.retries,
                              config.retry_backoff_seconds);
      store.append(row);
      std::lock_guard lock(tally);
      ++summary.completed;
      summary.successes += row.success() ? 1 : 0;
      summary.infrastructure_failures += row.infrastructure_failure ? 1 : 0;
      if (on_row) on_row(row);
    }
  };
  const int n_threads = std::max(1, std::min<int>(config.parallelism, static_cast<int>(jobs.size())));
  std::vector<std::thread> threads;
  for (int t = 1; t < n_threads; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return summary;
}

}  // namespace paracook::harness
