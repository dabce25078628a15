#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <thread>

#include <httplib.h>

#include "paracook/harness/evaluate.hpp"
#include "paracook/harness/experiment.hpp"
#include "paracook/taskgen/generator.hpp"
#include "paracook/taskgen/greedy_solver.hpp"
#include "support/kitchen.hpp"

using namespace paracook;
using namespace paracook::harness;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("paracook-test-" + session_suffix());
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static std::string session_suffix() {
    static std::atomic<int> n{0};
    return std::to_string(::getpid()) + "-" + std::to_string(n++);
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Answers each prompt from a table; unknown prompts get prose. Can fail the first N calls.
class ScriptedClient : public ChatClient {
 public:
  std::map<std::string, std::string> answers;
  std::atomic<int> calls{0};
  int fail_first = 0;
  bool retryable = true;

  ChatResponse complete(const std::string& prompt) override {
    const int n = calls++;
    if (n < fail_first) throw TransportError("HTTP 503", retryable);
    auto it = answers.find(prompt);
    return {it == answers.end() ? std::string("I would start by chopping the lettuce.") : it->second, 100, 20};
  }
};

std::vector<world::TaskBundle> small_suite() {
  return {taskgen::assemble_bundle("salad", 1, 1, 0), taskgen::assemble_bundle("salad", 2, 2, 1),
          taskgen::assemble_bundle("sashimi", 1, 2, 2)};
}

std::string golden_answer(const world::TaskBundle& b) {
  auto shared = std::make_shared<const world::TaskBundle>(b);
  const auto solved = taskgen::solve_greedy(shared, taskgen::SolverMode::SingleAgent);
  return "```json\n" + sim::to_json(solved.plan).dump(2) + "\n```";
}

}  // namespace

TEST_CASE("prompts: IO and CoT contracts, placeholders, determinism") {
  const auto b = taskgen::assemble_bundle("burger", 2, 2, 0);
  const std::string io = render_prompt(b, Method::IO);
  const std::string cot = render_prompt(b, Method::CoT);
  CHECK(io.find("Do not add any additional explanations") != std::string::npos);
  CHECK(cot.find("\"CoT\"") != std::string::npos);
  CHECK(io.find("\"CoT\"") == std::string::npos);
  for (const char* ph : {"{INTERACT_TIME}", "{PROCESS_CUT_TIME}", "{PROCESS_POT_COOK_TIME}", "{PROCESS_PAN_COOK_TIME}",
                         "{PROCESS_WASH_PLATE_TIME}", "{RETURN_DIRTY_PLATE_TIME}", "{task}"}) {
    CHECK(io.find(ph) == std::string::npos);
    CHECK(cot.find(ph) == std::string::npos);
  }
  CHECK(io.find("Move: 1 unit per tile") != std::string::npos);
  CHECK(io == render_prompt(b, Method::IO));
  for (const auto& r : b.recipes) CHECK(io.find(r.text) != std::string::npos);
  for (const auto& s : b.map.stations()) CHECK(io.find("\"" + s.name + "\"") != std::string::npos);
  CHECK(io.find("agent2") != std::string::npos);
}

TEST_CASE("prompt constants follow the bundle") {
  auto b = taskgen::assemble_bundle("salad", 1, 1, 0);
  b.constants.cut = 17;
  b.constants.move_per_tile = 2;
  const std::string p = render_prompt(b, Method::IO);
  CHECK(p.find("17") != std::string::npos);
  CHECK(p.find("Move: 2 units per tile") != std::string::npos);
}

TEST_CASE("template rendering") {
  CHECK(render_template("a {x} {{b}}", {{"x", "1"}}) == "a 1 {b}");
  CHECK_THROWS_AS(render_template("{missing}", {}), PromptError);
  CHECK_THROWS_AS(render_template("oops {", {}), PromptError);
  CHECK(parse_method("cot") == Method::CoT);
  CHECK(parse_method("IO") == Method::IO);
  CHECK_FALSE(parse_method("react"));
}

TEST_CASE("plan parsing corpus") {
  const std::string plan = R"({"plan": {"agent1": [{"action": "Wait", "duration": 2}, {"action": "Finish"}]}})";
  struct Case {
    std::string text;
    bool ok;
  };
  const std::vector<Case> corpus = {
      {plan, true},
      {"```json\n" + plan + "\n```", true},
      {"```\n" + plan + "\n```", true},
      {"Here is the plan:\n" + plan + "\nGood luck!", true},
      {"Use {curly} braces carefully. " + plan, true},
      {R"({"note": 1} then )" + plan, true},
      {R"({"CoT": ["agent1 waits"], "plan": {"agent1": [{"action": "Finish"}]}})", true},
      {"```json\n{\"plan\": {\"agent1\": [], \"agent2\": [{\"action\": \"MoveTo\", \"target\": [1, 2]}]}}\n```", true},
      {R"({"plan": {"agent1": [{"action": "Interact", "target": "str{ange}"}]}})", true},
      {"```json\n" + plan + "\n```\nand a second block\n```json\n{\"x\": 1}\n```", true},
      {R"({"plan": {"agent1": [{"action": "Teleport", "target": [1, 1]}]}})", false},
      {"I cannot produce a plan for this kitchen.", false},
      {R"({"plan": {"agent1": [{"action": "Wait", "duration": 2})", false},
      {R"({"actions": [{"action": "Finish"}]})", false},
      {R"({"plan": {"chef": [{"action": "Finish"}]}})", false},
      {R"({"plan": {"agent1": [{"action": "MoveTo", "target": "sink"}]}})", false},
      {R"({"plan": {"agent1": [{"action": "Wait"}]}})", false},
      {R"({"plan": {"agent1": [{"action": "Process"}]}})", false},
      {R"({"plan": [{"action": "Finish"}]})", false},
      {"```json\n{\"plan\": {\"agent1\": [{\"action\": \"Finish\"},]}}\n```", false},
  };
  REQUIRE(corpus.size() == 20);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ParsedOutput out = parse_plan(corpus[i].text);
    CHECK_MESSAGE(out.ok() == corpus[i].ok, "case ", i, ": ", out.error);
    CHECK(out.error.empty() == out.ok());
  }
  CHECK(parse_plan(corpus[0].text).plan == parse_plan(corpus[1].text).plan);
  const ParsedOutput with_cot = parse_plan(corpus[6].text);
  REQUIRE(with_cot.cot);
  CHECK(with_cot.cot->at(0) == "agent1 waits");
  CHECK(with_cot.plan->per_agent.size() == 1);
}

TEST_CASE("config parsing") {
  const auto cfg = parse_config(R"(
[endpoint]
url = "https://api.example.com/v1/chat/completions"
model = "some-model"
api_key_env = "EXAMPLE_KEY"
max_tokens = 4096

[run]
methods = ["io", "cot"]
retries = 2
parallelism = 8
output = "out/results.jsonl"

[bundles]
categories = ["salad", "pasta"]
dishes = [1, 2]
agents = [2]
seeds = [0, 1, 2]
)", "/base");
  CHECK(cfg.endpoint.model == "some-model");
  CHECK(cfg.endpoint.temperature == 0.0);
  CHECK(cfg.endpoint.max_tokens == 4096);
  CHECK(cfg.methods == std::vector<Method>{Method::IO, Method::CoT});
  CHECK(cfg.retries == 2);
  CHECK(cfg.parallelism == 8);
  CHECK(cfg.output == fs::path("/base/out/results.jsonl"));
  CHECK(cfg.bundles.categories.size() == 2);
  CHECK(cfg.bundles.seeds == std::vector<std::uint64_t>{0, 1, 2});
  CHECK(load_bundles(cfg.bundles).size() == 2 * 2 * 1 * 3);

  CHECK_THROWS_AS(parse_config("[run]\nretries = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[endpoint]\nurl = \"x\"\nmodel = \"m\"\napi_key = \"sk-live\"\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[endpoint]\nurl = \"x\"\nmodel = \"m\"\n[run]\nmethod = \"react\"\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("not toml ["), ConfigError);
}

TEST_CASE("experiment: golden answers succeed, prose fails, reruns add nothing") {
  TempDir tmp;
  ExperimentConfig cfg;
  cfg.endpoint.model = "mock";
  cfg.methods = {Method::IO, Method::CoT};
  cfg.output = tmp.path / "results.jsonl";
  cfg.parallelism = 3;
  cfg.retry_backoff_seconds = 0;
  const auto bundles = small_suite();

  ScriptedClient client;
  for (const auto& b : bundles) client.answers[render_prompt(b, Method::IO)] = golden_answer(b);

  const auto first = run_experiment(cfg, client, bundles);
  CHECK(first.total == 6);
  CHECK(first.completed == 6);
  CHECK(first.successes == 3);
  CHECK(first.infrastructure_failures == 0);

  const auto rows = load_rows(cfg.output);
  REQUIRE(rows.size() == 6);
  for (const auto& r : rows) {
    CHECK(r.model == "mock");
    REQUIRE(r.record);
    if (r.method == "IO") {
      CHECK(r.success());
      CHECK(r.plan.has_value());
    } else {
      CHECK_FALSE(r.success());
      CHECK(r.parse_error.has_value());
      CHECK(r.record->failure_reason == "parse-error");
      CHECK(r.record->per_agent.size() == static_cast<std::size_t>(r.n_agents));
    }
    CHECK(r.prompt_tokens == 100);
    CHECK(r.attempts == 1);
  }

  // Re-scoring from rows alone matches a fresh execution of the stored plans.
  for (const auto& r : rows)
    if (r.plan) {
      const auto it = std::find_if(bundles.begin(), bundles.end(), [&](const auto& b) { return b.id == r.bundle_id; });
      CHECK(sim::to_json(sim::execute(*it, sim::plan_from_json(*r.plan))) == sim::to_json(*r.record));
    }

  const int calls = client.calls;
  const auto second = run_experiment(cfg, client, bundles);
  CHECK(second.skipped == 6);
  CHECK(second.completed == 0);
  CHECK(client.calls == calls);
  CHECK(load_rows(cfg.output).size() == 6);
}

TEST_CASE("experiment: transport failures are retried, then recorded separately") {
  TempDir tmp;
  ExperimentConfig cfg;
  cfg.endpoint.model = "flaky";
  cfg.output = tmp.path / "r.jsonl";
  cfg.parallelism = 1;
  cfg.retries = 2;
  cfg.retry_backoff_seconds = 0;
  const auto bundles = std::vector<world::TaskBundle>{taskgen::assemble_bundle("salad", 1, 1, 0)};

  ScriptedClient recovering;
  recovering.fail_first = 2;
  recovering.answers[render_prompt(bundles[0], Method::IO)] = golden_answer(bundles[0]);
  auto s = run_experiment(cfg, recovering, bundles);
  CHECK(s.successes == 1);
  auto rows = load_rows(cfg.output);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].attempts == 3);
  CHECK_FALSE(rows[0].error.has_value());

  cfg.output = tmp.path / "down.jsonl";
  ScriptedClient down;
  down.fail_first = 100;
  s = run_experiment(cfg, down, bundles);
  CHECK(s.infrastructure_failures == 1);
  CHECK(down.calls == 3);
  rows = load_rows(cfg.output);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].infrastructure_failure);
  CHECK_FALSE(rows[0].record.has_value());
  CHECK(rows[0].error == "HTTP 503");
  // Excluded from scoring.
  const auto groups = evaluate(rows);
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].score.n_total == 0);
  CHECK(groups[0].infrastructure_failures == 1);

  cfg.output = tmp.path / "fatal.jsonl";
  ScriptedClient rejected;
  rejected.fail_first = 100;
  rejected.retryable = false;
  run_experiment(cfg, rejected, bundles);
  CHECK(rejected.calls == 1);
}

TEST_CASE("result rows round-trip and tolerate a damaged file") {
  TempDir tmp;
  const auto b = taskgen::assemble_bundle("sushi", 2, 1, 0);
  ResultRow r = row_for(b, "m", "CoT");
  r.raw_output = "text";
  r.record = failed_record(1, "parse-error");
  r.parse_error = "no JSON object found in model output";
  r.timestamp = utc_timestamp();
  const ResultRow back = result_row_from_json(to_json(r));
  CHECK(to_json(back) == to_json(r));
  CHECK(back.difficulty == "medium");
  CHECK(back.n_dishes == 2);
  CHECK(back.t_max == b.t_max);

  ResultStore store(tmp.path / "x.jsonl");
  store.append(r);
  { std::ofstream(tmp.path / "x.jsonl", std::ios::app) << "{not json\n"; }
  store.append(r);
  CHECK(store.load().size() == 2);
  CHECK(store.keys().size() == 1);
  CHECK(utc_timestamp().back() == 'Z');
}

TEST_CASE("evaluation groups rows, including human and model side by side") {
  const auto b = taskgen::assemble_bundle("salad", 1, 2, 0);
  std::vector<ResultRow> rows;
  for (int i = 0; i < 4; ++i) {
    ResultRow r = row_for(b, i < 2 ? "model-a" : "human", i < 2 ? "IO" : "live");
    r.record = failed_record(2, "timeout");
    if (i % 2 == 0) {
      r.record->success = true;
      r.record->oct = b.t_max / 2;
      r.record->per_agent = {{10, b.t_max / 2}, {20, 0}};
    }
    if (i >= 2) r.record->controller = "human";
    rows.push_back(r);
  }
  const auto groups = evaluate(rows, {"controller"});
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].key.at("controller") == "human");
  CHECK(groups[1].key.at("controller") == "model");
  for (const auto& g : groups) {
    CHECK(g.score.sr == 0.5);
    CHECK(g.score.poct == doctest::Approx((b.t_max / 2 + b.t_max) / 2.0));
    CHECK(*g.score.au == doctest::Approx(0.5));
    CHECK(g.score.pmd == doctest::Approx((15.0 + b.d_max) / 2));
  }
  const auto by_default = evaluate(rows);
  CHECK(by_default.size() == 2);
  CHECK(by_default[0].key.contains("n_dishes"));
  CHECK(to_json(by_default).size() == 2);
  CHECK_THROWS_AS(evaluate(rows, {"colour"}), std::invalid_argument);
}

TEST_CASE("HTTP client speaks the chat-completion shape and never leaks the key") {
  ::setenv("PARACOOK_TEST_KEY", "sk-test-secret-000", 1);
  httplib::Server server;
  std::atomic<int> hits{0};
  std::string seen_auth, seen_model;
  double seen_temperature = -1;
  server.Post("/v1/chat/completions", [&](const httplib::Request& req, httplib::Response& res) {
    const int n = hits++;
    seen_auth = req.get_header_value("Authorization");
    const auto body = nlohmann::json::parse(req.body);
    seen_model = body.at("model");
    seen_temperature = body.at("temperature");
    if (body.at("messages").at(0).at("content").get<std::string>() == "boom" && n % 2 == 0) {
      res.status = 500;
      return;
    }
    if (body.at("messages").at(0).at("content").get<std::string>() == "bad") {
      res.status = 400;
      return;
    }
    res.set_content(R"({"choices": [{"message": {"role": "assistant", "content": "hello"}}],
                        "usage": {"prompt_tokens": 7, "completion_tokens": 3}})",
                    "application/json");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread t([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  EndpointConfig cfg;
  cfg.url = "http://127.0.0.1:" + std::to_string(port) + "/v1/chat/completions";
  cfg.model = "m1";
  cfg.api_key_env = "PARACOOK_TEST_KEY";
  cfg.timeout_seconds = 5;
  HttpChatClient client(cfg);
  const ChatResponse r = client.complete("hi");
  CHECK(r.content == "hello");
  CHECK(r.prompt_tokens == 7);
  CHECK(r.completion_tokens == 3);
  CHECK(seen_auth == "Bearer sk-test-secret-000");
  CHECK(seen_model == "m1");
  CHECK(seen_temperature == 0.0);

  try {
    client.complete("bad");
    FAIL("expected a transport error");
  } catch (const TransportError& e) {
    CHECK_FALSE(e.retryable());
  }

  // Full pipeline through the HTTP client: the key must not reach the results file.
  TempDir tmp;
  ExperimentConfig ecfg;
  ecfg.endpoint = cfg;
  ecfg.output = tmp.path / "r.jsonl";
  ecfg.retry_backoff_seconds = 0;
  run_experiment(ecfg, client, {taskgen::assemble_bundle("salad", 1, 1, 0)});
  const std::string written = slurp(ecfg.output);
  CHECK_FALSE(written.empty());
  CHECK(written.find("sk-test-secret-000") == std::string::npos);
  CHECK(written.find("PARACOOK_TEST_KEY") == std::string::npos);

  server.stop();
  t.join();

  cfg.api_key_env = "PARACOOK_TEST_KEY_UNSET";
  ::unsetenv("PARACOOK_TEST_KEY_UNSET");
  CHECK_THROWS_AS(HttpChatClient{cfg}, std::invalid_argument);
  CHECK_THROWS_AS(parse_url("ftp://x"), std::invalid_argument);
  CHECK(parse_url("https://api.example.com/v1/chat").origin == "https://api.example.com");
  CHECK(parse_url("https://api.example.com/v1/chat").path == "/v1/chat");

  // Nothing listening: a retryable connection error.
  cfg.api_key_env.clear();
  HttpChatClient dead(cfg);
  try {
    dead.complete("hi");
    FAIL("expected a transport error");
  } catch (const TransportError& e) {
    CHECK(e.retryable());
  }
}
