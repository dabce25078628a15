// paracook command-line entry point.

#include <pthread.h>
#include <csignal>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "paracook/harness/evaluate.hpp"
#include "paracook/harness/experiment.hpp"
#include "paracook/sched/generator.hpp"
#include "paracook/sched/solver.hpp"
#include "paracook/session/server.hpp"
#include "paracook/sim/simulation.hpp"
#include "paracook/taskgen/bundle_io.hpp"
#include "paracook/taskgen/catalog.hpp"
#include "paracook/taskgen/generator.hpp"
#include "paracook/taskgen/greedy_solver.hpp"

using namespace paracook;
using json = nlohmann::json;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return json::parse(in);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void write_json(const std::string& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paracook: kitchen planning benchmark tools"};
  app.require_subcommand(1);

  // gen
  std::string category;
  int dishes = 1, agents = 1;
  std::uint64_t seed = 0;
  std::string out;
  auto* gen = app.add_subcommand("gen", "Generate one task bundle");
  gen->add_option("--category", category, "burger | burrito | pasta | salad | sashimi | sushi")->required();
  gen->add_option("--dishes", dishes, "Order length (1-4)")->check(CLI::Range(1, 4));
  gen->add_option("--agents", agents, "Agent count (1-3)")->check(CLI::Range(1, 3));
  gen->add_option("--seed", seed);
  gen->add_option("--out", out, "Bundle file (default stdout)");

  // execute
  std::string bundle_path, plan_path;
  auto* exec = app.add_subcommand("execute", "Run a plan against a bundle and print the RunRecord");
  exec->add_option("--bundle", bundle_path)->required();
  exec->add_option("--plan", plan_path, "Plan JSON, or raw model output")->required();
  exec->add_option("--out", out);

  // solve
  std::string mode = "single";
  auto* solve = app.add_subcommand("solve", "Scripted greedy plan for a bundle");
  solve->add_option("--bundle", bundle_path)->required();
  solve->add_option("--mode", mode)->check(CLI::IsMember({"single", "split"}));
  solve->add_option("--out", out);

  // prompt
  std::string method = "io";
  auto* prompt = app.add_subcommand("prompt", "Render the model prompt for a bundle");
  prompt->add_option("--bundle", bundle_path)->required();
  prompt->add_option("--method", method)->check(CLI::IsMember({"io", "cot", "IO", "CoT"}));
  prompt->add_option("--out", out);

  // run
  std::string config_path;
  bool dry_run = false;
  auto* run = app.add_subcommand("run", "Run a model experiment from a TOML config");
  run->add_option("--config", config_path)->required()->check(CLI::ExistingFile);
  run->add_flag("--dry-run", dry_run, "List the pending work without calling the endpoint");

  // eval
  std::vector<std::string> runs;
  std::vector<std::string> by = harness::kDefaultGrouping;
  auto* eval = app.add_subcommand("eval", "Score result rows, grouped");
  eval->add_option("--runs", runs, "Results JSONL file(s)")->required();
  eval->add_option("--by", by, "Grouping fields")->delimiter(',');
  eval->add_option("--out", out);

  // oracle
  std::string in_path;
  double budget = 0;
  auto* oracle = app.add_subcommand("oracle", "Exact optimal schedule for a DAG instance");
  oracle->add_option("--in", in_path)->required();
  oracle->add_option("--out", out);
  oracle->add_option("--budget", budget, "Wall-time limit in seconds (0 = unlimited); a limited search may return a non-optimal schedule");

  // sched-gen
  std::string profile = "default-v1";
  std::uint64_t first_seed = 0;
  int count = 1;
  auto* sgen = app.add_subcommand("sched-gen", "Generate DAG scheduling instances");
  sgen->add_option("--profile", profile);
  sgen->add_option("--seed", first_seed);
  sgen->add_option("--count", count)->check(CLI::PositiveNumber);
  sgen->add_option("--out", out, "File for one instance, directory for several");

  // sched-score
  std::string sched_path;
  auto* sscore = app.add_subcommand("sched-score", "Validate and score a schedule against the oracle");
  sscore->add_option("--in", in_path)->required();
  sscore->add_option("--schedule", sched_path)->required();
  sscore->add_option("--budget", budget, "Oracle wall-time limit in seconds (0 = unlimited)");

  // serve
  std::string host = "127.0.0.1";
  unsigned short port = 8080;
  std::string results;
  auto* serve = app.add_subcommand("serve", "Live session server (HTTP + WebSocket)");
  serve->add_option("--host", host);
  serve->add_option("--port", port);
  serve->add_option("--results", results, "JSONL store for finalized human runs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const auto b = taskgen::assemble_bundle(category, dishes, agents, seed);
      write_text(out, taskgen::dump_bundle(b));
    } else if (*exec) {
      const auto bundle = std::make_shared<const world::TaskBundle>(taskgen::load_bundle(bundle_path));
      std::ifstream in(plan_path);
      if (!in) throw std::runtime_error("cannot read " + plan_path);
      const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      const auto parsed = harness::parse_plan(text);
      const sim::RunRecord rec =
          parsed.ok() ? sim::execute(bundle, *parsed.plan) : harness::failed_record(bundle->n_agents, "parse-error");
      if (!parsed.ok()) std::cerr << "parse error: " << parsed.error << "\n";
      write_json(out, sim::to_json(rec));
      return rec.success ? 0 : 2;
    } else if (*solve) {
      const auto bundle = std::make_shared<const world::TaskBundle>(taskgen::load_bundle(bundle_path));
      const auto r = taskgen::solve_greedy(bundle, mode == "split" ? taskgen::SolverMode::SplitDishes
                                                                   : taskgen::SolverMode::SingleAgent);
      write_json(out, sim::to_json(r.plan));
      std::cerr << (r.record.success ? "success" : "failed") << ", oct " << r.record.oct << "\n";
    } else if (*prompt) {
      const auto b = taskgen::load_bundle(bundle_path);
      write_text(out, harness::render_prompt(b, *harness::parse_method(method)) + "\n");
    } else if (*run) {
      const auto cfg = harness::load_config(config_path);
      const auto bundles = harness::load_bundles(cfg.bundles);
      if (dry_run) {
        const auto done = harness::ResultStore(cfg.output).keys();
        int pending = 0;
        for (const auto& b : bundles)
          for (auto m : cfg.methods)
            if (!done.count({b.id, cfg.endpoint.model, std::string(harness::to_string(m))})) {
              std::cout << b.id << " " << harness::to_string(m) << "\n";
              ++pending;
            }
        std::cerr << pending << " pending of " << bundles.size() * cfg.methods.size() << "\n";
        return 0;
      }
      harness::HttpChatClient client(cfg.endpoint);
      const auto s = harness::run_experiment(cfg, client, bundles, [](const harness::ResultRow& r) {
        std::cerr << r.bundle_id << " " << r.method << ": "
                  << (r.infrastructure_failure ? "infrastructure failure" : r.success() ? "success" : "failed")
                  << "\n";
      });
      std::cerr << "done: " << s.completed << " run, " << s.skipped << " skipped, " << s.successes << " succeeded, "
                << s.infrastructure_failures << " infrastructure failures\n";
      return s.infrastructure_failures == 0 ? 0 : 3;
    } else if (*eval) {
      std::vector<harness::ResultRow> rows;
      for (const auto& f : runs) {
        auto more = harness::load_rows(f);
        rows.insert(rows.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
      }
      write_json(out, harness::to_json(harness::evaluate(rows, by)));
    } else if (*oracle) {
      const auto inst = sched::instance_from_json(read_json(in_path));
      const auto r = sched::optimal_makespan(inst, budget > 0 ? std::optional<double>(budget) : std::nullopt);
      json j = sched::to_json(r.schedule, inst);
      j["optimal"] = r.optimal;
      j["nodes"] = r.nodes;
      write_json(out, j);
    } else if (*sgen) {
      const auto prof = sched::profile_by_name(profile);
      if (count == 1) {
        write_json(out, sched::to_json(sched::generate_instance(prof, first_seed)));
      } else {
        if (out.empty()) throw std::runtime_error("--out DIR is required with --count > 1");
        for (int i = 0; i < count; ++i) {
          const auto s = first_seed + static_cast<std::uint64_t>(i);
          write_json((std::filesystem::path(out) / (profile + "-s" + std::to_string(s) + ".json")).string(),
                     sched::to_json(sched::generate_instance(prof, s)));
        }
      }
    } else if (*sscore) {
      const auto inst = sched::instance_from_json(read_json(in_path));
      const auto sched_j = read_json(sched_path);
      const auto opt = sched::optimal_makespan(inst, budget > 0 ? std::optional<double>(budget) : std::nullopt);
      sched::Schedule s;
      json out_j;
      try {
        s = sched::schedule_from_json(sched_j, inst);
      } catch (const std::exception& e) {
        s = {};
        out_j["parse_error"] = e.what();
      }
      const auto v = sched::validate(inst, s);
      const auto score = sched::score_plan(inst, s, opt.makespan);
      out_j.update({{"valid", v.valid},
                    {"reason", v.valid ? json(nullptr) : json(v.reason)},
                    {"detail", v.detail},
                    {"optimum", opt.makespan},
                    {"optimum_proven", opt.optimal},
                    {"noct", score.noct ? json(*score.noct) : json(nullptr)},
                    {"poct", score.poct}});
      write_json("", out_j);
    } else if (*serve) {
      session::SessionManager manager(results.empty() ? std::nullopt
                                                      : std::optional<std::filesystem::path>(results));
      // Block the stop signals everywhere and wait for them here, so shutdown runs on a normal thread.
      sigset_t stop_signals;
      sigemptyset(&stop_signals);
      sigaddset(&stop_signals, SIGINT);
      sigaddset(&stop_signals, SIGTERM);
      pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);
      session::Server server(manager, host, port);
      server.start();
      std::cerr << "listening on " << host << ":" << server.port() << "\n";
      int sig = 0;
      sigwait(&stop_signals, &sig);
      server.stop();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
