// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <deque>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "paracook/metrics/metrics.hpp"
#include "paracook/sched/generator.hpp"
#include "paracook/sched/solver.hpp"
#include "paracook/sim/simulation.hpp"
#include "paracook/taskgen/catalog.hpp"
#include "paracook/taskgen/generator.hpp"
#include "paracook/taskgen/greedy_solver.hpp"
#include "support/brute_force.hpp"
#include "support/kitchen.hpp"

using namespace paracook;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void fail(const std::string& why) {
    if (pass) note << why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

using Bundle = std::shared_ptr<const world::TaskBundle>;

Bundle share(world::TaskBundle b) { return std::make_shared<const world::TaskBundle>(std::move(b)); }

taskgen::SolverMode best_mode(const world::TaskBundle& b) {
  return b.n_agents > 1 && b.orders.dishes.size() > 1 ? taskgen::SolverMode::SplitDishes
                                                      : taskgen::SolverMode::SingleAgent;
}

// ---------------------------------------------------------------------------------------------

void determinism(Outcome& o) {
  const auto t0 = Clock::now();
  int pairs = 0;
  const auto& cats = taskgen::categories();
  for (int i = 0; i < 100; ++i) {
    const std::string& cat = cats[i % cats.size()];
    const int dishes = 1 + i % 4, agents = 1 + (i / 4) % 3;
    const Bundle b = share(taskgen::assemble_bundle(cat, dishes, agents, 1000 + i));
    const auto golden = taskgen::solve_greedy(b, best_mode(*b));
    const std::string first = sim::to_json(sim::execute(b, golden.plan)).dump();
    const std::string second = sim::to_json(sim::execute(b, golden.plan)).dump();
    if (first != second) o.fail(b->id + " replayed differently; ");
    if (!golden.record.success) o.fail(b->id + " golden plan failed; ");
    ++pairs;
  }
  const double secs = seconds_since(t0);
  if (secs >= 10.0) o.fail("took " + std::to_string(secs) + " s; ");
  o.note << pairs << " pairs identical, " << secs << " s (incl. generation)";
}

void solvability(Outcome& o) {
  const auto t0 = Clock::now();
  int solved = 0, total = 0;
  for (const auto& recipe : taskgen::recipe_catalog())
    for (int dishes : {1, 2})
      for (int agents : {1, 2})
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
          ++total;
          try {
            const Bundle b =
                share(taskgen::assemble_bundle_for_orders(std::vector<std::string>(dishes, recipe.id), agents, seed));
            const auto r = taskgen::solve_greedy(b, taskgen::SolverMode::SingleAgent);
            if (r.record.success && sim::execute(b, r.plan).success) ++solved;
            else o.fail(b->id + " unsolved; ");
          } catch (const std::exception& e) {
            o.fail(recipe.id + ": " + e.what() + "; ");
          }
        }
  const double secs = seconds_since(t0);
  if (secs >= 60.0) o.fail("took " + std::to_string(secs) + " s; ");
  o.note << "SR " << solved << "/" << total << ", " << secs << " s";
}

int bfs(const world::GridMap& m, Coord a, Coord b) {
  std::vector<int> d(static_cast<std::size_t>(m.width() * m.height()), -1);
  std::deque<Coord> q{a};
  d[a.y * m.width() + a.x] = 0;
  while (!q.empty()) {
    const Coord c = q.front();
    q.pop_front();
    if (c == b) return d[c.y * m.width() + c.x];
    for (Coord n : {Coord{c.x, c.y - 1}, Coord{c.x, c.y + 1}, Coord{c.x - 1, c.y}, Coord{c.x + 1, c.y}}) {
      if (!m.in_bounds(n) || m.station_at(n) || d[n.y * m.width() + n.x] >= 0) continue;
      d[n.y * m.width() + n.x] = d[c.y * m.width() + c.x] + 1;
      q.push_back(n);
    }
  }
  return -1;
}

void pathfinding(Outcome& o) {
  std::mt19937_64 gen(20240601);
  int checked = 0;
  const auto& cats = taskgen::categories();
  for (int k = 0; k < 20; ++k) {
    const auto b = taskgen::assemble_bundle(cats[k % cats.size()], 1 + k % 4, 1 + k % 3, 500 + k);
    const world::GridMap& m = b.map;
    std::vector<Coord> floor;
    for (int y = 0; y < m.height(); ++y)
      for (int x = 0; x < m.width(); ++x)
        if (!m.station_at({x, y})) floor.push_back({x, y});
    for (int i = 0; i < 50; ++i) {
      const Coord a = floor[gen() % floor.size()], c = floor[gen() % floor.size()];
      const auto p = world::shortest_path(m, a, c);
      const int expected = bfs(m, a, c);
      if (!p || world::path_tiles(*p) != expected)
        o.fail("mismatch on " + b.id + "; ");
      ++checked;
    }
  }
  o.note << checked << " pairs over 20 maps";
}

void metric_closed_forms(Outcome& o) {
  std::mt19937_64 gen(77);
  std::vector<metrics::ScoredRun> runs;
  for (int i = 0; i < 200; ++i) {
    metrics::ScoredRun r;
    const int m = 1 + static_cast<int>(gen() % 3);
    r.n_agents = m;
    r.t_max = 30 + static_cast<Ticks>(gen() % 900);
    r.d_max = 5.0 + static_cast<double>(gen() % 400) / 3.0;
    r.record.success = gen() % 4 != 0;
    r.record.oct = r.record.success ? 1 + static_cast<Ticks>(gen() % *r.t_max) : static_cast<Ticks>(gen() % 1000);
    for (int a = 0; a < m; ++a)
      r.record.per_agent.push_back({static_cast<int>(gen() % 150), static_cast<Ticks>(gen() % (r.record.oct + 1))});
    runs.push_back(r);
  }
  const auto s = metrics::score(runs);

  // Independent one-line recomputations.
  double n = runs.size(), succ = 0, poct = 0, noct = 0, pmd = 0, au = 0;
  for (const auto& r : runs) {
    double md = 0, util = 0;
    for (const auto& a : r.record.per_agent) md += a.distance, util += double(a.work_time) / double(r.record.oct);
    md /= r.record.per_agent.size();
    util /= r.record.per_agent.size();
    succ += r.record.success;
    poct += r.record.success ? double(r.record.oct) : double(*r.t_max);
    noct += r.record.success ? double(r.record.oct) / double(*r.t_max) : 0;
    pmd += r.record.success ? md : *r.d_max;
    au += r.record.success ? util : 0;
  }
  const double expect[] = {succ / n, poct / n, noct / succ, pmd / n, au / succ};
  const double got[] = {s.sr, s.poct, s.noct.value_or(NAN), s.pmd, s.au.value_or(NAN)};
  const char* names[] = {"SR", "pOCT", "nOCT", "pMD", "AU"};
  double worst = 0;
  for (int i = 0; i < 5; ++i) {
    const double rel = std::abs(got[i] - expect[i]) / std::max(1e-300, std::abs(expect[i]));
    worst = std::max(worst, rel);
    if (!(rel <= 1e-12)) o.fail(std::string(names[i]) + " off; ");
  }
  const auto mv = metrics::movement(runs);
  std::size_t k = 0;
  for (const auto& r : runs) {
    if (!r.record.success) continue;
    double md = 0;
    for (const auto& a : r.record.per_agent) md += a.distance;
    md /= r.record.per_agent.size();
    if (std::abs(mv.md.at(k++) - md) > 1e-12 * std::max(1.0, md)) o.fail("MD off; ");
  }
  // nOCT <= 1 on real successes: the executor never reports success past t_max.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Bundle b = share(taskgen::assemble_bundle("burger", 2, 2, seed));
    const auto rec = sim::execute(b, taskgen::solve_greedy(b, taskgen::SolverMode::SplitDishes).plan);
    metrics::ScoredRun r{rec, b->t_max, b->d_max, b->n_agents};
    if (rec.success && *metrics::noct({r}) > 1.0) o.fail("nOCT above 1; ");
  }
  o.note << "200 records, worst relative error " << worst;
}

void exact_solver(Outcome& o) {
  const auto t0 = Clock::now();
  const sched::Profile p = sched::profile_by_name("small-v1");
  int agree = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto inst = sched::generate_instance(p, seed);
    if (inst.n() > 8 || inst.m > 3) o.fail("profile out of range; ");
    const auto r = sched::optimal_makespan(inst);
    if (r.optimal && r.makespan == oracle::brute_force_makespan(inst) && sched::validate(inst, r.schedule).valid)
      ++agree;
    else
      o.fail("seed " + std::to_string(seed) + " disagrees; ");
  }
  const double secs = seconds_since(t0);
  if (secs >= 300.0) o.fail("took " + std::to_string(secs) + " s; ");
  o.note << agree << "/300 equal to brute force, " << secs << " s";
}

void oracle_normalization(Outcome& o) {
  int scored = 0;
  for (const char* profile : {"small-v1", "default-v1"})
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto inst = sched::generate_instance(sched::profile_by_name(profile), seed);
      const auto opt = sched::optimal_makespan(inst);
      const auto own = sched::score_plan(inst, opt.schedule, opt.makespan);
      if (!own.valid || own.noct != 1.0) o.fail(std::string(profile) + " nOCT != 1; ");
      // Break the schedule: everything on agent 0 at time 0.
      sched::Schedule broken{std::vector<int>(inst.n(), 0), std::vector<Ticks>(inst.n(), 0), 0};
      for (Ticks t : inst.t) broken.makespan = std::max(broken.makespan, t);
      const auto bad = sched::score_plan(inst, broken, opt.makespan);
      const double penalty = static_cast<double>(opt.makespan * 6) / 5.0;  // 1.2 x optimum, correctly rounded
      if (bad.valid || bad.poct != penalty) o.fail("penalty is not 1.2 x optimum; ");
      ++scored;
    }
  o.note << scored << " instances: nOCT = 1.0000, invalid = 1.2 x optimum";
}

void pause_resume(Outcome& o) {
  const Bundle b = fixture::kitchen({"burrito_meat"});
  for (const char* which : {"pot", "pan"}) {
    sim::Simulation s(b);
    auto finish = [&](const sim::Action& a) {
      if (s.start(0, a).outcome == sim::Outcome::Rejected) throw std::runtime_error(sim::describe(a) + " rejected");
      while (!s.idle(0)) s.advance_to(*s.next_event_time());
    };
    const bool pot = std::string(which) == "pot";
    const std::string stove = pot ? "stove_pot" : "stove_pan";
    const Ticks cook = pot ? b->constants.pot_cook : b->constants.pan_cook;
    try {
      if (pot) {
        finish(sim::MoveTo{{6, 1}});
        finish(sim::Interact{"rice_dispenser"});
        finish(sim::MoveTo{{4, 1}});
      } else {
        finish(sim::Interact{"meat_dispenser"});
        finish(sim::MoveTo{{1, 1}});
        finish(sim::Interact{"cutting_board_1"});
        finish(sim::Process{"cutting_board_1"});
        finish(sim::Interact{"cutting_board_1"});
        finish(sim::MoveTo{{5, 1}});
      }
      const world::StationId sid = *b->map.find_station(stove);
      auto food = [&]() -> const world::Item& { return s.state().stations[sid].contents.at(0).contents.at(0); };
      s.start(0, sim::Interact{stove});
      const Ticks placed = s.clock();
      s.advance_to(placed + cook / 2);
      if (*s.cook_progress(sid) != cook / 2) o.fail(std::string(which) + " progress wrong at 50%; ");
      finish(sim::Interact{stove});  // lift at exactly 50%
      finish(sim::Wait{5});
      s.start(0, sim::Interact{stove});
      const Ticks resumed = s.clock();
      Ticks cooked_at = -1;
      while (cooked_at < 0) {
        const auto next = s.next_event_time();
        if (!next) break;
        s.advance_to(*next);
        if (food().food == world::FoodState::Cooked) cooked_at = s.clock();
      }
      if (cooked_at != resumed + (cook - cook / 2))
        o.fail(std::string(which) + " finished at " + std::to_string(cooked_at) + "; ");
      o.note << which << " resumed at " << resumed << ", cooked at " << cooked_at << " (cook " << cook << ")  ";
    } catch (const std::exception& e) {
      o.fail(std::string(which) + ": " + e.what() + "; ");
    }
  }
}

void parallel_speedup(Outcome& o) {
  int faster = 0, total = 0;
  double ratio = 0;
  for (const auto& cat : taskgen::categories())
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Bundle b = share(taskgen::assemble_bundle(cat, 2, 2, seed));
      const auto one = taskgen::solve_greedy(b, taskgen::SolverMode::SingleAgent);
      const auto two = taskgen::solve_greedy(b, taskgen::SolverMode::SplitDishes);
      const Ticks best_two = std::min(one.record.oct, two.record.oct);
      ++total;
      if (one.record.success && two.record.success && best_two < one.record.oct) {
        ++faster;
        ratio += double(best_two) / double(one.record.oct);
      } else {
        o.fail(b->id + " not faster with two agents; ");
      }
    }
  o.note << faster << "/" << total << " two-agent plans faster, mean OCT ratio " << (faster ? ratio / faster : 0);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"simulator determinism", determinism},
      {"golden solvability", solvability},
      {"pathfinding oracle", pathfinding},
      {"metric closed forms", metric_closed_forms},
      {"exact-solver equivalence", exact_solver},
      {"oracle normalization", oracle_normalization},
      {"cook pause/resume", pause_resume},
      {"parallel speedup sanity", parallel_speedup},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS  " : "FAIL  ") << name << " -- " << o.note.str() << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
