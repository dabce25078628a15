#include <doctest.h>

#include "paracook/sim/interactive.hpp"
#include "paracook/sim/simulation.hpp"
#include "paracook/taskgen/generator.hpp"
#include "paracook/taskgen/greedy_solver.hpp"
#include "support/kitchen.hpp"

using namespace paracook;
using namespace paracook::sim;
using json = nlohmann::json;

namespace {

Plan plan_of(const char* text) { return plan_from_json(json::parse(text)); }

const char* kGoldenSalad = R"({"plan": {"agent1": [
  {"action": "Interact", "target": "lettuce_dispenser"},
  {"action": "MoveTo", "target": [1, 1]},
  {"action": "Interact", "target": "cutting_board_1"},
  {"action": "Process", "target": "cutting_board_1"},
  {"action": "MoveTo", "target": [2, 1]},
  {"action": "Interact", "target": "plate_counter"},
  {"action": "MoveTo", "target": [1, 1]},
  {"action": "Interact", "target": "cutting_board_1"},
  {"action": "MoveTo", "target": [3, 1]},
  {"action": "Interact", "target": "serving_window"},
  {"action": "Finish"}]}})";

int ingredients_in_world(const Simulation& s) {
  int n = 0;
  for (const auto& st : s.state().stations)
    for (const auto& item : st.contents) n += world::count_ingredients(item);
  for (const auto& a : s.state().agents)
    if (a.held) n += world::count_ingredients(*a.held);
  return n;
}

int plates_in_world(const Simulation& s) {
  int n = s.plates_in_transit();
  for (const auto& st : s.state().stations)
    for (const auto& item : st.contents) n += world::count_plates(item);
  for (const auto& a : s.state().agents)
    if (a.held) n += world::count_plates(*a.held);
  return n;
}

std::vector<Action> golden_steps() { return plan_of(kGoldenSalad).per_agent[0]; }

}  // namespace

TEST_CASE("golden salad plan: OCT is path tiles + interacts + one cut") {
  const auto b = fixture::kitchen({"salad_basic"});
  const RunRecord r = execute(b, plan_of(kGoldenSalad));
  REQUIRE(r.success);
  const auto& k = b->constants;
  // Tiles: 1 + 1 + 1 + 2; five Interacts; one cut.
  CHECK(r.oct == 5 * k.move_per_tile + 5 * k.interact + k.cut);
  CHECK(r.per_agent.at(0).distance == 5);
  CHECK(r.per_agent.at(0).work_time == r.oct);
  REQUIRE(r.served.size() == 1);
  CHECK(r.served[0].dish == "salad_basic");
  CHECK(r.served[0].clock == r.oct);
  CHECK_FALSE(r.failure_reason);
}

TEST_CASE("batch runs are byte-identical") {
  const auto b = fixture::kitchen({"salad_basic"});
  CHECK(to_json(execute(b, plan_of(kGoldenSalad))).dump() == to_json(execute(b, plan_of(kGoldenSalad))).dump());
}

TEST_CASE("failure modes of batch execution") {
  const auto b = fixture::kitchen({"salad_basic"});
  SUBCASE("empty plan") {
    const RunRecord r = execute(b, Plan{{{}}});
    CHECK_FALSE(r.success);
    CHECK(r.failure_reason == "plan-exhausted");
    CHECK(r.served.empty());
  }
  SUBCASE("processing an empty-handed stove") {
    const RunRecord r = execute(b, plan_of(R"({"plan": {"agent1": [
      {"action": "MoveTo", "target": [4, 1]}, {"action": "Process", "target": "stove_pot"}]}})"));
    CHECK_FALSE(r.success);
    CHECK(r.failure_reason == "illegal-process");
  }
  SUBCASE("non-adjacent target") {
    const RunRecord r = execute(b, plan_of(R"({"plan": {"agent1": [{"action": "Interact", "target": "sink"}]}})"));
    CHECK(r.failure_reason == "not-adjacent");
  }
  SUBCASE("MoveTo onto a station") {
    const RunRecord r = execute(b, plan_of(R"({"plan": {"agent1": [{"action": "MoveTo", "target": [1, 0]}]}})"));
    CHECK(r.failure_reason == "invalid-target");
  }
  SUBCASE("pick-up with full hands") {
    const RunRecord r = execute(b, plan_of(R"({"plan": {"agent1": [
      {"action": "Interact", "target": "lettuce_dispenser"}, {"action": "Interact", "target": "lettuce_dispenser"}]}})"));
    CHECK(r.failure_reason == "hands-full");
  }
  SUBCASE("chopping an empty board") {
    const RunRecord r = execute(b, plan_of(R"({"plan": {"agent1": [
      {"action": "MoveTo", "target": [1, 1]}, {"action": "Process", "target": "cutting_board_1"}]}})"));
    CHECK(r.failure_reason == "illegal-process");
  }
  SUBCASE("more agents in the plan than in the bundle") {
    const RunRecord r = execute(b, plan_of(R"({"plan": {"agent1": [], "agent2": []}})"));
    CHECK(r.failure_reason == "invalid-plan");
  }
  SUBCASE("timeout") {
    const auto tight = fixture::kitchen({"salad_basic"}, 1, 10);
    const RunRecord r = execute(tight, plan_of(kGoldenSalad));
    CHECK_FALSE(r.success);
    CHECK(r.failure_reason == "timeout");
    CHECK(r.oct == 10);
  }
}

TEST_CASE("MoveTo into a sealed-off pocket is rejected as unreachable") {
  // Built in code, bypassing map validation, to get a floor pocket at (2,1).
  world::TaskBundle b = *fixture::kitchen({"salad_basic"});
  std::vector<world::Station> st = b.map.stations();
  for (int x : {1, 3}) {
    world::Station wall;
    wall.name = "wall_" + std::to_string(x);
    wall.pos = {x, 1};
    st.push_back(wall);
  }
  b.map = world::GridMap(7, 3, st, {{0, 1}});
  InteractiveRun run(std::make_shared<const world::TaskBundle>(b));
  CHECK(run.step(0, MoveTo{{2, 1}}).reason == "unreachable");
}

TEST_CASE("serving is strictly in order") {
  // Orders salad_basic then salad_advanced; serving the lettuce-only salad second is fine, but
  // a plate that matches only the second dish is refused while the first is pending.
  const auto b = fixture::kitchen({"salad_advanced", "salad_basic"});
  const RunRecord r = execute(b, plan_of(kGoldenSalad));
  CHECK_FALSE(r.success);
  CHECK(r.failure_reason == "out-of-order");
  CHECK(r.served.empty());
}

TEST_CASE("served dishes form a prefix of the order list") {
  for (int agents = 1; agents <= 2; ++agents)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto b = std::make_shared<const world::TaskBundle>(taskgen::assemble_bundle("burger", 3, agents, seed));
      const auto solved = taskgen::solve_greedy(b, taskgen::SolverMode::SingleAgent);
      REQUIRE(solved.record.success);
      for (std::size_t cut = 0; cut < solved.plan.per_agent[0].size(); cut += 7) {
        Plan partial = solved.plan;
        partial.per_agent[0].resize(cut);
        const RunRecord r = execute(b, partial);
        REQUIRE(r.served.size() <= b->orders.dishes.size());
        for (std::size_t i = 0; i < r.served.size(); ++i) CHECK(r.served[i].dish == b->orders.dishes[i]);
      }
    }
}

TEST_CASE("cooking pauses off the stove and resumes for exactly the remainder") {
  const auto b = fixture::kitchen({"burrito_meat"});
  Simulation s(b);
  auto run = [&](const Action& a) {
    const Event ev = s.start(0, a);
    REQUIRE(ev.outcome != Outcome::Rejected);
    while (!s.idle(0)) s.advance_to(*s.next_event_time());
  };
  run(MoveTo{{6, 1}});
  run(Interact{"rice_dispenser"});
  run(MoveTo{{4, 1}});
  run(Interact{"stove_pot"});  // rice into the pot
  const Ticks pot_cook = b->constants.pot_cook;
  const world::StationId stove = *b->map.find_station("stove_pot");
  REQUIRE(s.cook_progress(stove).has_value());
  const Ticks started_at = s.clock() - *s.cook_progress(stove);

  s.advance_to(started_at + pot_cook / 2);
  CHECK(*s.cook_progress(stove) == pot_cook / 2);
  run(Interact{"stove_pot"});  // lift the pot
  CHECK_FALSE(s.cook_progress(stove).has_value());
  const Ticks held_progress = s.state().agents[0].held->contents.at(0).progress;
  CHECK(held_progress == pot_cook / 2);

  run(Wait{7});
  CHECK(s.state().agents[0].held->contents.at(0).progress == held_progress);  // frozen in hand
  run(Interact{"stove_pot"});  // back on the stove
  const Ticks placed_at = s.clock() - *s.cook_progress(stove) + held_progress;
  s.advance_to(placed_at + (pot_cook - held_progress) - 1);
  CHECK(s.state().stations[stove].contents[0].contents[0].food != world::FoodState::Cooked);
  s.advance_to(placed_at + (pot_cook - held_progress));
  CHECK(s.state().stations[stove].contents[0].contents[0].food == world::FoodState::Cooked);
}

TEST_CASE("dirty plates come back after the return delay and can be washed") {
  const auto b = fixture::kitchen({"salad_basic", "salad_basic"}, 1, 1000, 1);
  Simulation s(b);
  auto run = [&](const Action& a) {
    const Event ev = s.start(0, a);
    REQUIRE_MESSAGE(ev.outcome != Outcome::Rejected, ev.reason, " ", ev.detail);
    while (!s.idle(0)) s.advance_to(*s.next_event_time());
  };
  const int plates = plates_in_world(s);
  for (const Action& a : golden_steps())
    if (!std::holds_alternative<Finish>(a)) run(a);
  const Ticks served_at = s.state().served.at(0).clock;
  CHECK(plates_in_world(s) == plates);
  CHECK(s.plates_in_transit() == 1);
  const world::StationId ret = *b->map.find_station("dirty_plate_return");
  s.advance_to(served_at + b->constants.dirty_plate_return - 1);
  CHECK(s.state().stations[ret].contents.empty());
  s.advance_to(served_at + b->constants.dirty_plate_return);
  REQUIRE(s.state().stations[ret].contents.size() == 1);
  CHECK(s.state().stations[ret].contents[0].dirty);
  CHECK(plates_in_world(s) == plates);

  // Pick it up, wash it in the sink, and take it back clean.
  run(MoveTo{{2, 1}});
  run(MoveTo{{3, 1}});
  CHECK(s.check(0, Process{"sink"}).outcome == Outcome::Rejected);  // nothing in the sink yet
  run(Interact{"dirty_plate_return"});
  run(MoveTo{{2, 1}});
  run(Interact{"sink"});
  const Ticks before = s.clock();
  run(Process{"sink"});
  CHECK(s.clock() - before == b->constants.wash_plate);
  run(Interact{"sink"});
  REQUIRE(s.state().agents[0].held);
  CHECK(s.state().agents[0].held->is_clean_plate());
  CHECK(plates_in_world(s) == plates);
}

TEST_CASE("a station being processed is exclusive") {
  const auto b = fixture::kitchen({"salad_basic"}, 2);
  Simulation s(b);
  s.start(0, Interact{"lettuce_dispenser"});
  s.start(1, MoveTo{{1, 1}});
  s.advance_to(1);
  s.start(0, MoveTo{{1, 1}});
  s.advance_to(2);
  s.advance_to(*s.next_event_time());
  while (!s.idle(0) || !s.idle(1)) s.advance_to(*s.next_event_time());
  REQUIRE(s.start(0, Interact{"cutting_board_1"}).outcome != Outcome::Rejected);
  while (!s.idle(0)) s.advance_to(*s.next_event_time());
  REQUIRE(s.start(0, Process{"cutting_board_1"}).outcome == Outcome::Started);
  const Event second = s.start(1, Process{"cutting_board_1"});
  CHECK(second.outcome == Outcome::Rejected);
  CHECK(second.reason == "station-busy");
  CHECK(s.start(1, Interact{"cutting_board_1"}).reason == "station-busy");
}

TEST_CASE("work time, distance and conservation hold on greedy runs") {
  for (const char* cat : {"salad", "burrito", "pasta", "sushi"})
    for (int agents = 1; agents <= 3; ++agents) {
      auto b = std::make_shared<const world::TaskBundle>(taskgen::assemble_bundle(cat, 3, agents, 11));
      for (auto mode : {taskgen::SolverMode::SingleAgent, taskgen::SolverMode::SplitDishes}) {
        const auto solved = taskgen::solve_greedy(b, mode);
        const RunRecord r = execute(b, solved.plan);
        REQUIRE(r.success);
        CHECK(r.oct <= b->t_max);
        std::vector<Ticks> work(r.per_agent.size(), 0);
        std::vector<int> dist(r.per_agent.size(), 0);
        std::vector<Ticks> started(r.per_agent.size(), 0);
        Ticks last_completion = 0;
        Ticks prev_clock = 0;
        for (const Event& e : r.events) {
          CHECK(e.clock >= prev_clock);
          prev_clock = e.clock;
          if (e.outcome == Outcome::Started) started[e.agent] = e.clock;
          if (e.outcome != Outcome::Completed) continue;
          last_completion = std::max(last_completion, e.clock);
          if (std::holds_alternative<Wait>(e.action) || std::holds_alternative<Finish>(e.action)) continue;
          work[e.agent] += e.clock - started[e.agent];
        }
        for (std::size_t a = 0; a < r.per_agent.size(); ++a) CHECK(work[a] == r.per_agent[a].work_time);
        CHECK(r.oct >= last_completion - 0);
        CHECK(r.served.size() == b->orders.dishes.size());
      }
    }
}

TEST_CASE("ingredients only enter the world through dispensers") {
  auto b = std::make_shared<const world::TaskBundle>(taskgen::assemble_bundle("pasta", 2, 2, 4));
  const auto solved = taskgen::solve_greedy(b, taskgen::SolverMode::SplitDishes);
  Simulation s(b);
  std::vector<std::size_t> cursor(s.agent_count(), 0);
  int served_ingredients = 0;
  std::size_t served_seen = 0;
  while (s.status() == RunStatus::Running && !s.orders_complete()) {
    for (std::size_t a = 0; a < s.agent_count(); ++a)
      while (s.idle(a) && cursor[a] < solved.plan.per_agent[a].size())
        s.start(a, solved.plan.per_agent[a][cursor[a]++]);
    const auto next = s.next_event_time();
    if (!next) break;
    s.advance_to(*next);
    for (; served_seen < s.state().served.size(); ++served_seen)
      served_ingredients += static_cast<int>(b->find_recipe(s.state().served[served_seen].dish)->chains.size());
    CHECK(ingredients_in_world(s) + served_ingredients == s.dispensed());
    for (const auto& ag : s.state().agents)
      if (ag.held) CHECK(ag.held->contents.size() <= 1 + 4);  // one item in hand; plates hold at most a dish
  }
  CHECK(s.orders_complete());
}

TEST_CASE("interactive: waits, dispensers, rejections and legal actions") {
  const auto b = fixture::kitchen({"salad_basic"});
  InteractiveRun run(b);
  CHECK(run.awaiting_input());

  SUBCASE("Wait advances the clock only") {
    const json before = to_json(run.state(), run.sim());
    run.step(0, Wait{5});
    CHECK(run.state().clock == 5);
    json after = to_json(run.state(), run.sim());
    CHECK(after["agents"][0]["busy_until"] == 5);
    after["clock"] = before["clock"];
    after["agents"][0]["busy_until"] = before["agents"][0]["busy_until"];
    CHECK(after == before);
  }
  SUBCASE("dispenser gives one raw ingredient") {
    const Event ev = run.step(0, Interact{"lettuce_dispenser"});
    CHECK(ev.outcome != Outcome::Rejected);
    REQUIRE(run.state().agents[0].held);
    CHECK(run.state().agents[0].held->ingredient == "lettuce");
    CHECK(run.state().agents[0].held->food == world::FoodState::Raw);
  }
  SUBCASE("rejections leave state and clock untouched and are not fatal") {
    run.step(0, Wait{2});
    const json before = to_json(run.state(), run.sim());
    const Event ev = run.step(0, MoveTo{{3, 0}});
    CHECK(ev.outcome == Outcome::Rejected);
    CHECK(to_json(run.state(), run.sim()) == before);
    CHECK_FALSE(run.over());
  }
  SUBCASE("MoveTo outside the grid") {
    // Valid maps have one connected floor, so unreachable floor cannot occur; off-grid targets are refused.
    CHECK(run.step(0, MoveTo{{9, 9}}).reason == "invalid-target");
  }
  SUBCASE("legal actions: open floor, holding, sink with a dirty plate") {
    InteractiveRun three(fixture::kitchen({"salad_basic"}, 3));
    // agent3 stands at (3,1): window above, dirty return below; with empty hands neither accepts anything.
    LegalActions la = legal_actions(three.sim(), 2);
    for (const Action& a : la.actions)
      CHECK((std::holds_alternative<Wait>(a) || std::holds_alternative<Finish>(a)));
    CHECK(la.reachable.size() == 7);

    run.step(0, Interact{"lettuce_dispenser"});
    la = legal_actions(run.sim(), 0);
    CHECK(std::find(la.actions.begin(), la.actions.end(), Action{Interact{"lettuce_dispenser"}}) == la.actions.end());
    // Soundness: every listed action is accepted.
    for (const Action& a : la.actions) CHECK(run.sim().check(0, a).outcome != Outcome::Rejected);
  }
  CHECK_THROWS_AS(legal_actions(run.sim(), 7), std::out_of_range);
}

TEST_CASE("interactive sink wash appears in legal actions") {
  const auto b = fixture::kitchen({"salad_basic", "salad_basic"});
  InteractiveRun run(b);
  for (const Action& a : golden_steps())
    if (!std::holds_alternative<Finish>(a)) REQUIRE(run.step(0, a).outcome != Outcome::Rejected);
  run.step(0, Wait{b->constants.dirty_plate_return});
  REQUIRE(run.step(0, Interact{"dirty_plate_return"}).outcome != Outcome::Rejected);
  REQUIRE(run.step(0, MoveTo{{2, 1}}).outcome != Outcome::Rejected);
  const LegalActions la = legal_actions(run.sim(), 0);
  CHECK(std::find(la.actions.begin(), la.actions.end(), Action{Process{"sink"}}) != la.actions.end());
}

TEST_CASE("interactive and batch agree on the same action sequence") {
  const auto b = fixture::kitchen({"salad_basic"});
  InteractiveRun run(b);
  for (const Action& a : golden_steps()) run.step(0, a);
  REQUIRE(run.over());
  const RunRecord live = run.record("human");
  RunRecord batch = execute(b, plan_of(kGoldenSalad));
  CHECK(live.success);
  CHECK(live.oct == batch.oct);
  CHECK(live.per_agent == batch.per_agent);
  CHECK(live.served == batch.served);
  CHECK(live.controller == "human");
}

TEST_CASE("scripted co-agents run on their own and refuse commands") {
  const auto b = fixture::kitchen({"salad_basic"}, 2);
  InteractiveRun run(b, {Controller::Human, Controller::Scripted}, {{}, {Wait{3}, Finish{}}});
  const Event ev = run.step(1, Wait{1});
  CHECK(ev.outcome == Outcome::Rejected);
  CHECK(ev.reason == "agent-scripted");
  run.step(0, Wait{4});
  CHECK(run.sim().finished(1));
}

TEST_CASE("action JSON is a closed set") {
  CHECK_THROWS_AS(action_from_json(json::parse(R"({"action": "Teleport", "target": [1, 1]})")), PlanError);
  CHECK_THROWS_AS(action_from_json(json::parse(R"({"action": "MoveTo"})")), PlanError);
  CHECK_THROWS_AS(action_from_json(json::parse(R"({"action": "Wait", "duration": "5"})")), PlanError);
  CHECK_THROWS_AS(plan_from_json(json::parse(R"({"plan": {"chef": []}})")), PlanError);
  for (const Action& a : {Action{MoveTo{{1, 2}}}, Action{Interact{"x"}}, Action{Process{"y"}}, Action{Wait{3}},
                          Action{Finish{}}})
    CHECK(action_from_json(to_json(a)) == a);
  const Plan p = plan_of(kGoldenSalad);
  CHECK(plan_from_json(to_json(p)) == p);
}

TEST_CASE("run records round-trip through JSON") {
  const RunRecord r = execute(fixture::kitchen({"salad_basic"}), plan_of(kGoldenSalad));
  CHECK(run_record_from_json(to_json(r)) == r);
  CHECK_THROWS(run_record_from_json(json::parse(R"({"success": true})")));
}
