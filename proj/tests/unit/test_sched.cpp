#include <doctest.h>

#include "paracook/sched/generator.hpp"
#include "paracook/sched/solver.hpp"
#include "support/brute_force.hpp"

using namespace paracook;
using namespace paracook::sched;

namespace {

AbstractInstance make(std::vector<Ticks> t, std::vector<Edge> edges, int m, Ticks setup = 0) {
  AbstractInstance inst;
  for (std::size_t i = 0; i < t.size(); ++i) inst.ids.push_back(static_cast<int>(i));
  inst.t = std::move(t);
  inst.edges = std::move(edges);
  inst.m = m;
  inst.setup = setup;
  return inst;
}

}  // namespace

TEST_CASE("validation verdicts") {
  const auto chain = make({1, 1}, {{0, 1, 0}}, 2);
  CHECK(validate(chain, Schedule{{0, 0}, {0, 1}, 2}).valid);
  const auto early = validate(chain, Schedule{{0, 1}, {0, 0}, 1});
  CHECK_FALSE(early.valid);
  CHECK(early.reason == "precedence");

  const auto pair = make({2, 2}, {}, 2);
  CHECK(validate(pair, Schedule{{0, 0}, {0, 1}, 3}).reason == "agent-overlap");
  CHECK(validate(pair, Schedule{{0, 1}, {0, 0}, 2}).valid);
  CHECK(validate(pair, Schedule{{0, 2}, {0, 0}, 2}).reason == "bad-agent");
  CHECK(validate(pair, Schedule{{0, 1}, {0, -1}, 2}).reason == "negative-start");
  CHECK(validate(pair, Schedule{{0, 1}, {0, 0}, 5}).reason == "makespan-mismatch");
  CHECK(validate(pair, Schedule{{0}, {0}, 2}).reason == "incomplete");

  const auto delayed = make({1, 1}, {{0, 1, 3}}, 1);
  CHECK_FALSE(validate(delayed, Schedule{{0, 0}, {0, 2}, 3}).valid);
  CHECK(validate(delayed, Schedule{{0, 0}, {0, 4}, 5}).valid);

  const auto with_setup = make({1, 1}, {}, 1, 2);
  CHECK(validate(with_setup, Schedule{{0, 0}, {0, 1}, 2}).reason == "agent-overlap");
  CHECK(validate(with_setup, Schedule{{0, 0}, {0, 3}, 4}).valid);
}

TEST_CASE("instance checks") {
  CHECK_THROWS_AS(check_instance(make({1, 1}, {{0, 1, 0}, {1, 0, 0}}, 1)), InstanceError);
  CHECK_THROWS_AS(check_instance(make({0}, {}, 1)), InstanceError);
  CHECK_THROWS_AS(check_instance(make({1, 1}, {{0, 1, -1}}, 1)), InstanceError);
  CHECK_THROWS_AS(check_instance(make({1}, {{0, 3, 0}}, 1)), InstanceError);
  CHECK_THROWS_AS(check_instance(make({1}, {}, 0)), InstanceError);
}

TEST_CASE("exact solver: textbook cases") {
  for (int m = 1; m <= 3; ++m) CHECK(optimal_makespan(make({2, 3, 4}, {{0, 1, 0}, {1, 2, 0}}, m)).makespan == 9);
  CHECK(optimal_makespan(make({5, 5, 5, 5}, {}, 2)).makespan == 10);
  CHECK(optimal_makespan(make({3, 3, 2, 2, 2}, {}, 2)).makespan == 6);
  // Delays can be absorbed by doing other work.
  CHECK(optimal_makespan(make({1, 1, 4}, {{0, 1, 4}}, 1)).makespan == 6);
}

TEST_CASE("exact solver matches brute-force enumeration") {
  const Profile p = profile_by_name("small-v1");
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    AbstractInstance inst = generate_instance(p, seed);
    if (seed % 4 == 0) inst.setup = 1;
    const SolveResult r = optimal_makespan(inst);
    REQUIRE(r.optimal);
    CHECK_MESSAGE(r.makespan == oracle::brute_force_makespan(inst), "seed ", seed);
    CHECK(validate(inst, r.schedule).valid);
    CHECK(r.schedule.makespan == r.makespan);
    CHECK(critical_path(inst) <= r.makespan);
    CHECK(r.makespan <= serial_bound(inst));
  }
}

TEST_CASE("an extra agent never hurts") {
  const Profile p = profile_by_name("small-v1");
  for (std::uint64_t seed = 200; seed < 260; ++seed) {
    AbstractInstance inst = generate_instance(p, seed);
    const Ticks at_m = optimal_makespan(inst).makespan;
    inst.m += 1;
    CHECK(optimal_makespan(inst).makespan <= at_m);
  }
}

TEST_CASE("default profile instances solve, validate and respect the sandwich") {
  const Profile p = profile_by_name("default-v1");
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const AbstractInstance inst = generate_instance(p, seed);
    CHECK(inst.n() >= 8);
    CHECK(inst.n() <= 16);
    CHECK(inst.m >= 2);
    CHECK(inst.m <= 3);
    const SolveResult r = optimal_makespan(inst, 30.0);
    CHECK(validate(inst, r.schedule).valid);
    CHECK(critical_path(inst) <= r.makespan);
    CHECK(r.makespan <= serial_bound(inst));
    const Schedule greedy = list_schedule(inst);
    CHECK(validate(inst, greedy).valid);
    CHECK(r.makespan <= greedy.makespan);
  }
}

TEST_CASE("a zero budget still returns a valid, possibly unproven schedule") {
  const AbstractInstance inst = generate_instance(profile_by_name("default-v1"), 16);
  const SolveResult r = optimal_makespan(inst, 0.0);
  CHECK(validate(inst, r.schedule).valid);
  CHECK(r.makespan >= optimal_makespan(inst).makespan);
}

TEST_CASE("plan scoring") {
  const auto inst = make({5, 5, 5, 5}, {}, 2);
  const SolveResult opt = optimal_makespan(inst);
  const PlanScore best = score_plan(inst, opt.schedule, opt.makespan);
  CHECK(best.valid);
  CHECK(best.noct == 1.0);
  CHECK(best.poct == 10.0);

  const PlanScore bad = score_plan(inst, Schedule{{0, 0, 0, 0}, {0, 0, 0, 0}, 5}, 100);
  CHECK_FALSE(bad.valid);
  CHECK_FALSE(bad.noct.has_value());
  CHECK(bad.poct == 120.0);

  const auto slow = make({11}, {}, 1);
  CHECK(*score_plan(slow, Schedule{{0}, {0}, 11}, 10).noct == doctest::Approx(1.10));
  CHECK_THROWS_AS(score_plan(inst, opt.schedule, 0), std::invalid_argument);
}

TEST_CASE("schedules from agent sequences") {
  const auto inst = make({2, 3, 1}, {{0, 2, 1}}, 2);
  const auto s = schedule_from_sequences(inst, {{0, 2}, {1}});
  REQUIRE(s);
  CHECK(s->start == std::vector<Ticks>{0, 0, 3});
  CHECK(s->makespan == 4);
  CHECK(validate(inst, *s).valid);
  CHECK_FALSE(schedule_from_sequences(inst, {{2, 0}, {1}}).has_value());  // deadlock against the edge
}

TEST_CASE("generator: density extremes and acyclicity") {
  Profile none = profile_by_name("default-v1");
  none.density = 0.0;
  for (std::uint64_t s = 0; s < 20; ++s) CHECK(generate_instance(none, s).edges.empty());

  Profile chain = profile_by_name("small-v1");
  chain.density = 1.0;
  chain.layers_min = chain.layers_max = 64;  // clamped to n: one task per layer
  for (std::uint64_t s = 0; s < 20; ++s) {
    const AbstractInstance inst = generate_instance(chain, s);
    CHECK(optimal_makespan(inst).makespan == critical_path(inst));
  }

  const Profile p = profile_by_name("default-v1");
  for (std::uint64_t s = 0; s < 500; ++s) {
    const AbstractInstance inst = generate_instance(p, s);
    CHECK(topological_order(inst.n(), inst.edges).has_value());
    for (const Edge& e : inst.edges) CHECK(e.d >= 0);
    for (Ticks t : inst.t) CHECK(t > 0);
  }
  CHECK(generate_instance(p, 3) == generate_instance(p, 3));
  CHECK_THROWS(profile_by_name("nope"));
}

TEST_CASE("instance and schedule JSON") {
  const auto j = nlohmann::json::parse(R"({"tasks": [{"id": "a", "t": 2}, {"id": "b", "t": 1}],
                                           "edges": [{"u": "a", "v": "b", "d": 3}], "agents": 2})");
  const AbstractInstance inst = instance_from_json(j);
  CHECK(inst.n() == 2);
  CHECK(inst.edges.at(0) == Edge{0, 1, 3});
  CHECK(instance_from_json(to_json(inst)) == inst);
  const SolveResult r = optimal_makespan(inst);
  CHECK(r.makespan == 6);
  const auto sj = to_json(r.schedule, inst);
  CHECK(sj.at("makespan") == 6);
  CHECK(sj.at("start").at("b") == 5);
  CHECK(schedule_from_json(sj, inst) == r.schedule);
  CHECK_THROWS(instance_from_json(nlohmann::json::parse(R"({"tasks": [{"id": "a", "t": 1}], "edges": [{"u": "a", "v": "z"}], "agents": 1})")));
}
