#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "racetrack/instances.hpp"
#include "racetrack/multipoint.hpp"
#include "racetrack/oracle.hpp"

using namespace racetrack;

namespace {

// Greedy in-order visit check over an explicit trajectory.
bool visits_in_order(const Trajectory& t, const std::vector<Vec>& cities) {
  std::size_t next = 0;
  for (const auto& c : t.configs) {
    i64 prev = -1;
    while (next < cities.size() && visits(c, cities[next])) {
      i64 d2 = dist2_from_tail(c, cities[next]);
      if (prev >= 0 && d2 <= prev) break;
      prev = d2;
      ++next;
    }
  }
  return next == cities.size();
}

i64 rnd_in(std::mt19937_64& rng, i64 lo, i64 hi) {
  return lo + static_cast<i64>(rng() % static_cast<u64>(hi - lo + 1));
}

}  // namespace

TEST_CASE("candidate_configs") {
  SECTION("zero speed cap keeps only the resting configuration") {
    CandidateSet s = candidate_configs({7, -2}, 0, 2);
    REQUIRE(s.configs.size() == 1);
    CHECK(s.configs[0] == Config({7, -2}, {0, 0}));
  }
  SECTION("1D city at the origin with cap 1") {
    CandidateSet s = candidate_configs({0}, 1, 1);
    std::vector<Config> expect = {Config({-1}, {-1}), Config({0}, {-1}),
                                  Config({0}, {0}), Config({0}, {1}),
                                  Config({1}, {1})};
    CHECK(s.configs == expect);
  }
  SECTION("matches exhaustive enumeration in 2D") {
    for (i64 smax = 0; smax <= 3; ++smax) {
      Vec x{2, -1};
      CandidateSet s = candidate_configs(x, smax, 2);
      std::set<std::pair<Vec, Vec>> got;
      for (const auto& c : s.configs) got.insert({c.p, c.v});
      CHECK(got.size() == s.configs.size());
      std::set<std::pair<Vec, Vec>> expect;
      for (i64 px = x[0] - smax; px <= x[0] + smax; ++px)
        for (i64 py = x[1] - smax; py <= x[1] + smax; ++py)
          for (i64 vx = -smax; vx <= smax; ++vx)
            for (i64 vy = -smax; vy <= smax; ++vy) {
              Config c({px, py}, {vx, vy});
              if (visits(c, x)) expect.insert({c.p, c.v});
            }
      CHECK(got == expect);
    }
  }
  SECTION("every candidate visits the city") {
    CandidateSet s = candidate_configs({3, 4, 5}, 2, 3);
    for (const auto& c : s.configs) CHECK(visits(c, Vec{3, 4, 5}));
  }
}

TEST_CASE("transition_cost reuse rules") {
  // (2,1) sweeps positions 1..2; reusing it for cities 1 then 2 is free,
  // the reverse order forces a positive loop.
  Config c({2}, {1});
  CHECK(transition_cost(c, c, Vec{1}, Vec{2}) == 0);
  i64 loop = transition_cost(c, c, Vec{2}, Vec{1});
  CHECK(loop >= 1);
  CHECK(loop == branching_cost_fast(c, c, 1));
  // Distinct configurations take the plain branching cost.
  Config d({4}, {1});
  CHECK(transition_cost(c, d, Vec{2}, Vec{4}) == branching_cost(c, d));
}

TEST_CASE("dp_solve golden") {
  SECTION("single city") {
    Instance inst(1, {{5}});
    auto sets = std::vector<CandidateSet>{
        CandidateSet{0, {Config({5}, {0})}}};
    DpResult r = dp_solve(inst, sets);
    CHECK(r.cost == 0);
    REQUIRE(r.visiting.size() == 1);
    CHECK(r.visiting[0] == Config({5}, {0}));
  }
  SECTION("two cities at distance 4") {
    Instance inst(1, {{0}, {4}});
    std::vector<CandidateSet> sets = {CandidateSet{0, {Config({0}, {0})}},
                                      CandidateSet{1, {Config({4}, {0})}}};
    DpResult r = dp_solve(inst, sets);
    CHECK(r.cost == 4);
  }
  SECTION("empty candidate set raises") {
    Instance inst(1, {{0}, {4}});
    std::vector<CandidateSet> sets = {CandidateSet{0, {Config({0}, {0})}},
                                      CandidateSet{1, {}}};
    CHECK_THROWS_AS(dp_solve(inst, sets), infeasible_error);
  }
}

TEST_CASE("dp matches the multipoint search oracle") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 30; ++it) {
    i64 n = 2 + static_cast<i64>(rng() % 2);
    std::vector<Vec> pts;
    for (i64 i = 0; i < n; ++i)
      pts.push_back({rnd_in(rng, 0, 6), rnd_in(rng, 0, 6)});
    Instance inst(2, pts);

    auto sets = std::vector<CandidateSet>{};
    for (std::size_t i = 0; i < inst.n(); ++i) {
      if (i == 0 || i + 1 == inst.n())
        sets.push_back(CandidateSet{i, {Config(inst.points[i], {0, 0})}});
      else {
        auto cs = candidate_configs(inst.points[i], 5, 2);
        cs.city_index = i;
        sets.push_back(cs);
      }
    }
    DpResult dp = dp_solve(inst, sets);
    auto bounds = oracle::default_bounds(inst.points, 5);
    auto ref = oracle::bfs_multipoint(inst, bounds);
    REQUIRE(ref.has_value());
    CAPTURE(it, inst.points);
    CHECK(dp.cost == *ref);
  }
}

TEST_CASE("filter_candidates") {
  Instance inst = gen_random(6, 15, 2, 99);
  auto build = [&](i64 smax) {
    std::vector<CandidateSet> sets;
    for (std::size_t i = 0; i < inst.n(); ++i) {
      if (i == 0 || i + 1 == inst.n())
        sets.push_back(CandidateSet{i, {Config(inst.points[i], {0, 0})}});
      else {
        auto cs = candidate_configs(inst.points[i], smax, 2);
        cs.city_index = i;
        sets.push_back(cs);
      }
    }
    return sets;
  };

  SECTION("no bound, no removals") {
    auto sets = build(3);
    auto filtered = filter_candidates(sets, sets.front().configs[0],
                                      sets.back().configs[0], kNoUpperBound);
    for (std::size_t i = 0; i < sets.size(); ++i)
      CHECK(filtered[i].configs.size() == sets[i].configs.size());
  }

  SECTION("cost preserved under filtering") {
    std::mt19937_64 rng(55);
    for (int it = 0; it < 8; ++it) {
      Instance rnd_inst = gen_random(rnd_in(rng, 2, 6), 12, 2, 1000 + it);
      std::vector<CandidateSet> sets;
      for (std::size_t i = 0; i < rnd_inst.n(); ++i) {
        if (i == 0 || i + 1 == rnd_inst.n())
          sets.push_back(CandidateSet{i, {Config(rnd_inst.points[i], {0, 0})}});
        else {
          auto cs = candidate_configs(rnd_inst.points[i], 4, 2);
          cs.city_index = i;
          sets.push_back(cs);
        }
      }
      i64 before = dp_solve(rnd_inst, sets).cost;
      auto filtered = filter_candidates(sets, sets.front().configs[0],
                                        sets.back().configs[0], before);
      i64 after = dp_solve(rnd_inst, filtered).cost;
      CHECK(before == after);
    }
  }
}

TEST_CASE("warm start and speed bounds") {
  SECTION("warm start golden") {
    CHECK(warm_start_S(Instance(1, {{3}})) == 0);
    CHECK(warm_start_S(Instance(1, {{0}, {4}})) == 4);
  }
  SECTION("speed_bound") {
    CHECK(speed_bound(SpeedBoundPolicy::conservative(), 20, std::nullopt,
                      false) == 10);
    CHECK(speed_bound(SpeedBoundPolicy::conservative(), 20, std::nullopt,
                      true) == 5);
    CHECK(speed_bound(SpeedBoundPolicy::conjecture(), std::nullopt, 100,
                      false) == 10);
    CHECK(speed_bound(SpeedBoundPolicy::conjecture(), std::nullopt, 420,
                      false) == 21);
    CHECK(speed_bound(SpeedBoundPolicy::fixed(7), std::nullopt, std::nullopt,
                      false) == 7);
    CHECK_THROWS_AS(speed_bound(SpeedBoundPolicy::conservative(), std::nullopt,
                                std::nullopt, false),
                    config_error);
    CHECK_THROWS_AS(speed_bound(SpeedBoundPolicy::conjecture(), 5, std::nullopt,
                                false),
                    config_error);
  }
}

TEST_CASE("solve end to end") {
  SECTION("two cities across 24") {
    Instance inst(1, {{0}, {24}});
    SolveResult r = solve(inst, SpeedBoundPolicy::conservative());
    CHECK(r.cost == 10);
    CHECK(r.exact);
    CHECK(r.trajectory.length() == 10);
    CHECK(validate_trajectory(r.trajectory));
    CHECK(visits_in_order(r.trajectory, inst.points));
    CHECK(r.cost <= r.warm_start);
  }
  SECTION("single city") {
    Instance inst(2, {{3, 4}});
    SolveResult r = solve(inst, SpeedBoundPolicy::conservative());
    CHECK(r.cost == 0);
    CHECK(r.trajectory.length() == 0);
  }
  SECTION("random instances produce valid stitched trajectories") {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 10; ++it) {
      Instance inst = gen_random(rnd_in(rng, 2, 7), 20, 2, 5000 + it);
      SolveResult r = solve(inst, SpeedBoundPolicy::conservative());
      CHECK(validate_trajectory(r.trajectory));
      CHECK(r.trajectory.length() == r.cost);
      CHECK(visits_in_order(r.trajectory, inst.points));
      CHECK(r.cost <= r.warm_start);
      CHECK(r.trajectory.configs.front() ==
            Config(inst.points.front(), Vec(2, 0)));
      CHECK(r.trajectory.configs.back() ==
            Config(inst.points.back(), Vec(2, 0)));
      // Per-dimension compact encodings replay to the same path.
      Trajectory replay = assemble(r.compact);
      CHECK(replay.configs.size() == r.trajectory.configs.size());
      for (std::size_t i = 0; i < replay.configs.size(); ++i) {
        CHECK(replay.configs[i].p[0] == r.trajectory.configs[i].p[0]);
        CHECK(replay.configs[i].p[1] == r.trajectory.configs[i].p[1]);
      }
    }
  }
  SECTION("cost non-increasing in the fixed speed cap") {
    std::mt19937_64 rng(88);
    for (int it = 0; it < 6; ++it) {
      Instance inst = gen_random(rnd_in(rng, 3, 5), 12, 2, 9000 + it);
      i64 prev = -1;
      for (i64 smax = 1; smax <= 5; ++smax) {
        SolveResult r = solve(inst, SpeedBoundPolicy::fixed(smax));
        if (prev >= 0) CHECK(r.cost <= prev);
        prev = r.cost;
      }
    }
  }
}
