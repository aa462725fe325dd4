#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "racetrack/branching_cost.hpp"
#include "racetrack/branching_trajectory.hpp"
#include "racetrack/json_io.hpp"

using namespace racetrack;

TEST_CASE("config encoding") {
  Config c({1, 2}, {3, -4});
  json j = c;
  CHECK(j.dump() == R"({"p":[1,2],"v":[3,-4]})");
  CHECK(j.get<Config>() == c);
}

TEST_CASE("compact trajectory encoding") {
  CompactTrajectory ct;
  ct.start_x = 0;
  ct.start_v = 6;
  ct.append(Action::decel, 3);
  ct.append(Action::hold, 1);
  ct.append(Action::accel, 2);
  json j = ct;
  CHECK(j["segments"].dump() == R"([["-",3],["0",1],["+",2]])");
  CompactTrajectory back = j.get<CompactTrajectory>();
  CHECK(back.start_x == 0);
  CHECK(back.start_v == 6);
  CHECK(back.segments == ct.segments);
}

TEST_CASE("multi-interval encoding") {
  MultiInterval m;
  m.add({4, 6});
  m.add_tail(16);
  json j = m;
  CHECK(j.dump() == R"({"bounded":[[4,6]],"tail":16})");
  CHECK(j.get<MultiInterval>() == m);

  MultiInterval none;
  none.add({1, 2});
  json j2 = none;
  CHECK_FALSE(j2.contains("tail"));
  CHECK(j2.get<MultiInterval>() == none);
}

TEST_CASE("instance encoding") {
  Instance inst(2, {{0, 0}, {7, 1}}, false);
  json j = inst;
  CHECK(j["d"] == 2);
  CHECK(j["points"].dump() == "[[0,0],[7,1]]");
  CHECK(j["tour"] == false);
  Instance back = j.get<Instance>();
  CHECK(back.points == inst.points);
  CHECK(back.d == inst.d);
  CHECK(back.tour == inst.tour);

  // tour defaults to false when missing
  json j3 = {{"d", 1}, {"points", {{0}, {4}}}};
  CHECK_FALSE(j3.get<Instance>().tour);
}

TEST_CASE("round trips on random values") {
  std::mt19937_64 rng(61);
  auto rnd = [&](i64 lo, i64 hi) {
    return lo + static_cast<i64>(rng() % static_cast<u64>(hi - lo + 1));
  };
  for (int it = 0; it < 300; ++it) {
    Config a = config1(rnd(-15, 15), rnd(-4, 4));
    Config b = config1(rnd(-15, 15), rnd(-4, 4));

    // Feasible sets survive the trip exactly.
    MultiInterval m = feasible_lengths_1d(a, b);
    CHECK(json(m).get<MultiInterval>() == m);

    // Constructed compact controls survive and still expand identically.
    CompactTrajectory ct = construct_1d(a, b, m.min());
    CompactTrajectory back = json(ct).get<CompactTrajectory>();
    CHECK(back.start_x == ct.start_x);
    CHECK(back.start_v == ct.start_v);
    CHECK(back.segments == ct.segments);
  }
}
