#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "racetrack/branching_cost.hpp"
#include "racetrack/oracle.hpp"

using namespace racetrack;

TEST_CASE("braking and acceleration distances") {
  CHECK(braking_distance(0) == 0);
  CHECK(braking_distance(1) == 0);
  CHECK(braking_distance(6) == 15);
  CHECK(braking_distance(-6) == 15);
  CHECK(accel_distance(0) == 0);
  CHECK(accel_distance(1) == 1);
  CHECK(accel_distance(5) == 15);
  CHECK(accel_distance(-5) == 15);
}

TEST_CASE("delta_min / delta_max golden values") {
  // From the 6 -> 5 example: the two curves around distance 24.
  CHECK(delta_min(6, 5, 1) == 5);
  CHECK(delta_max(6, 5, 1) == 5);
  CHECK(delta_min(6, 5, 6) == 24);
  CHECK(delta_min(6, 5, 16) == 24);
  CHECK(delta_max(6, 5, 3) == 18);   // 7+6+5
  CHECK(delta_max(6, 5, 4) == 25);   // 7+7+6+5
  CHECK(delta_max(6, 5, 2) == 11);   // 6+5
  CHECK(delta_min(6, 5, 2) == 10);   // 5+5
  CHECK(delta_min(6, 5, 5) == 21);   // 5+4+3+4+5
  CHECK(delta_max(6, 5, 5) == 33);   // 7+8+7+6+5

  CHECK_THROWS_AS(delta_min(6, 5, 0), domain_error);
  CHECK_THROWS_AS(delta_max(2, 5, 2), domain_error);
}

TEST_CASE("delta curves against exhaustive speed sequences") {
  // Enumerate all speed sequences of length t from s to s', take the
  // extreme distances, and compare with the closed forms.
  for (i64 s = 0; s <= 4; ++s)
    for (i64 sp = 0; sp <= 4; ++sp) {
      auto f = FeasibilityCurves::make(s, sp);
      for (i64 t = f.t_min; t <= 7; ++t) {
        i64 lo = 0, hi = 0;
        bool any = false;
        // DFS over sequences v_1..v_t with |v_i - v_{i-1}| <= 1, v_t = sp.
        struct Frame {
          i64 v, dist;
          int depth;
        };
        std::vector<Frame> stack{{s, 0, 0}};
        while (!stack.empty()) {
          Frame fr = stack.back();
          stack.pop_back();
          if (fr.depth == t) {
            if (fr.v == sp) {
              if (!any) {
                lo = hi = fr.dist;
                any = true;
              } else {
                lo = std::min(lo, fr.dist);
                hi = std::max(hi, fr.dist);
              }
            }
            continue;
          }
          for (i64 nv = fr.v - 1; nv <= fr.v + 1; ++nv) {
            if (std::llabs(nv - sp) > t - fr.depth - 1) continue;
            stack.push_back({nv, fr.dist + nv, fr.depth + 1});
          }
        }
        REQUIRE(any);
        CHECK(f.delta_min(t) == lo);
        CHECK(f.delta_max(t) == hi);
      }
    }
}

TEST_CASE("case4 intervals golden") {
  SECTION("two components around 24") {
    MultiInterval m = case4_intervals(6, 5, 24);
    REQUIRE(m.bounded().size() == 1);
    CHECK(m.bounded()[0] == Interval{4, 6});
    REQUIRE(m.tail());
    CHECK(*m.tail() == 16);
  }
  SECTION("already at target") {
    MultiInterval m = case4_intervals(0, 0, 0);
    CHECK(m.bounded().empty());
    CHECK(*m.tail() == 0);
  }
  SECTION("single-step window then long turn") {
    MultiInterval m = case4_intervals(3, 3, 3);
    REQUIRE(m.bounded().size() == 1);
    CHECK(m.bounded()[0] == Interval{1, 1});
    CHECK(*m.tail() == 11);
  }
  SECTION("domain errors") {
    CHECK_THROWS_AS(case4_intervals(-1, 0, 5), domain_error);
    CHECK_THROWS_AS(case4_intervals(0, 0, -2), domain_error);
  }
}

TEST_CASE("reduce") {
  SECTION("translation only") {
    Reduction r = reduce(7, 2, 31, 1);
    CHECK(r.tag == CaseTag::case4);
    CHECK(r.translate == 7);
    CHECK_FALSE(r.reflect);
    CHECK(r.shift() == 0);
    CHECK(r.core_s == 2);
    CHECK(r.core_s_prime == 1);
    CHECK(r.core_delta == 24);
  }
  SECTION("reflection") {
    Reduction r = reduce(0, -2, -10, -1);
    CHECK(r.tag == CaseTag::case4);
    CHECK(r.reflect);
    CHECK(r.core_s == 2);
    CHECK(r.core_s_prime == 1);
    CHECK(r.core_delta == 10);
  }
  SECTION("case 2 with left turn") {
    Reduction r = reduce(0, -2, 10, 3);
    CHECK(r.tag == CaseTag::case2);
    CHECK(r.prefix_steps == 2);
    CHECK(r.suffix_steps == 0);
    CHECK(r.core_s == 0);
    CHECK(r.core_s_prime == 3);
    CHECK(r.core_delta == 11);  // from the stop at -1 up to 10
  }
}

TEST_CASE("feasible_lengths_1d golden") {
  SECTION("rest to rest") {
    MultiInterval m = feasible_lengths_1d(config1(0, 0), config1(24, 0));
    CHECK(m.bounded().empty());
    CHECK(*m.tail() == 10);  // ceil(2 sqrt(24))
  }
  SECTION("the 6 -> 5 instance") {
    MultiInterval m = feasible_lengths_1d(config1(0, 6), config1(24, 5));
    REQUIRE(m.bounded().size() == 1);
    CHECK(m.bounded()[0] == Interval{4, 6});
    CHECK(*m.tail() == 16);
  }
  SECTION("identical configurations") {
    MultiInterval m = feasible_lengths_1d(config1(0, 0), config1(0, 0));
    CHECK(*m.tail() == 0);
  }
}

TEST_CASE("branching_cost golden") {
  SECTION("2D example, cost 5") {
    Config c({1, 2}, {1, 2});
    Config cp({12, 3}, {2, 1});
    CHECK(branching_cost(c, cp) == 5);
  }
  SECTION("2D example, cost 11") {
    Config c({1, 3}, {0, 3});
    Config cp({7, 6}, {0, 3});
    CHECK(branching_cost(c, cp) == 11);
    auto sets = per_dimension_lengths(c, cp);
    CHECK(sets[0].min() == 5);
    REQUIRE(sets[1].bounded().size() == 1);
    CHECK(sets[1].bounded()[0] == Interval{1, 1});
    CHECK(*sets[1].tail() == 11);
  }
  SECTION("identical configurations cost 0") {
    Config c({3, -1, 5}, {2, 0, -4});
    CHECK(branching_cost(c, c) == 0);
  }
}

TEST_CASE("1D oracle sweep, reduced box") {
  // Acceptance runs the full +-30 / +-6 box; this guards the formulas at
  // unit-test scale across every case-reduction path.
  const i64 X = 9, S = 4, T = 32;
  const i64 wander = S + T;
  oracle::SearchBounds bounds;
  bounds.pos_lo = {-(X + wander * T)};
  bounds.pos_hi = {X + wander * T};
  bounds.speed_cap = wander;
  for (i64 s = -S; s <= S; ++s) {
    std::vector<oracle::Reach1D> layers;
    layers.emplace_back(0, s, bounds.pos_lo[0], bounds.pos_hi[0],
                        bounds.speed_cap, T);
    for (i64 dx = -X; dx <= X; ++dx)
      for (i64 sp = -S; sp <= S; ++sp) {
        Feasible1D f = feasible_1d_core(0, s, dx, sp);
        for (i64 t = 0; t <= T; ++t) {
          bool closed_form = f.contains(t);
          bool searched = layers[0].contains(t, dx, sp);
          if (closed_form != searched) {
            CAPTURE(s, dx, sp, t, closed_form, searched);
            REQUIRE(closed_form == searched);
          }
        }
      }
  }
}

TEST_CASE("invariance and structure properties") {
  std::mt19937_64 rng(19);
  auto rnd = [&](i64 lo, i64 hi) {
    return lo + static_cast<i64>(rng() % static_cast<u64>(hi - lo + 1));
  };
  for (int it = 0; it < 2000; ++it) {
    i64 x = rnd(-25, 25), xp = rnd(-25, 25);
    i64 s = rnd(-6, 6), sp = rnd(-6, 6);
    MultiInterval base = feasible_lengths_1d(config1(x, s), config1(xp, sp));

    // Translation and reflection invariance.
    CHECK(base == feasible_lengths_1d(config1(0, s), config1(xp - x, sp)));
    CHECK(base == feasible_lengths_1d(config1(-x, -s), config1(-xp, -sp)));

    // At most two components, with an unbounded tail.
    CHECK(base.component_count() <= 2);
    CHECK(base.tail().has_value());

    // Sandwich: every feasible t in the reduced frame lies between the
    // curves.
    Reduction r = reduce(x, s, xp, sp);
    if (r.tag != CaseTag::case0) {
      auto f = FeasibilityCurves::make(r.core_s, r.core_s_prime);
      Feasible1D set = feasible_1d_core(x, s, xp, sp);
      for (i64 t = 0; t <= 40; ++t) {
        if (!set.contains(t)) continue;
        i64 tc = t - r.shift();
        REQUIRE(tc >= f.t_min);
        CHECK(f.delta_min(tc) <= r.core_delta);
        CHECK(f.delta_max(tc) >= r.core_delta);
      }
    }
  }
}

TEST_CASE("fast path agrees with the interval route") {
  std::mt19937_64 rng(23);
  auto rnd = [&](i64 lo, i64 hi) {
    return lo + static_cast<i64>(rng() % static_cast<u64>(hi - lo + 1));
  };
  for (int it = 0; it < 3000; ++it) {
    std::size_t d = 1 + rng() % 3;
    Vec p(d), v(d), pp(d), vp(d);
    for (std::size_t k = 0; k < d; ++k) {
      p[k] = rnd(-20, 20);
      pp[k] = rnd(-20, 20);
      v[k] = rnd(-5, 5);
      vp[k] = rnd(-5, 5);
    }
    Config a(p, v), b(pp, vp);
    CHECK(branching_cost_fast(a, b) == branching_cost(a, b));
  }
}
