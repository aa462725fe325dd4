#pragma once

#include <array>

#include "racetrack/compact.hpp"
#include "racetrack/intmath.hpp"
#include "racetrack/kinematics.hpp"
#include "racetrack/multi_interval.hpp"

namespace racetrack {

/// Minimum braking distance from speed s to full stop: |s|(|s|-1)/2.
inline i64 braking_distance(i64 s) {
  i64 a = std::llabs(s);
  return a * (a - 1) / 2;
}

/// Minimum acceleration distance from rest to speed s: |s|(|s|+1)/2.
inline i64 accel_distance(i64 s) {
  i64 a = std::llabs(s);
  return a * (a + 1) / 2;
}

/// The two quadratic envelopes bounding the distance coverable in t steps
/// between nonnegative start speed s and end speed s_prime.
struct FeasibilityCurves {
  i64 s = 0;
  i64 s_prime = 0;
  i64 two_alpha = 0;  // 2 * alpha with alpha = (s'+s+1)(s'-s)/2
  i64 t_min = 0;

  static FeasibilityCurves make(i64 s, i64 s_prime) {
    FeasibilityCurves f;
    f.s = s;
    f.s_prime = s_prime;
    f.two_alpha = (s_prime + s + 1) * (s_prime - s);
    f.t_min = std::llabs(s_prime - s);
    return f;
  }

  /// Minimum distance coverable in t steps (t >= t_min).
  i64 delta_min(i64 t) const {
    if (t < t_min) throw domain_error("delta_min: t below t_min");
    return ceil_div((3 * s - t + s_prime) * (t - s_prime + s) + 2 * two_alpha, 4);
  }

  /// Maximum distance coverable in t steps (t >= t_min).
  i64 delta_max(i64 t) const {
    if (t < t_min) throw domain_error("delta_max: t below t_min");
    return floor_div((3 * s_prime + t + s) * (t - s_prime + s) + 2 * two_alpha, 4);
  }

  i64 disc_min(i64 delta) const {
    return 2 * sq(s_prime) + 2 * sq(s) + 2 * s_prime - 2 * s - 4 * delta;
  }
  i64 disc_max(i64 delta) const {
    return 2 * sq(s_prime) + 2 * sq(s) - 2 * s_prime + 2 * s + 4 * delta;
  }
};

inline i64 delta_min(i64 s, i64 s_prime, i64 t) {
  return FeasibilityCurves::make(s, s_prime).delta_min(t);
}

inline i64 delta_max(i64 s, i64 s_prime, i64 t) {
  return FeasibilityCurves::make(s, s_prime).delta_max(t);
}

/// Feasible 1D lengths in fixed-size form: at most one bounded component
/// plus the always-present unbounded tail.
struct Feasible1D {
  i64 lo = 0;
  i64 hi = -1;
  i64 tail = 0;

  bool has_bounded() const { return lo <= hi; }
  bool contains(i64 t) const {
    return t >= tail || (lo <= t && t <= hi);
  }
  i64 min() const { return has_bounded() ? lo : tail; }
  /// Smallest feasible t' >= t.
  i64 next(i64 t) const {
    if (has_bounded() && t <= hi) return std::max(t, lo);
    return std::max(t, tail);
  }
  Feasible1D shifted(i64 k) const {
    Feasible1D r = *this;
    if (r.has_bounded()) {
      r.lo += k;
      r.hi += k;
    }
    r.tail += k;
    return r;
  }
  MultiInterval to_multi_interval() const {
    MultiInterval m = MultiInterval::from_tail(tail);
    if (has_bounded()) m.add({lo, hi});
    return m;
  }
};

namespace detail {

// Root guesses from the quadratic formulas land within a step of the
// integer threshold; a short walk against the rounded curve pins it down.
inline i64 first_t_with_max_at_least(const FeasibilityCurves& f, i64 delta,
                                     i64 guess) {
  i64 t = std::max(guess, f.t_min);
  while (f.delta_max(t) < delta) ++t;
  while (t > f.t_min && f.delta_max(t - 1) >= delta) --t;
  return t;
}

inline i64 first_t_with_min_at_most(const FeasibilityCurves& f, i64 delta,
                                    i64 floor_t, i64 guess) {
  i64 t = std::max(guess, floor_t);
  while (f.delta_min(t) > delta) ++t;
  while (t > floor_t && f.delta_min(t - 1) <= delta) --t;
  return t;
}

inline i64 last_t_with_min_at_most(const FeasibilityCurves& f, i64 delta,
                                   i64 lo_t, i64 hi_t, i64 guess) {
  i64 t = std::min(std::max(guess, lo_t), hi_t);
  while (t < hi_t && f.delta_min(t + 1) <= delta) ++t;
  while (t > lo_t && f.delta_min(t) > delta) --t;
  return t;
}

}  // namespace detail

/// Feasible lengths for the normalized instance (0, s) -> (delta, s'),
/// s >= 0, s' >= 0, delta >= 0. Type A gives [t1, inf); type B gives
/// [t1, t2] u [t3, inf); types C and D give [t3, inf).
inline Feasible1D case4_core(i64 s, i64 s_prime, i64 delta) {
  if (s < 0 || s_prime < 0 || delta < 0)
    throw domain_error("case4: requires s, s', delta >= 0");
  const auto f = FeasibilityCurves::make(s, s_prime);
  const i64 vertex = s + s_prime;

  i64 t1 = detail::first_t_with_max_at_least(
      f, delta, -vertex + ceil_sqrt(f.disc_max(delta)));

  Feasible1D out;
  if (delta >= f.delta_min(vertex)) {  // type A
    out.tail = t1;
    return out;
  }
  const i64 dmin = f.disc_min(delta);  // > 0 here: delta below the peak
  i64 t3 = detail::first_t_with_min_at_most(f, delta, vertex,
                                            vertex + isqrt(dmin));
  if (delta < f.delta_min(f.t_min)) {  // type D
    out.tail = t3;
    return out;
  }
  i64 t2 = detail::last_t_with_min_at_most(f, delta, f.t_min, vertex,
                                           vertex - ceil_sqrt(dmin));
  if (t2 >= t1) {  // type B
    out.lo = t1;
    out.hi = t2;
    out.tail = t3;
    return out;
  }
  out.tail = t3;  // type C
  return out;
}

inline MultiInterval case4_intervals(i64 s, i64 s_prime, i64 delta) {
  return case4_core(s, s_prime, delta).to_multi_interval();
}

enum class CaseTag { case0, case1, case2, case3, case4 };

/// Record of the reductions mapping a general 1D instance onto a
/// normalized core: translation, reflection, and the monotone prefix /
/// suffix runs of the turn-point decomposition.
struct Reduction {
  CaseTag tag = CaseTag::case4;
  i64 translate = 0;  // original start position, subtracted first
  bool reflect = false;

  Action prefix_action = Action::hold;
  i64 prefix_steps = 0;
  Action suffix_action = Action::hold;
  i64 suffix_steps = 0;
  bool core_reflect = false;  // core solved on the mirrored sub-instance

  i64 core_s = 0;
  i64 core_s_prime = 0;
  i64 core_delta = 0;

  i64 shift() const { return prefix_steps + suffix_steps; }
};

inline Reduction reduce(i64 x, i64 s, i64 x_prime, i64 s_prime) {
  Reduction r;
  r.translate = x;
  i64 delta = x_prime - x;
  i64 a = s, b = s_prime;
  if (delta < 0 || (delta == 0 && (a < 0 || (a == 0 && b < 0)))) {
    r.reflect = true;
    delta = -delta;
    a = -a;
    b = -b;
  }
  if (a == 0 && b == 0) {
    r.tag = CaseTag::case0;
    r.core_delta = delta;
    return r;
  }
  if (a >= 0 && b >= 0) {
    r.tag = CaseTag::case4;
    r.core_s = a;
    r.core_s_prime = b;
    r.core_delta = delta;
    return r;
  }
  if (a <= 0 && b <= 0) {
    r.tag = CaseTag::case1;
    i64 p1 = -braking_distance(a);
    i64 p2 = delta + accel_distance(b);
    r.prefix_action = Action::accel;
    r.prefix_steps = -a;
    r.suffix_action = Action::decel;
    r.suffix_steps = -b;
    r.core_delta = p2 - p1;
    return r;
  }
  if (a < 0 && b > 0) {
    r.tag = CaseTag::case2;
    i64 p1 = -braking_distance(a);
    i64 p2 = delta - accel_distance(b);
    if (p1 <= p2) {
      r.prefix_action = Action::accel;
      r.prefix_steps = -a;
      r.core_s_prime = b;
      r.core_delta = delta - p1;
    } else {
      r.suffix_action = Action::accel;
      r.suffix_steps = b;
      r.core_reflect = true;
      r.core_s = -a;
      r.core_delta = -p2;
    }
    return r;
  }
  // a > 0 && b < 0
  r.tag = CaseTag::case3;
  i64 p1 = braking_distance(a);
  i64 p2 = delta + accel_distance(b);
  if (p1 >= p2) {
    r.prefix_action = Action::decel;
    r.prefix_steps = a;
    r.core_reflect = true;
    r.core_s_prime = -b;
    r.core_delta = p1 - delta;
  } else {
    r.suffix_action = Action::decel;
    r.suffix_steps = -b;
    r.core_s = a;
    r.core_delta = p2;
  }
  return r;
}

inline Reduction reduce(const Config& c, const Config& c_prime) {
  if (c.dim() != 1 || c_prime.dim() != 1)
    throw invalid_input_error("reduce: expects 1D configurations");
  return reduce(c.p[0], c.v[0], c_prime.p[0], c_prime.v[0]);
}

/// All feasible lengths of a trajectory from (x, s) to (x', s').
inline Feasible1D feasible_1d_core(i64 x, i64 s, i64 x_prime, i64 s_prime) {
  Reduction r = reduce(x, s, x_prime, s_prime);
  Feasible1D core;
  if (r.tag == CaseTag::case0) {
    core.tail = ceil_sqrt(4 * r.core_delta);  // exactly ceil(2 sqrt(delta))
  } else {
    core = case4_core(r.core_s, r.core_s_prime, r.core_delta);
  }
  return core.shifted(r.shift());
}

inline MultiInterval feasible_lengths_1d(const Config& c, const Config& c_prime) {
  if (c.dim() != 1 || c_prime.dim() != 1)
    throw invalid_input_error("feasible_lengths_1d: expects 1D configurations");
  return feasible_1d_core(c.p[0], c.v[0], c_prime.p[0], c_prime.v[0])
      .to_multi_interval();
}

/// Per-dimension feasible-length sets of a d-dimensional instance.
inline std::vector<MultiInterval> per_dimension_lengths(const Config& c,
                                                        const Config& c_prime) {
  require_same_dim(c.p, c_prime.p, "branching_cost");
  std::vector<MultiInterval> sets;
  sets.reserve(c.dim());
  for (std::size_t k = 0; k < c.dim(); ++k)
    sets.push_back(
        feasible_1d_core(c.p[k], c.v[k], c_prime.p[k], c_prime.v[k])
            .to_multi_interval());
  return sets;
}

/// Length of a shortest trajectory from c to c': the minimum of the
/// intersection of the per-dimension feasible sets.
inline i64 branching_cost(const Config& c, const Config& c_prime) {
  auto sets = per_dimension_lengths(c, c_prime);
  return MultiInterval::intersect(sets).min();
}

/// Allocation-free variant of branching_cost for hot loops; smallest t
/// contained in every per-dimension set, found by fixpoint advancing.
inline i64 branching_cost_fast(const Config& c, const Config& c_prime,
                               i64 at_least = 0) {
  const std::size_t d = c.dim();
  i64 t = at_least;
  if (d == 1) {
    return feasible_1d_core(c.p[0], c.v[0], c_prime.p[0], c_prime.v[0]).next(t);
  }
  constexpr std::size_t kMaxStackDims = 8;
  std::array<Feasible1D, kMaxStackDims> buf;
  std::vector<Feasible1D> heap;
  Feasible1D* feas = buf.data();
  if (d > kMaxStackDims) {
    heap.resize(d);
    feas = heap.data();
  }
  for (std::size_t k = 0; k < d; ++k) {
    feas[k] = feasible_1d_core(c.p[k], c.v[k], c_prime.p[k], c_prime.v[k]);
    t = std::max(t, feas[k].min());
  }
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t k = 0; k < d; ++k) {
      i64 nt = feas[k].next(t);
      if (nt != t) {
        t = nt;
        moved = true;
      }
    }
  }
  return t;
}

}  // namespace racetrack
