#pragma once

#include "racetrack/intmath.hpp"
#include "racetrack/multipoint_types.hpp"
#include "racetrack/rational.hpp"

namespace racetrack {

/// splitmix64; the fixed mixing constants make instances bit-reproducible
/// across platforms and languages.
struct SplitMix64 {
  u64 state;

  explicit SplitMix64(u64 seed) : state(seed) {}

  u64 next() {
    u64 z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform draw from {0, ..., bound} by rejection sampling.
  u64 next_below(u64 bound_inclusive) {
    u64 span = bound_inclusive + 1;
    u64 limit = (~u64{0} / span) * span;
    u64 v;
    do {
      v = next();
    } while (v >= limit);
    return v % span;
  }
};

/// n cities drawn i.i.d. uniform on {0..L}^d; identical seeds give
/// identical instances.
inline Instance gen_random(i64 n, i64 L, int d, u64 seed, bool tour = false) {
  if (n < 1 || L < 1) throw domain_error("gen_random: need n >= 1, L >= 1");
  SplitMix64 rng(seed);
  std::vector<Vec> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (i64 i = 0; i < n; ++i) {
    Vec x(d);
    for (int k = 0; k < d; ++k)
      x[k] = static_cast<i64>(rng.next_below(static_cast<u64>(L)));
    pts.push_back(std::move(x));
  }
  return Instance(d, std::move(pts), tour);
}

/// The descending diagonal family: cities at (i*delta, -i), i = 0..n.
inline Instance gen_slope(i64 n, i64 delta) {
  if (n < 0 || delta < 1) throw domain_error("gen_slope: need n >= 0, delta >= 1");
  std::vector<Vec> pts;
  pts.reserve(static_cast<std::size_t>(n) + 1);
  for (i64 i = 0; i <= n; ++i) pts.push_back({i * delta, -i});
  return Instance(2, std::move(pts));
}

/// Lower bound on the cost of any trajectory over the slope family that
/// never takes negative x-speed: delta/(delta-1) * n + delta - 2.
inline Rational ntu_lower_bound(i64 n, i64 delta) {
  if (delta < 2) throw domain_error("ntu_lower_bound: requires delta >= 2");
  return Rational(delta, delta - 1) * Rational(n) + Rational(delta - 2);
}

/// Cost of the turning trajectory capped at x-speed k*delta:
/// n/k + 2k*delta + 4*ceil(sqrt(k*delta*(k*delta - 1)/2)) + 2.
inline Rational tu_cost(i64 n, i64 k, i64 delta) {
  if (k < 1 || delta < 1) throw domain_error("tu_cost: requires k >= 1, delta >= 1");
  i64 kd = k * delta;
  i64 root = ceil_sqrt(kd * (kd - 1) / 2);
  return Rational(n, k) + Rational(2 * kd + 4 * root + 2);
}

/// Smallest n at which the turning trajectory strictly beats the
/// non-turning lower bound, from the linear inequality
/// n > (4*ceil(sqrt(k*delta*(k*delta-1)/2)) + 4 + delta*(2k-1)) * k(delta-1)/(k*delta - delta + 1).
inline i64 crossover_n0(i64 k, i64 delta) {
  if (delta < 2 || k < 1) throw domain_error("crossover_n0: requires k >= 1, delta >= 2");
  i64 kd = k * delta;
  if (kd - delta + 1 <= 0)
    throw domain_error("crossover_n0: slope coefficient not positive");
  i64 root = ceil_sqrt(kd * (kd - 1) / 2);
  Rational rhs = Rational(4 * root + 4 + delta * (2 * k - 1)) *
                 Rational(k * (delta - 1), kd - delta + 1);
  return rhs.floor() + 1;
}

}  // namespace racetrack
