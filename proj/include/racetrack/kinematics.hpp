#pragma once

#include <cstdlib>
#include <span>

#include "racetrack/base.hpp"
#include "racetrack/intmath.hpp"

namespace racetrack {

/// Vehicle state: grid position and last-used velocity vector.
struct Config {
  Vec p;
  Vec v;

  Config() = default;
  Config(Vec pos, Vec vel) : p(std::move(pos)), v(std::move(vel)) {
    require_same_dim(p, v, "Config");
    if (p.empty()) throw invalid_input_error("Config: dimension must be >= 1");
  }

  std::size_t dim() const { return p.size(); }

  friend bool operator==(const Config& a, const Config& b) {
    return a.p == b.p && a.v == b.v;
  }
  friend bool operator!=(const Config& a, const Config& b) { return !(a == b); }
  /// Lexicographic on (p, v); used for deterministic tie-breaking.
  friend bool operator<(const Config& a, const Config& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.v < b.v;
  }
};

inline Config config1(i64 x, i64 s) { return Config({x}, {s}); }

/// Sequence of configurations c_0..c_len; length = number of moves.
struct Trajectory {
  std::vector<Config> configs;

  i64 length() const { return static_cast<i64>(configs.size()) - 1; }
  bool empty() const { return configs.empty(); }
};

/// Checks position consistency (p_i = p_{i-1} + v_i) and the unit
/// acceleration bound on every consecutive pair.
inline bool validate_trajectory(const Trajectory& t) {
  if (t.configs.empty())
    throw invalid_input_error("validate_trajectory: empty trajectory");
  const std::size_t d = t.configs.front().dim();
  for (const Config& c : t.configs)
    if (c.dim() != d)
      throw invalid_input_error("validate_trajectory: dimension mismatch");
  for (std::size_t i = 1; i < t.configs.size(); ++i) {
    const Config& prev = t.configs[i - 1];
    const Config& cur = t.configs[i];
    for (std::size_t k = 0; k < d; ++k) {
      if (cur.p[k] != prev.p[k] + cur.v[k]) return false;
      i64 dv = cur.v[k] - prev.v[k];
      if (dv < -1 || dv > 1) return false;
    }
  }
  return true;
}

/// True iff x is a lattice point on the closed segment from p - v to p.
inline bool visits(std::span<const i64> p, std::span<const i64> v,
                   std::span<const i64> x) {
  const std::size_t d = p.size();
  i64 g = 0;
  for (i64 vk : v) g = std::gcd(g, static_cast<i64>(std::llabs(vk)));
  if (g == 0) {
    for (std::size_t k = 0; k < d; ++k)
      if (x[k] != p[k]) return false;
    return true;
  }
  // Lattice points on the segment are tail + j * (v / g), j = 0..g.
  i64 j = -1;
  for (std::size_t k = 0; k < d; ++k) {
    i64 step = v[k] / g;
    i64 diff = x[k] - (p[k] - v[k]);
    if (step == 0) {
      if (diff != 0) return false;
    } else {
      if (diff % step != 0) return false;
      i64 jk = diff / step;
      if (jk < 0 || jk > g) return false;
      if (j >= 0 && jk != j) return false;
      j = jk;
    }
  }
  return true;
}

inline bool visits(const Config& c, const Vec& x) {
  require_same_dim(c.p, x, "visits");
  return visits(std::span<const i64>(c.p), std::span<const i64>(c.v),
                std::span<const i64>(x));
}

/// Squared Euclidean distance from the segment tail p - v to x.
inline i64 dist2_from_tail(std::span<const i64> p, std::span<const i64> v,
                           std::span<const i64> x) {
  i64 acc = 0;
  for (std::size_t k = 0; k < p.size(); ++k) acc += sq(x[k] - (p[k] - v[k]));
  return acc;
}

inline i64 dist2_from_tail(const Config& c, const Vec& x) {
  return dist2_from_tail(std::span<const i64>(c.p), std::span<const i64>(c.v),
                         std::span<const i64>(x));
}

/// For several points traversed by one vector: distances from the tail
/// must be strictly increasing in sequence order.
inline bool visit_order_ok(const Config& c, std::span<const Vec> xs) {
  i64 prev = -1;
  for (const Vec& x : xs) {
    if (!visits(c, x))
      throw invalid_input_error("visit_order_ok: point not visited");
    i64 d2 = dist2_from_tail(c, x);
    if (d2 <= prev) return false;
    prev = d2;
  }
  return true;
}

inline bool visit_order_ok(const Config& c, const std::vector<Vec>& xs) {
  return visit_order_ok(c, std::span<const Vec>(xs));
}

}  // namespace racetrack
