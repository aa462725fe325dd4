#pragma once

#include <optional>
#include <unordered_set>

#include "racetrack/branching_cost.hpp"
#include "racetrack/kinematics.hpp"
#include "racetrack/multipoint_types.hpp"

namespace racetrack::oracle {

/// Finite window for brute-force search over the configuration graph.
struct SearchBounds {
  Vec pos_lo;
  Vec pos_hi;
  i64 speed_cap = 8;
  i64 step_cap = 128;
  std::size_t state_budget = 64'000'000;
};

/// Bounding box of the given points, inflated per dimension by
/// max(braking_distance(speed_cap), 10).
inline SearchBounds default_bounds(const std::vector<Vec>& anchors,
                                   i64 speed_cap = 8, i64 step_cap = 128) {
  if (anchors.empty()) throw invalid_input_error("default_bounds: no anchors");
  const std::size_t d = anchors.front().size();
  SearchBounds b;
  b.speed_cap = speed_cap;
  b.step_cap = step_cap;
  b.pos_lo.assign(d, 0);
  b.pos_hi.assign(d, 0);
  i64 margin = std::max<i64>(braking_distance(speed_cap), 10);
  for (std::size_t k = 0; k < d; ++k) {
    i64 lo = anchors.front()[k], hi = anchors.front()[k];
    for (const auto& a : anchors) {
      lo = std::min(lo, a[k]);
      hi = std::max(hi, a[k]);
    }
    b.pos_lo[k] = lo - margin;
    b.pos_hi[k] = hi + margin;
  }
  return b;
}

/// Per-depth reachable (position, speed) sets of the one-dimensional
/// configuration graph, as dense bitsets. Layer t holds exactly the states
/// reachable in t steps from the start, within the window.
class Reach1D {
 public:
  Reach1D(i64 x0, i64 v0, i64 pos_lo, i64 pos_hi, i64 speed_cap, i64 t_max)
      : xlo_(pos_lo),
        vcap_(speed_cap),
        width_(pos_hi - pos_lo + 1),
        rows_(2 * speed_cap + 1),
        words_(static_cast<std::size_t>((width_ + 63) / 64)) {
    if (pos_hi < pos_lo) throw domain_error("Reach1D: empty position window");
    if (x0 < pos_lo || x0 > pos_hi || std::llabs(v0) > speed_cap)
      throw domain_error("Reach1D: start outside bounds");
    layers_.reserve(static_cast<std::size_t>(t_max) + 1);
    std::vector<u64> layer(rows_ * words_, 0);
    set_bit(layer, v0, x0 - xlo_);
    layers_.push_back(layer);
    for (i64 t = 1; t <= t_max; ++t) {
      std::vector<u64> next(rows_ * words_, 0);
      const std::vector<u64>& cur = layers_.back();
      for (i64 v = -vcap_; v <= vcap_; ++v) {
        // States moving at v came from speeds v-1, v, v+1.
        for (i64 pv = v - 1; pv <= v + 1; ++pv) {
          if (pv < -vcap_ || pv > vcap_) continue;
          or_shifted(row(next, v), row(cur, pv), v);
        }
      }
      check_touch(next);
      layers_.push_back(std::move(next));
    }
  }

  i64 t_max() const { return static_cast<i64>(layers_.size()) - 1; }

  bool contains(i64 t, i64 x, i64 v) const {
    if (t < 0 || t > t_max()) return false;
    if (x < xlo_ || x >= xlo_ + width_ || std::llabs(v) > vcap_) return false;
    std::size_t idx = static_cast<std::size_t>(x - xlo_);
    const u64* r = layers_[static_cast<std::size_t>(t)].data() + row_offset(v);
    return (r[idx / 64] >> (idx % 64)) & 1u;
  }

  /// Set when any layer populated a cell on the window boundary; results
  /// may then be clipped by the bounds.
  bool touched_bound() const { return touched_; }

 private:
  std::size_t row_offset(i64 v) const {
    return static_cast<std::size_t>(v + vcap_) * words_;
  }
  u64* row(std::vector<u64>& layer, i64 v) { return layer.data() + row_offset(v); }
  const u64* row(const std::vector<u64>& layer, i64 v) const {
    return layer.data() + row_offset(v);
  }

  void set_bit(std::vector<u64>& layer, i64 v, i64 idx) {
    layer[row_offset(v) + static_cast<std::size_t>(idx) / 64] |=
        u64{1} << (static_cast<std::size_t>(idx) % 64);
  }

  // dst_row |= src_row shifted by k position cells, clipped to the window.
  void or_shifted(u64* dst, const u64* src, i64 k) {
    const i64 nw = static_cast<i64>(words_);
    const i64 wshift = k >= 0 ? k / 64 : -((-k + 63) / 64);
    const int bshift = static_cast<int>(k - wshift * 64);  // 0..63
    for (i64 w = 0; w < nw; ++w) {
      u64 acc = 0;
      i64 lo_word = w - wshift;
      if (lo_word >= 0 && lo_word < nw) acc |= src[lo_word] << bshift;
      if (bshift > 0 && lo_word - 1 >= 0 && lo_word - 1 < nw)
        acc |= src[lo_word - 1] >> (64 - bshift);
      dst[w] |= acc;
    }
    // Mask stray bits beyond the window width in the last word.
    int rem = static_cast<int>(width_ % 64);
    if (rem) dst[nw - 1] &= (u64{1} << rem) - 1;
  }

  void check_touch(const std::vector<u64>& layer) {
    if (touched_) return;
    // Boundary rows: highest speeds; boundary columns: first/last cell.
    for (i64 v : {-vcap_, vcap_}) {
      const u64* r = row(layer, v);
      for (std::size_t w = 0; w < words_; ++w)
        if (r[w]) {
          touched_ = true;
          return;
        }
    }
    std::size_t last = static_cast<std::size_t>(width_ - 1);
    for (i64 v = -vcap_; v <= vcap_; ++v) {
      const u64* r = row(layer, v);
      if (r[0] & 1u) {
        touched_ = true;
        return;
      }
      if ((r[last / 64] >> (last % 64)) & 1u) {
        touched_ = true;
        return;
      }
    }
  }

  i64 xlo_, vcap_, width_;
  std::size_t rows_, words_;
  std::vector<std::vector<u64>> layers_;
  bool touched_ = false;
};

struct BranchingSearch {
  std::optional<i64> length;
  bool touched_bound = false;
};

namespace detail {

inline std::vector<Reach1D> reach_per_dim(const Config& c,
                                          const SearchBounds& bounds,
                                          i64 t_max) {
  const std::size_t d = c.dim();
  if (bounds.pos_lo.size() != d || bounds.pos_hi.size() != d)
    throw invalid_input_error("oracle: bounds dimension mismatch");
  std::vector<Reach1D> layers;
  layers.reserve(d);
  for (std::size_t k = 0; k < d; ++k)
    layers.emplace_back(c.p[k], c.v[k], bounds.pos_lo[k], bounds.pos_hi[k],
                        bounds.speed_cap, t_max);
  return layers;
}

}  // namespace detail

/// Exact minimal trajectory length within the bounds, or absent when c' is
/// not reachable within step_cap. The graph factors per dimension: a step
/// moves every coordinate at once, so a d-dim trajectory of length t exists
/// iff each 1D projection reaches its target in exactly t steps.
inline BranchingSearch bfs_branching(const Config& c, const Config& c_prime,
                                     const SearchBounds& bounds) {
  require_same_dim(c.p, c_prime.p, "bfs_branching");
  for (std::size_t k = 0; k < c.dim(); ++k) {
    if (c.p[k] < bounds.pos_lo[k] || c.p[k] > bounds.pos_hi[k] ||
        c_prime.p[k] < bounds.pos_lo[k] || c_prime.p[k] > bounds.pos_hi[k])
      throw domain_error("bfs_branching: endpoint outside bounds");
  }
  auto layers = detail::reach_per_dim(c, bounds, bounds.step_cap);
  BranchingSearch out;
  for (const auto& l : layers) out.touched_bound |= l.touched_bound();
  for (i64 t = 0; t <= bounds.step_cap; ++t) {
    bool all = true;
    for (std::size_t k = 0; k < layers.size(); ++k)
      if (!layers[k].contains(t, c_prime.p[k], c_prime.v[k])) {
        all = false;
        break;
      }
    if (all) {
      out.length = t;
      return out;
    }
  }
  return out;
}

/// All t <= t_max for which a trajectory of exactly length t exists within
/// the bounds; per-depth reachable-set iteration.
inline std::vector<i64> feasible_lengths_bfs(const Config& c,
                                             const Config& c_prime,
                                             const SearchBounds& bounds,
                                             i64 t_max) {
  require_same_dim(c.p, c_prime.p, "feasible_lengths_bfs");
  auto layers = detail::reach_per_dim(c, bounds, t_max);
  std::vector<i64> out;
  for (i64 t = 0; t <= t_max; ++t) {
    bool all = true;
    for (std::size_t k = 0; k < layers.size(); ++k)
      if (!layers[k].contains(t, c_prime.p[k], c_prime.v[k])) {
        all = false;
        break;
      }
    if (all) out.push_back(t);
  }
  return out;
}

/// Exact optimal multipoint cost by breadth-first search over states
/// (position, velocity, next unvisited city). Desk scale only.
inline std::optional<i64> bfs_multipoint(const Instance& inst,
                                         const SearchBounds& bounds) {
  const std::size_t d = inst.points.front().size();
  const std::size_t n = inst.points.size();
  if (bounds.pos_lo.size() != d || bounds.pos_hi.size() != d)
    throw invalid_input_error("bfs_multipoint: bounds dimension mismatch");

  // Pack (positions, velocities, next city) into a 64-bit key.
  std::vector<int> pos_bits(d), vel_bits(d);
  std::vector<i64> width(d);
  int total_bits = 0;
  const i64 vspan = 2 * bounds.speed_cap + 1;
  auto bits_for = [](i64 count) {
    int b = 1;
    while ((i64{1} << b) < count) ++b;
    return b;
  };
  for (std::size_t k = 0; k < d; ++k) {
    width[k] = bounds.pos_hi[k] - bounds.pos_lo[k] + 1;
    pos_bits[k] = bits_for(width[k]);
    vel_bits[k] = bits_for(vspan);
    total_bits += pos_bits[k] + vel_bits[k];
  }
  total_bits += bits_for(static_cast<i64>(n) + 2);
  if (total_bits > 62)
    throw resource_error("bfs_multipoint: state space too wide to encode");

  auto pack = [&](std::span<const i64> p, std::span<const i64> v,
                  std::size_t city) {
    u64 key = 0;
    for (std::size_t k = 0; k < d; ++k) {
      key = (key << pos_bits[k]) | static_cast<u64>(p[k] - bounds.pos_lo[k]);
      key = (key << vel_bits[k]) | static_cast<u64>(v[k] + bounds.speed_cap);
    }
    key = (key << bits_for(static_cast<i64>(n) + 2)) | static_cast<u64>(city);
    return key;
  };

  // Greedily consume every city the configuration visits in order; the
  // in-order rule compares squared distances from the vector's tail.
  auto advance = [&](std::span<const i64> p, std::span<const i64> v,
                     std::size_t city) {
    i64 prev = -1;
    while (city < n) {
      if (!visits(p, v, std::span<const i64>(inst.points[city]))) break;
      i64 d2 = dist2_from_tail(p, v, std::span<const i64>(inst.points[city]));
      if (prev >= 0 && d2 <= prev) break;
      prev = d2;
      ++city;
    }
    return city;
  };

  const Vec& goal_p = inst.points.back();
  Vec zero(d, 0);
  std::size_t city0 = advance(std::span<const i64>(inst.points.front()),
                              std::span<const i64>(zero), 0);
  auto is_goal = [&](std::span<const i64> p, std::span<const i64> v,
                     std::size_t city) {
    if (city < n) return false;
    for (std::size_t k = 0; k < d; ++k)
      if (v[k] != 0 || p[k] != goal_p[k]) return false;
    return true;
  };
  if (is_goal(std::span<const i64>(inst.points.front()),
              std::span<const i64>(zero), city0))
    return 0;

  struct State {
    i64 p[4];
    i64 v[4];
    std::size_t city;
  };
  if (d > 4) throw resource_error("bfs_multipoint: supports up to 4 dimensions");

  std::unordered_set<u64> seen;
  std::vector<State> frontier, next;
  State s0{};
  for (std::size_t k = 0; k < d; ++k) s0.p[k] = inst.points.front()[k];
  s0.city = city0;
  frontier.push_back(s0);
  seen.insert(pack(std::span<const i64>(s0.p, d), std::span<const i64>(s0.v, d),
                   s0.city));

  for (i64 t = 1; t <= bounds.step_cap; ++t) {
    next.clear();
    for (const State& st : frontier) {
      // Enumerate velocity deltas in {-1,0,1}^d.
      i64 dv[4] = {-1, -1, -1, -1};
      while (true) {
        State ns{};
        bool ok = true;
        for (std::size_t k = 0; k < d; ++k) {
          ns.v[k] = st.v[k] + dv[k];
          if (std::llabs(ns.v[k]) > bounds.speed_cap) {
            ok = false;
            break;
          }
          ns.p[k] = st.p[k] + ns.v[k];
          if (ns.p[k] < bounds.pos_lo[k] || ns.p[k] > bounds.pos_hi[k]) {
            ok = false;
            break;
          }
        }
        if (ok) {
          std::span<const i64> np(ns.p, d), nv(ns.v, d);
          ns.city = advance(np, nv, st.city);
          if (is_goal(np, nv, ns.city)) return t;
          u64 key = pack(np, nv, ns.city);
          if (seen.insert(key).second) {
            if (seen.size() > bounds.state_budget)
              throw resource_error("bfs_multipoint: state budget exceeded");
            next.push_back(ns);
          }
        }
        std::size_t k = 0;
        while (k < d && dv[k] == 1) dv[k++] = -1;
        if (k == d) break;
        ++dv[k];
      }
    }
    frontier.swap(next);
    if (frontier.empty()) break;
  }
  return std::nullopt;
}

}  // namespace racetrack::oracle
