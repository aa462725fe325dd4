#pragma once

#include <algorithm>

#include "racetrack/kinematics.hpp"

namespace racetrack {

/// Per-step velocity delta in one dimension.
enum class Action : int { decel = -1, hold = 0, accel = +1 };

inline char action_char(Action a) {
  switch (a) {
    case Action::decel: return '-';
    case Action::hold: return '0';
    case Action::accel: return '+';
  }
  return '?';
}

inline Action action_from_char(char c) {
  switch (c) {
    case '-': return Action::decel;
    case '0': return Action::hold;
    case '+': return Action::accel;
  }
  throw invalid_input_error("Action: expected one of '-','0','+'");
}

struct ControlSegment {
  Action action;
  i64 count = 0;

  friend bool operator==(const ControlSegment&, const ControlSegment&) = default;
};

/// Run-length encoded 1D trajectory: start state plus control segments.
struct CompactTrajectory {
  i64 start_x = 0;
  i64 start_v = 0;
  std::vector<ControlSegment> segments;

  i64 length() const {
    i64 n = 0;
    for (const auto& s : segments) n += s.count;
    return n;
  }

  Config start_config() const { return config1(start_x, start_v); }

  /// Drops zero-count segments and merges adjacent equal actions.
  void canonicalize() {
    std::vector<ControlSegment> out;
    for (const auto& s : segments) {
      if (s.count == 0) continue;
      if (!out.empty() && out.back().action == s.action)
        out.back().count += s.count;
      else
        out.push_back(s);
    }
    segments = std::move(out);
  }

  void append(Action a, i64 count) {
    if (count < 0) throw invalid_input_error("ControlSegment: negative count");
    if (count == 0) return;
    if (!segments.empty() && segments.back().action == a)
      segments.back().count += count;
    else
      segments.push_back({a, count});
  }

  void append(const CompactTrajectory& tail_part) {
    for (const auto& s : tail_part.segments) append(s.action, s.count);
  }

  /// Mirror through the origin: positions and speeds negate, accel and
  /// decel swap.
  CompactTrajectory reflected() const {
    CompactTrajectory r;
    r.start_x = -start_x;
    r.start_v = -start_v;
    r.segments.reserve(segments.size());
    for (const auto& s : segments) {
      Action a = s.action == Action::hold
                     ? Action::hold
                     : (s.action == Action::accel ? Action::decel : Action::accel);
      r.segments.push_back({a, s.count});
    }
    return r;
  }

  CompactTrajectory translated(i64 k) const {
    CompactTrajectory r = *this;
    r.start_x += k;
    return r;
  }
};

/// Replays the control segments into the explicit 1D trajectory.
inline Trajectory expand(const CompactTrajectory& ct) {
  Trajectory t;
  t.configs.reserve(static_cast<std::size_t>(ct.length()) + 1);
  i64 x = ct.start_x;
  i64 v = ct.start_v;
  t.configs.push_back(config1(x, v));
  for (const auto& s : ct.segments) {
    for (i64 i = 0; i < s.count; ++i) {
      v += static_cast<i64>(s.action);
      x += v;
      t.configs.push_back(config1(x, v));
    }
  }
  return t;
}

/// End state of an expansion without materializing it.
inline Config expand_end(const CompactTrajectory& ct) {
  i64 x = ct.start_x;
  i64 v = ct.start_v;
  for (const auto& s : ct.segments) {
    i64 a = static_cast<i64>(s.action);
    // Sum of an arithmetic run: count speeds starting at v + a.
    x += s.count * v + a * (s.count * (s.count + 1)) / 2;
    v += a * s.count;
  }
  return config1(x, v);
}

/// Combines d per-dimension compact trajectories of equal length into a
/// d-dimensional trajectory.
inline Trajectory assemble(const std::vector<CompactTrajectory>& dims) {
  if (dims.empty()) throw invalid_input_error("assemble: no dimensions");
  std::vector<Trajectory> expanded;
  expanded.reserve(dims.size());
  for (const auto& ct : dims) expanded.push_back(expand(ct));
  const std::size_t steps = expanded.front().configs.size();
  for (const auto& t : expanded)
    if (t.configs.size() != steps)
      throw invalid_input_error("assemble: length mismatch");
  Trajectory out;
  out.configs.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    Vec p(dims.size()), v(dims.size());
    for (std::size_t k = 0; k < dims.size(); ++k) {
      p[k] = expanded[k].configs[i].p[0];
      v[k] = expanded[k].configs[i].v[0];
    }
    out.configs.push_back(Config(std::move(p), std::move(v)));
  }
  return out;
}

}  // namespace racetrack
