#pragma once

#include <optional>

#include "racetrack/kinematics.hpp"

namespace racetrack {

/// An ordered list of cities to visit, starting and ending at rest.
struct Instance {
  int d = 1;
  std::vector<Vec> points;
  bool tour = false;

  Instance() = default;
  Instance(int dim, std::vector<Vec> pts, bool is_tour = false)
      : d(dim), points(std::move(pts)), tour(is_tour) {
    if (points.empty())
      throw invalid_input_error("Instance: needs at least one city");
    for (const auto& x : points)
      if (static_cast<int>(x.size()) != d)
        throw invalid_input_error("Instance: point dimension mismatch");
  }

  std::size_t n() const { return points.size(); }

  /// Largest per-dimension spread between two cities.
  i64 max_spread() const {
    i64 best = 0;
    for (int k = 0; k < d; ++k) {
      i64 lo = points.front()[k], hi = lo;
      for (const auto& x : points) {
        lo = std::min(lo, x[k]);
        hi = std::max(hi, x[k]);
      }
      best = std::max(best, hi - lo);
    }
    return best;
  }
};

/// Candidate configurations eligible to visit one city.
struct CandidateSet {
  std::size_t city_index = 0;
  std::vector<Config> configs;
};

enum class SpeedBoundMode { fixed, conservative, conjecture };

/// How to cap the per-dimension speed of candidate configurations.
/// conservative derives floor(S/2) (floor(S/4) for tours) from a known
/// trajectory length S and is exact; conjecture uses ceil(sqrt(L)) and is
/// a heuristic.
struct SpeedBoundPolicy {
  SpeedBoundMode mode = SpeedBoundMode::conservative;
  i64 smax = 0;  // used by mode fixed

  static SpeedBoundPolicy fixed(i64 smax) {
    return {SpeedBoundMode::fixed, smax};
  }
  static SpeedBoundPolicy conservative() {
    return {SpeedBoundMode::conservative, 0};
  }
  static SpeedBoundPolicy conjecture() {
    return {SpeedBoundMode::conjecture, 0};
  }

  bool exact() const { return mode != SpeedBoundMode::conjecture; }
};

inline const char* policy_name(SpeedBoundMode m) {
  switch (m) {
    case SpeedBoundMode::fixed: return "fixed";
    case SpeedBoundMode::conservative: return "conservative";
    case SpeedBoundMode::conjecture: return "conjecture";
  }
  return "?";
}

}  // namespace racetrack
