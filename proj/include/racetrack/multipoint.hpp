#pragma once

#include <algorithm>
#include <limits>

#include "racetrack/branching_trajectory.hpp"
#include "racetrack/multipoint_types.hpp"
#include "racetrack/parallel.hpp"

namespace racetrack {

constexpr i64 kNoUpperBound = std::numeric_limits<i64>::max() / 4;

/// All configurations visiting x with per-dimension speed at most smax,
/// sorted lexicographically.
inline CandidateSet candidate_configs(const Vec& x, i64 smax, int d) {
  if (smax < 0) throw domain_error("candidate_configs: smax must be >= 0");
  if (static_cast<int>(x.size()) != d)
    throw invalid_input_error("candidate_configs: point dimension mismatch");
  CandidateSet set;
  Vec v(d, -smax);
  while (true) {
    i64 g = gcd_abs(v);
    if (g == 0) {
      set.configs.push_back(Config(x, Vec(d, 0)));
    } else {
      // Positions placing x on a lattice point of the swept segment.
      for (i64 j = 0; j <= g; ++j) {
        Vec p(x);
        for (int k = 0; k < d; ++k) p[k] += j * (v[k] / g);
        set.configs.push_back(Config(std::move(p), v));
      }
    }
    int k = 0;
    while (k < d && v[k] == smax) v[k++] = -smax;
    if (k == d) break;
    ++v[k];
  }
  std::sort(set.configs.begin(), set.configs.end());
  return set;
}

/// Cost of moving from configuration prev (visiting x_prev) to cur
/// (visiting x_cur). Reusing the same configuration is free when it sweeps
/// both cities in order; otherwise the vehicle must loop back, which costs
/// the smallest positive feasible length.
inline i64 transition_cost(const Config& prev, const Config& cur,
                           const Vec& x_prev, const Vec& x_cur) {
  if (prev == cur) {
    if (visits(cur, x_prev) && visits(cur, x_cur) &&
        dist2_from_tail(cur, x_cur) > dist2_from_tail(cur, x_prev))
      return 0;
    return branching_cost_fast(prev, cur, 1);
  }
  return branching_cost_fast(prev, cur, 0);
}

/// Bottom-up table for the stage-wise optimum.
struct DpTable {
  std::vector<std::vector<i64>> cost;
  std::vector<std::vector<int>> pred;
};

struct DpResult {
  i64 cost = 0;
  std::vector<Config> visiting;
};

/// cost(i,c) = min over c' in C_{i-1} of cost(i-1,c') + transition(c',c);
/// argmin ties resolve to the lexicographically smallest predecessor.
inline DpResult dp_solve(const Instance& inst,
                         const std::vector<CandidateSet>& sets) {
  const std::size_t n = inst.n();
  if (sets.size() != n)
    throw invalid_input_error("dp_solve: sets do not align with cities");
  for (const auto& s : sets)
    if (s.configs.empty()) throw infeasible_error("dp_solve: empty candidate set");

  DpTable table;
  table.cost.resize(n);
  table.pred.resize(n);
  table.cost[0].assign(sets[0].configs.size(), kNoUpperBound);
  table.pred[0].assign(sets[0].configs.size(), -1);
  table.cost[0][0] = 0;

  for (std::size_t i = 1; i < n; ++i) {
    const auto& prev_set = sets[i - 1].configs;
    const auto& cur_set = sets[i].configs;
    const auto& prev_cost = table.cost[i - 1];
    table.cost[i].assign(cur_set.size(), kNoUpperBound);
    table.pred[i].assign(cur_set.size(), -1);
    auto& cur_cost = table.cost[i];
    auto& cur_pred = table.pred[i];
    const Vec& x_prev = inst.points[i - 1];
    const Vec& x_cur = inst.points[i];
    parallel_for(cur_set.size(), [&](std::size_t b, std::size_t e) {
      for (std::size_t j = b; j < e; ++j) {
        i64 best = kNoUpperBound;
        int best_pred = -1;
        for (std::size_t jp = 0; jp < prev_set.size(); ++jp) {
          if (prev_cost[jp] >= best) continue;
          i64 c = prev_cost[jp] +
                  transition_cost(prev_set[jp], cur_set[j], x_prev, x_cur);
          if (c < best) {
            best = c;
            best_pred = static_cast<int>(jp);
          }
        }
        cur_cost[j] = best;
        cur_pred[j] = best_pred;
      }
    });
  }

  // The final set is a singleton; unfold pred from its only entry.
  std::size_t j = static_cast<std::size_t>(
      std::min_element(table.cost[n - 1].begin(), table.cost[n - 1].end()) -
      table.cost[n - 1].begin());
  DpResult out;
  out.cost = table.cost[n - 1][j];
  std::vector<Config> rev;
  for (std::size_t i = n; i-- > 0;) {
    rev.push_back(sets[i].configs[j]);
    if (i > 0) j = static_cast<std::size_t>(table.pred[i][j]);
  }
  out.visiting.assign(rev.rbegin(), rev.rend());
  return out;
}

/// Algorithm-3 pruning: drop middle-city candidates whose two-leg bound
/// through the fixed endpoints already exceeds a known trajectory length S.
inline std::vector<CandidateSet> filter_candidates(std::vector<CandidateSet> sets,
                                                   const Config& c_first,
                                                   const Config& c_last, i64 S) {
  for (std::size_t i = 1; i + 1 < sets.size(); ++i) {
    auto& configs = sets[i].configs;
    std::vector<char> keep(configs.size(), 1);
    parallel_for(configs.size(), [&](std::size_t b, std::size_t e) {
      for (std::size_t j = b; j < e; ++j) {
        i64 bc1 = branching_cost_fast(c_first, configs[j]);
        i64 bc2 = branching_cost_fast(configs[j], c_last);
        if (bc1 + bc2 > S) keep[j] = 0;
      }
    });
    std::size_t w = 0;
    for (std::size_t j = 0; j < configs.size(); ++j) {
      if (!keep[j]) continue;
      if (w != j) configs[w] = std::move(configs[j]);
      ++w;
    }
    configs.resize(w);
  }
  return sets;
}

namespace detail {

inline std::vector<CandidateSet> build_sets(const Instance& inst, i64 smax,
                                            std::optional<i64> hull_margin) {
  const std::size_t n = inst.n();
  std::vector<CandidateSet> sets(n);
  Vec lo = inst.points.front(), hi = inst.points.front();
  for (const auto& x : inst.points)
    for (int k = 0; k < inst.d; ++k) {
      lo[k] = std::min(lo[k], x[k]);
      hi[k] = std::max(hi[k], x[k]);
    }
  for (std::size_t i = 0; i < n; ++i) {
    sets[i].city_index = i;
    if (i == 0 || i + 1 == n) {
      sets[i].configs = {Config(inst.points[i], Vec(inst.d, 0))};
      continue;
    }
    sets[i] = candidate_configs(inst.points[i], smax, inst.d);
    sets[i].city_index = i;
    if (hull_margin) {
      i64 mg = *hull_margin;
      auto outside = [&](const Config& c) {
        for (int k = 0; k < inst.d; ++k)
          if (c.p[k] < lo[k] - mg || c.p[k] > hi[k] + mg) return true;
        return false;
      };
      auto& v = sets[i].configs;
      v.erase(std::remove_if(v.begin(), v.end(), outside), v.end());
    }
  }
  return sets;
}

}  // namespace detail

/// Length of the trajectory found with a small fictitious speed cap; a
/// valid upper bound used to seed the conservative speed bound and the
/// candidate filter.
inline i64 warm_start_S(const Instance& inst, i64 warm_smax = 5,
                        std::optional<i64> hull_margin = std::nullopt) {
  if (inst.n() == 1) return 0;
  auto sets = detail::build_sets(inst, warm_smax, hull_margin);
  return dp_solve(inst, sets).cost;
}

/// Speed cap for candidate generation under the chosen policy.
inline i64 speed_bound(const SpeedBoundPolicy& policy, std::optional<i64> S,
                       std::optional<i64> L, bool tour) {
  switch (policy.mode) {
    case SpeedBoundMode::fixed:
      return policy.smax;
    case SpeedBoundMode::conservative:
      if (!S) throw config_error("speed_bound: conservative mode needs S");
      return tour ? *S / 4 : *S / 2;
    case SpeedBoundMode::conjecture:
      if (!L) throw config_error("speed_bound: conjecture mode needs L");
      return ceil_sqrt(*L);
  }
  throw config_error("speed_bound: unknown mode");
}

struct SolveResult {
  i64 cost = 0;
  bool exact = true;
  i64 warm_start = 0;
  i64 smax = 0;
  std::size_t candidate_count = 0;  // total after filtering
  std::size_t prefilter_count = 0;
  std::vector<Config> visiting;
  std::vector<CompactTrajectory> compact;  // whole path, one per dimension
  Trajectory trajectory;
};

/// End-to-end pipeline: warm start, speed bound, candidate generation,
/// filtering, dynamic program, and trajectory stitching. hull_margin, when
/// set, confines candidate positions to the cities' bounding box inflated
/// by that many grid units.
inline SolveResult solve(const Instance& inst, const SpeedBoundPolicy& policy,
                         std::optional<i64> hull_margin = std::nullopt,
                         i64 warm_smax = 5) {
  SolveResult res;
  res.exact = policy.exact();
  const std::size_t n = inst.n();

  if (n == 1) {
    Config only(inst.points.front(), Vec(inst.d, 0));
    res.visiting = {only};
    res.trajectory.configs = {only};
    res.compact.resize(inst.d);
    for (int k = 0; k < inst.d; ++k) {
      res.compact[k].start_x = only.p[k];
      res.compact[k].start_v = 0;
    }
    res.candidate_count = res.prefilter_count = 1;
    return res;
  }

  res.warm_start = warm_start_S(inst, warm_smax, hull_margin);
  res.smax = speed_bound(policy, res.warm_start, inst.max_spread(), inst.tour);

  auto sets = detail::build_sets(inst, res.smax, hull_margin);
  for (const auto& s : sets) res.prefilter_count += s.configs.size();
  sets = filter_candidates(sets, sets.front().configs[0],
                           sets.back().configs[0], res.warm_start);
  for (const auto& s : sets) res.candidate_count += s.configs.size();

  DpResult dp = dp_solve(inst, sets);
  res.cost = dp.cost;
  res.visiting = std::move(dp.visiting);

  // Stitch the visiting sequence into one trajectory; zero-cost self
  // transitions contribute no legs.
  res.trajectory.configs = {res.visiting.front()};
  res.compact.resize(inst.d);
  for (int k = 0; k < inst.d; ++k) {
    res.compact[k].start_x = res.visiting.front().p[k];
    res.compact[k].start_v = res.visiting.front().v[k];
  }
  for (std::size_t i = 1; i < n; ++i) {
    i64 leg = transition_cost(res.visiting[i - 1], res.visiting[i],
                              inst.points[i - 1], inst.points[i]);
    if (leg == 0 && res.visiting[i - 1] == res.visiting[i]) continue;
    ConstructedTrajectory ct = construct(res.visiting[i - 1], res.visiting[i], leg);
    for (int k = 0; k < inst.d; ++k) res.compact[k].append(ct.dims[k]);
    res.trajectory.configs.insert(res.trajectory.configs.end(),
                                  ct.trajectory.configs.begin() + 1,
                                  ct.trajectory.configs.end());
  }
  return res;
}

}  // namespace racetrack
