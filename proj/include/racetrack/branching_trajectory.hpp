#pragma once

#include <optional>
#include <utility>

#include "racetrack/branching_cost.hpp"
#include "racetrack/compact.hpp"
#include "racetrack/rational.hpp"

namespace racetrack {

/// Distance regions delimited by the four curves at a fixed length:
/// A below the hold-then-ramp distance, B between the two ramp
/// trajectories, C above the ramp-then-hold distance.
enum class Region { A, B, C };

inline char region_char(Region r) {
  return r == Region::A ? 'A' : (r == Region::B ? 'B' : 'C');
}

struct RegionProfile {
  Region region = Region::B;
  i64 d_rmin = 0;
  i64 d_rmax = 0;
  i64 alpha1 = 0;
  i64 alpha2 = 0;
  i64 deficit = 0;           // area gap D between delta and the region's ramp curve
  i64 m = 0;                 // ell - |s' - s|
  Rational k_m() const { return Rational(m, 2); }
};

/// The two ramp-trajectory distances at length ell, plus the alpha terms.
inline RegionProfile region_bounds(i64 s, i64 s_prime, i64 ell) {
  i64 t_min = std::llabs(s_prime - s);
  if (ell < t_min) throw domain_error("region_bounds: ell below t_min");
  RegionProfile r;
  r.m = ell - t_min;
  r.alpha1 = (s_prime - s) * (s + s_prime + 1) / 2;
  r.alpha2 = (s - s_prime) * (s + s_prime - 1) / 2;
  if (s < s_prime) {
    r.d_rmin = s * r.m + r.alpha1;
    r.d_rmax = s_prime * r.m + r.alpha1;
  } else {
    r.d_rmin = s_prime * r.m + r.alpha2;
    r.d_rmax = s * r.m + r.alpha2;
  }
  return r;
}

/// Area removed (regions A, C) or gained (region B) by k speed layers
/// relative to the ramp trajectory.
inline i64 layer_area(i64 k, i64 ell, i64 s, i64 s_prime, Region region) {
  i64 t_min = std::llabs(s_prime - s);
  if (ell < t_min) throw domain_error("layer_area: ell below t_min");
  i64 m = ell - t_min;
  if (k < 0) throw domain_error("layer_area: k out of range");
  if (region == Region::B) return m * k;
  if (2 * k > m) throw domain_error("layer_area: k out of range");
  return -k * k + k * m;
}

struct Checkpoints {
  i64 k1 = 0;
  i64 k2 = 0;
  bool exact = true;  // layers alone realize D; otherwise k2 is the slice width
};

/// Region classification and checkpoint solve for a feasible (delta, ell).
inline std::pair<RegionProfile, Checkpoints> solve_checkpoints(i64 delta, i64 ell,
                                                               i64 s, i64 s_prime) {
  const auto curves = FeasibilityCurves::make(s, s_prime);
  if (ell < curves.t_min || delta < curves.delta_min(ell) ||
      delta > curves.delta_max(ell))
    throw infeasible_error("solve_checkpoints: delta outside feasible band");

  RegionProfile prof = region_bounds(s, s_prime, ell);
  Checkpoints cp;
  const i64 m = prof.m;

  if (delta <= prof.d_rmin) {
    prof.region = Region::A;
    prof.deficit = prof.d_rmin - delta;
  } else if (delta <= prof.d_rmax) {
    prof.region = Region::B;
    prof.deficit = s <= s_prime ? delta - prof.d_rmin : prof.d_rmax - delta;
  } else {
    prof.region = Region::C;
    prof.deficit = delta - prof.d_rmax;
  }
  const i64 D = prof.deficit;

  if (prof.region == Region::B) {
    if (D == 0) {
      cp.k1 = 0;
      cp.k2 = m;
      cp.exact = true;
    } else if (D % m == 0) {
      cp.k1 = D / m;
      cp.k2 = m + cp.k1;
      cp.exact = true;
    } else {
      cp.k1 = D / m;
      cp.k2 = D % m;
      cp.exact = false;
    }
    return {prof, cp};
  }

  // Regions A and C: smallest k with k(m - k) >= D, guessed from the
  // quadratic root and pinned by a short walk.
  i64 k = m / 2 - isqrt(std::max<i64>(m * m - 4 * D, 0)) / 2;
  if (k < 0) k = 0;
  auto area = [m](i64 kk) { return -kk * kk + kk * m; };
  while (area(k) < D) ++k;
  while (k > 0 && area(k - 1) >= D) --k;
  cp.k1 = k;
  if (area(k) == D) {
    cp.k2 = m - k;
    cp.exact = true;
  } else {
    cp.k2 = area(k) - D;
    cp.exact = false;
  }
  return {prof, cp};
}

namespace detail {

// Control templates, one row per (region, speed branch, exact/slice).
// Counts are affine in k1, k2, m and ds = |s' - s|.
struct SegSpec {
  Action action;
  i64 c1, ck1, ck2, cm, cds;
};

struct TemplateRow {
  SegSpec segs[5];
  int n;
};

inline const TemplateRow& control_template(Region region, bool up, bool exact) {
  using A = Action;
  // clang-format off
  static const TemplateRow rows[12] = {
    // region A, s <= s'
    {{{A::decel,0,1,0,0,0}, {A::hold,0,-2,0,1,0}, {A::accel,0,1,0,0,1}}, 3},
    {{{A::decel,0,1,0,0,0}, {A::hold,0,-2,-1,1,0}, {A::accel,1,0,0,0,0},
      {A::hold,0,0,1,0,0}, {A::accel,-1,1,0,0,1}}, 5},
    // region A, s > s'
    {{{A::decel,0,1,0,0,1}, {A::hold,0,-2,0,1,0}, {A::accel,0,1,0,0,0}}, 3},
    {{{A::decel,0,1,0,0,1}, {A::hold,0,-2,-1,1,0}, {A::accel,1,0,0,0,0},
      {A::hold,0,0,1,0,0}, {A::accel,-1,1,0,0,0}}, 5},
    // region B, s <= s'
    {{{A::accel,0,1,0,0,0}, {A::hold,0,0,0,1,0}, {A::accel,0,-1,0,0,1}}, 3},
    {{{A::accel,0,1,0,0,0}, {A::hold,0,0,-1,1,0}, {A::accel,1,0,0,0,0},
      {A::hold,0,0,1,0,0}, {A::accel,-1,-1,0,0,1}}, 5},
    // region B, s > s'
    {{{A::decel,0,1,0,0,0}, {A::hold,0,0,0,1,0}, {A::decel,0,-1,0,0,1}}, 3},
    {{{A::decel,0,1,0,0,0}, {A::hold,0,0,-1,1,0}, {A::decel,1,0,0,0,0},
      {A::hold,0,0,1,0,0}, {A::decel,-1,-1,0,0,1}}, 5},
    // region C, s <= s'
    {{{A::accel,0,1,0,0,1}, {A::hold,0,-2,0,1,0}, {A::decel,0,1,0,0,0}}, 3},
    {{{A::accel,0,1,0,0,1}, {A::hold,0,-2,-1,1,0}, {A::decel,1,0,0,0,0},
      {A::hold,0,0,1,0,0}, {A::decel,-1,1,0,0,0}}, 5},
    // region C, s > s'
    {{{A::accel,0,1,0,0,0}, {A::hold,0,-2,0,1,0}, {A::decel,0,1,0,0,1}}, 3},
    {{{A::accel,0,1,0,0,0}, {A::hold,0,-2,-1,1,0}, {A::decel,1,0,0,0,0},
      {A::hold,0,0,1,0,0}, {A::decel,-1,1,0,0,1}}, 5},
  };
  // clang-format on
  int idx = (region == Region::A ? 0 : region == Region::B ? 4 : 8) +
            (up ? 0 : 2) + (exact ? 0 : 1);
  return rows[idx];
}

}  // namespace detail

/// Compact trajectory for the normalized instance (0, s) -> (delta, s')
/// of length ell; s, s', delta >= 0 and ell feasible.
inline CompactTrajectory construct_case4(i64 s, i64 s_prime, i64 delta, i64 ell) {
  CompactTrajectory ct;
  ct.start_x = 0;
  ct.start_v = s;
  const i64 ds = std::llabs(s_prime - s);
  if (ell < ds) throw infeasible_error("construct_case4: length below t_min");
  if (ell == ds) {
    // Only the pure ramp fits in t_min steps.
    if (delta != FeasibilityCurves::make(s, s_prime).delta_min(ell))
      throw infeasible_error("construct_case4: infeasible length");
    if (s < s_prime)
      ct.append(Action::accel, ds);
    else if (s > s_prime)
      ct.append(Action::decel, ds);
    return ct;
  }

  auto [prof, cp] = solve_checkpoints(delta, ell, s, s_prime);
  const auto& row = detail::control_template(prof.region, s <= s_prime, cp.exact);
  const i64 slice = cp.exact ? 0 : cp.k2;
  for (int i = 0; i < row.n; ++i) {
    const auto& sp = row.segs[i];
    i64 count = sp.c1 + sp.ck1 * cp.k1 + sp.ck2 * slice + sp.cm * prof.m +
                sp.cds * ds;
    ct.append(sp.action, count);
  }
  ct.canonicalize();

  Config end = expand_end(ct);
  if (end.p[0] != delta || end.v[0] != s_prime || ct.length() != ell)
    throw error("construct_case4: template expansion mismatch");
  return ct;
}

/// Compact trajectory of exactly length ell from c to c' in one dimension.
inline CompactTrajectory construct_1d(const Config& c, const Config& c_prime,
                                      i64 ell) {
  if (c.dim() != 1 || c_prime.dim() != 1)
    throw invalid_input_error("construct_1d: expects 1D configurations");
  const i64 x = c.p[0], s = c.v[0];
  const i64 xp = c_prime.p[0], sp = c_prime.v[0];

  Reduction r = reduce(x, s, xp, sp);
  const i64 ell_core = ell - r.shift();
  Feasible1D core_set;
  if (r.tag == CaseTag::case0)
    core_set.tail = ceil_sqrt(4 * r.core_delta);
  else
    core_set = case4_core(r.core_s, r.core_s_prime, r.core_delta);
  if (ell_core < 0 || !core_set.contains(ell_core))
    throw infeasible_error("construct_1d: infeasible length");

  CompactTrajectory core =
      construct_case4(r.core_s, r.core_s_prime, r.core_delta, ell_core);
  if (r.core_reflect) core = core.reflected();

  CompactTrajectory wf;
  wf.start_x = 0;
  wf.start_v = r.reflect ? -s : s;
  wf.append(r.prefix_action, r.prefix_steps);
  wf.append(core);
  wf.append(r.suffix_action, r.suffix_steps);
  if (r.reflect) wf = wf.reflected();
  wf = wf.translated(x);
  wf.canonicalize();

  Config end = expand_end(wf);
  if (end != c_prime || wf.length() != ell)
    throw error("construct_1d: reduction splice mismatch");
  return wf;
}

/// Per-dimension compact controls plus the assembled d-dim trajectory.
struct ConstructedTrajectory {
  std::vector<CompactTrajectory> dims;
  Trajectory trajectory;
  i64 length = 0;
};

/// Trajectory of length ell (default: the optimum) from c to c'.
inline ConstructedTrajectory construct(const Config& c, const Config& c_prime,
                                       std::optional<i64> ell = std::nullopt) {
  require_same_dim(c.p, c_prime.p, "construct");
  i64 len = ell ? *ell : branching_cost(c, c_prime);
  ConstructedTrajectory out;
  out.length = len;
  out.dims.reserve(c.dim());
  for (std::size_t k = 0; k < c.dim(); ++k) {
    Feasible1D fk = feasible_1d_core(c.p[k], c.v[k], c_prime.p[k], c_prime.v[k]);
    if (!fk.contains(len))
      throw infeasible_error("construct: length infeasible in dimension " +
                             std::to_string(k));
    out.dims.push_back(construct_1d(config1(c.p[k], c.v[k]),
                                    config1(c_prime.p[k], c_prime.v[k]), len));
  }
  out.trajectory = assemble(out.dims);
  return out;
}

}  // namespace racetrack
