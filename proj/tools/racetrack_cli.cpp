// Command-line front end: branching costs and trajectories, the multipoint
// solver, instance generation, benchmark sweeps, SVG plots, and brute-force
// cross-checks.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "racetrack/branching_trajectory.hpp"
#include "racetrack/instances.hpp"
#include "racetrack/json_io.hpp"
#include "racetrack/multipoint.hpp"
#include "racetrack/oracle.hpp"
#include "racetrack/svg.hpp"

using namespace racetrack;

namespace {

// Configuration literal: "x1,..,xd@v1,..,vd".
Vec parse_vec(const std::string& s) {
  Vec out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                               : comma - pos);
    if (tok.empty()) throw invalid_input_error("empty coordinate in '" + s + "'");
    std::size_t used = 0;
    i64 v = std::stoll(tok, &used);
    if (used != tok.size())
      throw invalid_input_error("bad coordinate '" + tok + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Config parse_config(const std::string& s) {
  std::size_t at = s.find('@');
  if (at == std::string::npos)
    throw invalid_input_error("expected 'x1,..,xd@v1,..,vd', got '" + s + "'");
  Vec p = parse_vec(s.substr(0, at));
  Vec v = parse_vec(s.substr(at + 1));
  if (p.size() != v.size())
    throw invalid_input_error("position and velocity dimensions differ in '" +
                              s + "'");
  return Config(std::move(p), std::move(v));
}

SpeedBoundPolicy parse_policy(const std::string& name, i64 smax) {
  if (name == "fixed") return SpeedBoundPolicy::fixed(smax);
  if (name == "conservative") return SpeedBoundPolicy::conservative();
  if (name == "conjecture") return SpeedBoundPolicy::conjecture();
  throw config_error("unknown policy '" + name + "'");
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input_error("cannot open instance file " + path);
  json j;
  in >> j;
  return j.get<Instance>();
}

int cmd_cost(const std::string& from, const std::string& to) {
  Config a = parse_config(from), b = parse_config(to);
  auto sets = per_dimension_lengths(a, b);
  std::cout << MultiInterval::intersect(sets).min() << "\n";
  for (std::size_t k = 0; k < sets.size(); ++k)
    std::cout << "dim " << k << ": " << sets[k] << "\n";
  return 0;
}

int cmd_traj(const std::string& from, const std::string& to,
             std::optional<i64> length, bool expand_path) {
  Config a = parse_config(from), b = parse_config(to);
  ConstructedTrajectory r = construct(a, b, length);
  json out;
  out["length"] = r.length;
  out["dims"] = r.dims;
  if (expand_path) {
    json path = json::array();
    for (const auto& c : r.trajectory.configs) path.push_back(c.p);
    out["path"] = path;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_multi(const std::string& input, const std::string& policy_name,
              i64 smax, std::optional<i64> hull_margin, i64 warm_smax) {
  Instance inst = load_instance(input);
  SolveResult r = solve(inst, parse_policy(policy_name, smax), hull_margin,
                        warm_smax);
  std::cout << json(r).dump(2) << "\n";
  return 0;
}

int cmd_gen(const std::string& kind, i64 n, i64 L, int d, u64 seed, i64 delta,
            const std::string& out_path) {
  Instance inst = kind == "slope" ? gen_slope(n, delta)
                                  : gen_random(n, L, d, seed);
  json j = inst;
  if (out_path.empty() || out_path == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw invalid_input_error("cannot open " + out_path);
    out << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_bench(const std::string& sweep, const std::string& values_csv,
              const std::string& policy_name, i64 smax, i64 fixed_n,
              i64 fixed_l, int seeds, u64 seed0) {
  std::vector<i64> values;
  if (!values_csv.empty()) {
    for (i64 v : parse_vec(values_csv)) values.push_back(v);
  } else if (sweep == "n") {
    values = {5, 10, 15, 20, 25, 30, 35, 40};
  } else {
    values = {20, 50, 100, 150, 200};
  }
  std::cout << "# racetrack bench v1: median of " << seeds
            << " seeded runs per row; candidate_count is post-filter\n";
  std::cout << "n,L,d,policy,candidate_count,runtime_ms,cost\n";
  for (i64 v : values) {
    i64 n = sweep == "n" ? v : fixed_n;
    i64 L = sweep == "n" ? fixed_l : v;
    std::vector<double> times;
    std::size_t cand = 0;
    i64 cost = 0;
    for (int s = 0; s < seeds; ++s) {
      Instance inst = gen_random(n, L, 2, seed0 + static_cast<u64>(s));
      auto t0 = std::chrono::steady_clock::now();
      SolveResult r = solve(inst, parse_policy(policy_name, smax));
      auto t1 = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
      cand = r.candidate_count;
      cost = r.cost;
    }
    std::sort(times.begin(), times.end());
    double med = times[times.size() / 2];
    std::cout << n << "," << L << ",2," << policy_name << "," << cand << ","
              << med << "," << cost << "\n";
  }
  return 0;
}

int cmd_plot(const std::string& traj_path, const std::string& out_path,
             const std::string& instance_path) {
  std::ifstream in(traj_path);
  if (!in) throw invalid_input_error("cannot open trajectory file " + traj_path);
  json j;
  in >> j;
  const char* dims_key = j.contains("dims") ? "dims" : "compact";
  if (!j.contains(dims_key))
    throw invalid_input_error("trajectory file lacks 'dims'/'compact'");
  auto dims = j.at(dims_key).get<std::vector<CompactTrajectory>>();
  Trajectory traj;
  if (!dims.empty()) traj = assemble(dims);
  std::vector<Vec> cities;
  if (!instance_path.empty())
    cities = load_instance(instance_path).points;
  else if (j.contains("cities"))
    cities = j.at("cities").get<std::vector<Vec>>();
  if (traj.configs.empty() && !cities.empty())
    traj.configs.push_back(Config(cities.front(), Vec(cities.front().size(), 0)));
  write_svg(out_path, traj, cities);
  return 0;
}

int cmd_oracle(const std::string& subject, const std::string& from,
               const std::string& to, const std::string& instance_path,
               i64 xmax, i64 smax, i64 tmax, bool corrupt) {
  // corrupt shifts every closed-form set by one; a negative control
  // proving the comparison actually bites.
  const i64 fudge = corrupt ? 1 : 0;
  bool pass = true;

  if (subject == "sweep1d") {
    for (i64 s = -smax; s <= smax && pass; ++s) {
      i64 wander = smax + tmax;
      oracle::Reach1D layers(0, s, -(xmax + wander * tmax),
                             xmax + wander * tmax, wander, tmax);
      for (i64 dx = -2 * xmax; dx <= 2 * xmax && pass; ++dx)
        for (i64 sp = -smax; sp <= smax && pass; ++sp) {
          Feasible1D f = feasible_1d_core(0, s, dx, sp).shifted(fudge);
          for (i64 t = 0; t <= tmax; ++t)
            if (f.contains(t) != layers.contains(t, dx, sp)) {
              std::cout << "FAIL cost (0," << s << ")->(" << dx << "," << sp
                        << ") at t=" << t << "\n";
              pass = false;
              break;
            }
        }
    }
    std::cout << (pass ? "PASS" : "FAIL") << " sweep1d cost box |x|<=" << xmax
              << " |s|<=" << smax << " t<=" << tmax << "\n";
  } else if (subject == "branching") {
    Config a = parse_config(from), b = parse_config(to);
    auto bounds = oracle::default_bounds({a.p, b.p},
                                         std::max<i64>(8, smax + tmax), tmax);
    auto ref = oracle::feasible_lengths_bfs(a, b, bounds, tmax);
    auto sets = per_dimension_lengths(a, b);
    MultiInterval inter = MultiInterval::intersect(sets).shifted(fudge);
    std::cout << "closed form: " << inter << "\n";
    std::cout << "search:      {";
    for (std::size_t i = 0; i < ref.size(); ++i)
      std::cout << (i ? "," : "") << ref[i];
    std::cout << "} up to t=" << tmax << "\n";
    for (i64 t = 0; t <= tmax; ++t) {
      bool in_ref = std::binary_search(ref.begin(), ref.end(), t);
      if (inter.contains(t) != in_ref) {
        std::cout << "FAIL at t=" << t << "\n";
        pass = false;
      }
    }
    std::cout << (pass ? "PASS" : "FAIL") << " branching\n";
  } else if (subject == "multi") {
    Instance inst = load_instance(instance_path);
    auto bounds = oracle::default_bounds(inst.points, smax, tmax);
    auto ref = oracle::bfs_multipoint(inst, bounds);
    if (!ref) throw resource_error("oracle search exhausted its window");
    SolveResult r = solve(inst, SpeedBoundPolicy::fixed(smax));
    i64 got = r.cost + fudge;
    std::cout << "dp=" << got << " search=" << *ref << "\n";
    pass = got == *ref;
    std::cout << (pass ? "PASS" : "FAIL") << " multi\n";
  } else {
    throw config_error("unknown oracle subject '" + subject + "'");
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trajectory planning in the discrete acceleration model"};
  app.require_subcommand(1);

  std::string from, to, input, out_path, instance_path;
  std::optional<i64> length, hull_margin;
  bool expand_path = false;
  std::string policy = "conservative";
  i64 smax = 8, warm_smax = 5;

  auto* cost = app.add_subcommand("cost", "Minimum branching length");
  cost->add_option("from", from)->required();
  cost->add_option("to", to)->required();

  auto* traj = app.add_subcommand("traj", "Compact branching trajectory");
  traj->add_option("from", from)->required();
  traj->add_option("to", to)->required();
  traj->add_option("--length", length, "Trajectory length (default optimal)");
  traj->add_flag("--expand", expand_path, "Include the expanded point list");

  auto* multi = app.add_subcommand("multi", "Ordered multipoint solver");
  multi->add_option("input", input, "Instance JSON file")->required();
  multi->add_option("--policy", policy, "fixed|conservative|conjecture");
  multi->add_option("--smax", smax, "Speed cap for --policy fixed");
  multi->add_option("--hull-margin", hull_margin,
                    "Confine candidates to the city box plus this margin");
  multi->add_option("--warm-smax", warm_smax, "Warm start speed cap");

  std::string kind = "random";
  i64 gen_n = 10, gen_l = 100, gen_delta = 7;
  int gen_d = 2;
  u64 seed = 1;
  auto* gen = app.add_subcommand("gen", "Write an instance JSON");
  gen->add_option("--kind", kind, "random|slope");
  gen->add_option("--n", gen_n);
  gen->add_option("--box", gen_l, "Box side for random instances");
  gen->add_option("--d", gen_d);
  gen->add_option("--seed", seed);
  gen->add_option("--delta", gen_delta, "Spacing for the slope family");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  std::string sweep = "n", values;
  i64 fixed_n = 10, fixed_l = 100;
  int seeds = 3;
  auto* bench = app.add_subcommand("bench", "CSV runtime sweeps");
  bench->add_option("--sweep", sweep, "n|L");
  bench->add_option("--values", values, "Comma-separated sweep values");
  bench->add_option("--policy", policy, "fixed|conservative|conjecture");
  bench->add_option("--smax", smax);
  bench->add_option("--fixed-n", fixed_n);
  bench->add_option("--fixed-l", fixed_l);
  bench->add_option("--seeds", seeds, "Runs per sweep point");
  bench->add_option("--seed0", seed, "Base seed");

  auto* plot = app.add_subcommand("plot", "Render a 2D trajectory as SVG");
  plot->add_option("traj", input, "Trajectory or solver-result JSON")->required();
  plot->add_option("out", out_path, "SVG output path")->required();
  plot->add_option("--instance", instance_path, "Instance JSON for city markers");

  std::string subject;
  i64 xmax = 30, osmax = 6, tmax = 60;
  bool corrupt = false;
  auto* orc = app.add_subcommand("oracle", "Cross-check against brute force");
  orc->add_option("subject", subject, "sweep1d|branching|multi")->required();
  orc->add_option("--from", from);
  orc->add_option("--to", to);
  orc->add_option("--instance", instance_path);
  orc->add_option("--xmax", xmax);
  orc->add_option("--smax", osmax);
  orc->add_option("--tmax", tmax);
  orc->add_flag("--corrupt", corrupt,
                "Negative control: perturb the closed form");

  try {
    app.parse(argc, argv);
    if (cost->parsed()) return cmd_cost(from, to);
    if (traj->parsed()) return cmd_traj(from, to, length, expand_path);
    if (multi->parsed())
      return cmd_multi(input, policy, smax, hull_margin, warm_smax);
    if (gen->parsed())
      return cmd_gen(kind, gen_n, gen_l, gen_d, seed, gen_delta, out_path);
    if (bench->parsed())
      return cmd_bench(sweep, values, policy, smax, fixed_n, fixed_l, seeds,
                       seed);
    if (plot->parsed()) return cmd_plot(input, out_path, instance_path);
    if (orc->parsed())
      return cmd_oracle(subject, from, to, instance_path, xmax, osmax, tmax,
                        corrupt);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const infeasible_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 4;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
