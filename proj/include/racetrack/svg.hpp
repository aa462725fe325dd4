#pragma once

#include <fstream>
#include <sstream>

#include "racetrack/kinematics.hpp"
#include "racetrack/multipoint_types.hpp"

namespace racetrack {

/// Renders a 2D trajectory over its city list as an SVG drawing: light
/// grid, numbered city markers, and one arrow per velocity vector.
inline std::string trajectory_svg(const Trajectory& traj,
                                  const std::vector<Vec>& cities) {
  if (!traj.configs.empty() && traj.configs.front().dim() != 2)
    throw invalid_input_error("trajectory_svg: only d = 2 supported");
  for (const auto& c : cities)
    if (c.size() != 2)
      throw invalid_input_error("trajectory_svg: only d = 2 supported");

  i64 xlo = 0, xhi = 1, ylo = 0, yhi = 1;
  bool first = true;
  auto grow = [&](i64 x, i64 y) {
    if (first) {
      xlo = xhi = x;
      ylo = yhi = y;
      first = false;
    } else {
      xlo = std::min(xlo, x);
      xhi = std::max(xhi, x);
      ylo = std::min(ylo, y);
      yhi = std::max(yhi, y);
    }
  };
  for (const auto& c : cities) grow(c[0], c[1]);
  for (const auto& c : traj.configs) grow(c.p[0], c.p[1]);
  xlo -= 2, ylo -= 2, xhi += 2, yhi += 2;

  const double unit = 24.0;
  auto px = [&](i64 x) { return (x - xlo) * unit; };
  auto py = [&](i64 y) { return (yhi - y) * unit; };  // flip y for screen space

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
    << (xhi - xlo) * unit << "\" height=\"" << (yhi - ylo) * unit << "\">\n";
  s << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\""
       " markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
       "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#c0392b\"/></marker></defs>\n";
  for (i64 x = xlo; x <= xhi; ++x)
    s << "<line x1=\"" << px(x) << "\" y1=\"" << py(ylo) << "\" x2=\"" << px(x)
      << "\" y2=\"" << py(yhi) << "\" stroke=\"#eeeeee\"/>\n";
  for (i64 y = ylo; y <= yhi; ++y)
    s << "<line x1=\"" << px(xlo) << "\" y1=\"" << py(y) << "\" x2=\""
      << px(xhi) << "\" y2=\"" << py(y) << "\" stroke=\"#eeeeee\"/>\n";

  for (std::size_t i = 1; i < traj.configs.size(); ++i) {
    const auto& a = traj.configs[i - 1].p;
    const auto& b = traj.configs[i].p;
    s << "<line x1=\"" << px(a[0]) << "\" y1=\"" << py(a[1]) << "\" x2=\""
      << px(b[0]) << "\" y2=\"" << py(b[1])
      << "\" stroke=\"#c0392b\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
  }

  for (std::size_t i = 0; i < cities.size(); ++i) {
    s << "<circle cx=\"" << px(cities[i][0]) << "\" cy=\"" << py(cities[i][1])
      << "\" r=\"4\" fill=\"#2c3e50\"/>\n";
    s << "<text x=\"" << px(cities[i][0]) + 6 << "\" y=\""
      << py(cities[i][1]) - 6 << "\" font-size=\"11\" fill=\"#2c3e50\">" << i + 1
      << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

inline void write_svg(const std::string& path, const Trajectory& traj,
                      const std::vector<Vec>& cities) {
  std::ofstream out(path);
  if (!out) throw invalid_input_error("write_svg: cannot open " + path);
  out << trajectory_svg(traj, cities);
}

}  // namespace racetrack
