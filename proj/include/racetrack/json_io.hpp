#pragma once

#include <json.hpp>

#include "racetrack/compact.hpp"
#include "racetrack/multi_interval.hpp"
#include "racetrack/multipoint.hpp"

namespace racetrack {

using nlohmann::json;

inline void to_json(json& j, const Config& c) {
  j = json{{"p", c.p}, {"v", c.v}};
}

inline void from_json(const json& j, Config& c) {
  c = Config(j.at("p").get<Vec>(), j.at("v").get<Vec>());
}

inline void to_json(json& j, const CompactTrajectory& ct) {
  json segs = json::array();
  for (const auto& s : ct.segments)
    segs.push_back(json::array({std::string(1, action_char(s.action)), s.count}));
  j = json{{"start", ct.start_config()}, {"segments", segs}};
}

inline void from_json(const json& j, CompactTrajectory& ct) {
  Config start = j.at("start").get<Config>();
  if (start.dim() != 1)
    throw invalid_input_error("CompactTrajectory: start must be 1D");
  ct = CompactTrajectory{};
  ct.start_x = start.p[0];
  ct.start_v = start.v[0];
  for (const auto& seg : j.at("segments")) {
    std::string a = seg.at(0).get<std::string>();
    if (a.size() != 1) throw invalid_input_error("CompactTrajectory: bad action");
    ct.append(action_from_char(a[0]), seg.at(1).get<i64>());
  }
}

inline void to_json(json& j, const MultiInterval& m) {
  json bounded = json::array();
  for (const auto& iv : m.bounded()) bounded.push_back(json::array({iv.lo, iv.hi}));
  j = json{{"bounded", bounded}};
  if (m.tail()) j["tail"] = *m.tail();
}

inline void from_json(const json& j, MultiInterval& m) {
  m = MultiInterval{};
  if (j.contains("tail") && !j.at("tail").is_null())
    m.add_tail(j.at("tail").get<i64>());
  for (const auto& iv : j.at("bounded"))
    m.add({iv.at(0).get<i64>(), iv.at(1).get<i64>()});
}

inline void to_json(json& j, const Instance& inst) {
  j = json{{"d", inst.d}, {"points", inst.points}, {"tour", inst.tour}};
}

inline void from_json(const json& j, Instance& inst) {
  inst = Instance(j.at("d").get<int>(), j.at("points").get<std::vector<Vec>>(),
                  j.value("tour", false));
}

inline void to_json(json& j, const SolveResult& r) {
  json path = json::array();
  for (const auto& c : r.trajectory.configs) path.push_back(c.p);
  j = json{{"cost", r.cost},
           {"exact", r.exact},
           {"warm_start", r.warm_start},
           {"smax", r.smax},
           {"candidates", r.candidate_count},
           {"visiting", r.visiting},
           {"compact", r.compact},
           {"path", path}};
}

}  // namespace racetrack
