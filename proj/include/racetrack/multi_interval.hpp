#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <span>

#include "racetrack/base.hpp"

namespace racetrack {

/// Closed integer interval [lo, hi].
struct Interval {
  i64 lo = 0;
  i64 hi = -1;

  bool empty() const { return lo > hi; }
  bool contains(i64 t) const { return lo <= t && t <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Disjoint union of closed integer intervals with an optional unbounded
/// tail [tail, inf). Kept canonical: components sorted, pairwise gaps of
/// at least 2, tail merged with any component it touches.
class MultiInterval {
 public:
  MultiInterval() = default;

  static MultiInterval from_tail(i64 lo) {
    MultiInterval m;
    m.tail_ = lo;
    return m;
  }

  void add(Interval iv) {
    if (iv.empty()) return;
    bounded_.push_back(iv);
    canonicalize();
  }

  void add_tail(i64 lo) {
    if (!tail_ || *tail_ > lo) tail_ = lo;
    canonicalize();
  }

  const std::vector<Interval>& bounded() const { return bounded_; }
  const std::optional<i64>& tail() const { return tail_; }

  bool empty() const { return bounded_.empty() && !tail_; }

  std::size_t component_count() const {
    return bounded_.size() + (tail_ ? 1 : 0);
  }

  bool contains(i64 t) const {
    if (tail_ && t >= *tail_) return true;
    auto it = std::upper_bound(bounded_.begin(), bounded_.end(), t,
                               [](i64 x, const Interval& iv) { return x < iv.lo; });
    if (it == bounded_.begin()) return false;
    return std::prev(it)->contains(t);
  }

  /// Smallest element; throws on the empty set.
  i64 min() const {
    if (!bounded_.empty()) return bounded_.front().lo;
    if (tail_) return *tail_;
    throw domain_error("MultiInterval::min: empty set");
  }

  /// Smallest element >= t, if any.
  std::optional<i64> next(i64 t) const {
    std::optional<i64> best;
    for (const auto& iv : bounded_) {
      if (iv.hi < t) continue;
      best = std::max(iv.lo, t);
      break;
    }
    if (tail_) {
      i64 cand = std::max(*tail_, t);
      if (!best || cand < *best) best = cand;
    }
    return best;
  }

  /// All bounds shifted by k.
  MultiInterval shifted(i64 k) const {
    MultiInterval m;
    m.bounded_ = bounded_;
    for (auto& iv : m.bounded_) {
      iv.lo += k;
      iv.hi += k;
    }
    if (tail_) m.tail_ = *tail_ + k;
    return m;
  }

  /// Intersection of several multi-intervals by endpoint sort + scan.
  static MultiInterval intersect(std::span<const MultiInterval> sets) {
    if (sets.empty()) throw invalid_input_error("intersect: no operands");
    if (sets.size() == 1) return sets.front();
    struct Event {
      i64 at;
      int delta;
    };
    std::vector<Event> events;
    for (const auto& s : sets) {
      for (const auto& iv : s.bounded_) {
        events.push_back({iv.lo, +1});
        events.push_back({iv.hi + 1, -1});
      }
      if (s.tail_) events.push_back({*s.tail_, +1});
    }
    std::sort(events.begin(), events.end(),
              [](const Event& a, const Event& b) {
                if (a.at != b.at) return a.at < b.at;
                return a.delta > b.delta;
              });
    const int need = static_cast<int>(sets.size());
    MultiInterval out;
    int active = 0;
    std::optional<i64> run_start;
    std::size_t i = 0;
    while (i < events.size()) {
      i64 at = events[i].at;
      while (i < events.size() && events[i].at == at) {
        active += events[i].delta;
        ++i;
      }
      if (active == need && !run_start) {
        run_start = at;
      } else if (active < need && run_start) {
        out.bounded_.push_back({*run_start, at - 1});
        run_start.reset();
      }
    }
    // Coverage persisting past the last event means every operand had its
    // tail open, so the intersection is unbounded too.
    if (run_start) out.tail_ = *run_start;
    out.canonicalize();
    return out;
  }

  static MultiInterval intersect(const std::vector<MultiInterval>& sets) {
    return intersect(std::span<const MultiInterval>(sets));
  }

  friend bool operator==(const MultiInterval&, const MultiInterval&) = default;

  friend std::ostream& operator<<(std::ostream& os, const MultiInterval& m) {
    bool first = true;
    for (const auto& iv : m.bounded_) {
      if (!first) os << " u ";
      os << '[' << iv.lo << ',' << iv.hi << ']';
      first = false;
    }
    if (m.tail_) {
      if (!first) os << " u ";
      os << '[' << *m.tail_ << ",inf)";
      first = false;
    }
    if (first) os << "{}";
    return os;
  }

 private:
  void canonicalize() {
    std::sort(bounded_.begin(), bounded_.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (const auto& iv : bounded_) {
      if (iv.empty()) continue;
      if (!merged.empty() && iv.lo <= merged.back().hi + 1)
        merged.back().hi = std::max(merged.back().hi, iv.hi);
      else
        merged.push_back(iv);
    }
    if (tail_) {
      while (!merged.empty() && merged.back().hi + 1 >= *tail_) {
        tail_ = std::min(*tail_, merged.back().lo);
        merged.pop_back();
      }
    }
    bounded_ = std::move(merged);
  }

  std::vector<Interval> bounded_;
  std::optional<i64> tail_;
};

}  // namespace racetrack
