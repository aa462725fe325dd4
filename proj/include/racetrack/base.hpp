#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace racetrack {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using Vec = std::vector<i64>;

/// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, unvisited point, bad literal.
struct invalid_input_error : error {
  using error::error;
};

/// Argument outside the mathematical domain of an operation.
struct domain_error : error {
  using error::error;
};

/// Requested trajectory length (or instance) admits no solution.
struct infeasible_error : error {
  using error::error;
};

/// Search exceeded its configured state or memory budget.
struct resource_error : error {
  using error::error;
};

/// Missing or inconsistent solver configuration.
struct config_error : error {
  using error::error;
};

inline void require_same_dim(const Vec& a, const Vec& b, const char* what) {
  if (a.size() != b.size())
    throw invalid_input_error(std::string(what) + ": dimension mismatch");
}

}  // namespace racetrack
