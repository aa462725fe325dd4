#pragma once

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "racetrack/base.hpp"

namespace racetrack {

/// Floor of sqrt(n) for n >= 0, exact.
inline i64 isqrt(i64 n) {
  if (n < 0) throw domain_error("isqrt: negative argument");
  if (n == 0) return 0;
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

/// Smallest r >= 0 with r*r >= n.
inline i64 ceil_sqrt(i64 n) {
  if (n <= 0) return 0;
  i64 r = isqrt(n);
  return r * r == n ? r : r + 1;
}

inline bool is_perfect_square(i64 n) {
  if (n < 0) return false;
  i64 r = isqrt(n);
  return r * r == n;
}

/// Floor division for possibly negative numerators.
inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

/// gcd of the absolute values of all components; 0 for the zero vector.
inline i64 gcd_abs(const Vec& v) {
  i64 g = 0;
  for (i64 x : v) g = std::gcd(g, static_cast<i64>(std::llabs(x)));
  return g;
}

inline i64 sq(i64 x) { return x * x; }

}  // namespace racetrack
