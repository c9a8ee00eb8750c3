#pragma once

// Brute-force ground truth for restricted four-square representations.
// Written against the two defining constraints only; nothing here touches
// the quaternion machinery or the solver.

#include "rsq/errors.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rsq::oracle {

using Quadruple = std::array<std::int64_t, 4>;

inline constexpr std::int64_t kDefaultOracleBound = 1'000'000;

namespace detail {

inline std::int64_t isqrt(std::int64_t a) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= a) ++r;
  return r;
}

}  // namespace detail

/// All quadruples with a0^2 + ... + a3^2 == n and a0 + ... + a3 == T, in
/// lexicographic order, stopping after `limit` entries when given.
/// Negative n yields an empty list. Throws CapacityError for n > bound.
inline std::vector<Quadruple> enumerate(std::int64_t n, std::int64_t T,
                                        std::optional<std::size_t> limit = std::nullopt,
                                        std::int64_t bound = kDefaultOracleBound) {
  if (n > bound) {
    throw CapacityError("oracle refused: n = " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  }
  std::vector<Quadruple> out;
  if (n < 0 || (limit && *limit == 0)) return out;

  const std::int64_t r0 = detail::isqrt(n);
  // |T| <= 2 sqrt(n) for any solution; skipping also keeps a3 bounded.
  if (T * T > 4 * n) return out;
  for (std::int64_t a0 = -r0; a0 <= r0; ++a0) {
    const std::int64_t left0 = n - a0 * a0;
    const std::int64_t r1 = detail::isqrt(left0);
    for (std::int64_t a1 = -r1; a1 <= r1; ++a1) {
      const std::int64_t left1 = left0 - a1 * a1;
      const std::int64_t r2 = detail::isqrt(left1);
      for (std::int64_t a2 = -r2; a2 <= r2; ++a2) {
        const std::int64_t a3 = T - a0 - a1 - a2;
        if (a3 * a3 != left1 - a2 * a2) continue;
        out.push_back({a0, a1, a2, a3});
        if (limit && out.size() >= *limit) return out;
      }
    }
  }
  return out;
}

inline bool exists(std::int64_t n, std::int64_t T, std::int64_t bound = kDefaultOracleBound) {
  return !enumerate(n, T, 1, bound).empty();
}

/// Quadruples with squared sum n and no constraint on the coordinate sum.
inline std::vector<Quadruple> enumerate_unrestricted(std::int64_t n) {
  std::vector<Quadruple> out;
  if (n < 0) return out;
  const std::int64_t r = detail::isqrt(n);
  for (std::int64_t a0 = -r; a0 <= r; ++a0)
    for (std::int64_t a1 = -r; a1 <= r; ++a1)
      for (std::int64_t a2 = -r; a2 <= r; ++a2)
        for (std::int64_t a3 = -r; a3 <= r; ++a3)
          if (a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 == n) out.push_back({a0, a1, a2, a3});
  return out;
}

/// Brute-force three-square test: some 0 <= b1 <= b2 <= b3 with squared sum m.
inline bool three_square_exists(std::int64_t m) {
  if (m < 0) return false;
  for (std::int64_t b1 = 0; 3 * b1 * b1 <= m; ++b1)
    for (std::int64_t b2 = b1; b1 * b1 + 2 * b2 * b2 <= m; ++b2) {
      const std::int64_t rest = m - b1 * b1 - b2 * b2;
      const std::int64_t b3 = detail::isqrt(rest);
      if (b3 * b3 == rest) return true;
    }
  return false;
}

/// table[m] is true iff m <= max_m is a sum of three squares, by marking
/// every sorted triple with squared sum at most max_m.
inline std::vector<bool> three_square_table(std::int64_t max_m) {
  std::vector<bool> table(static_cast<std::size_t>(max_m < 0 ? 0 : max_m + 1), false);
  for (std::int64_t b1 = 0; 3 * b1 * b1 <= max_m; ++b1)
    for (std::int64_t b2 = b1; b1 * b1 + 2 * b2 * b2 <= max_m; ++b2)
      for (std::int64_t b3 = b2; b1 * b1 + b2 * b2 + b3 * b3 <= max_m; ++b3)
        table[static_cast<std::size_t>(b1 * b1 + b2 * b2 + b3 * b3)] = true;
  return table;
}

}  // namespace rsq::oracle
