#pragma once

#include "rsq/errors.hpp"
#include "rsq/integer.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace rsq {

/// Default bound on m for represent_three_square.
inline constexpr std::uint64_t kDefaultSearchCap = 100'000'000;

/// Largest accepted search cap; keeps every intermediate sum of squares
/// inside 64 bits.
inline constexpr std::uint64_t kMaxSearchCap = std::uint64_t{1} << 62;

/// b1^2 + b2^2 + b3^2 with 0 <= b1 <= b2 <= b3.
template <ExactInteger Int = Integer>
struct ThreeSquareTriple {
  Int b1 = 0;
  Int b2 = 0;
  Int b3 = 0;

  friend bool operator==(const ThreeSquareTriple&, const ThreeSquareTriple&) = default;

  Int value() const { return b1 * b1 + b2 * b2 + b3 * b3; }

  friend std::ostream& operator<<(std::ostream& os, const ThreeSquareTriple& t) {
    return os << '(' << t.b1 << ',' << t.b2 << ',' << t.b3 << ')';
  }
};

/// Legendre's criterion: m >= 0 is a sum of three squares unless it has the
/// form 4^a (8b + 7).
template <ExactInteger Int>
bool is_three_square(Int m) {
  if (m < 0) return false;
  if (m == 0) return true;
  while (divisible(m, 4)) m /= 4;
  return m % 8 != 7;
}

namespace detail {

inline std::uint64_t isqrt_u64(std::uint64_t a) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(a)));
  while (r * r > a) --r;
  while ((r + 1) * (r + 1) <= a) ++r;
  return r;
}

/// Lexicographically smallest sorted triple for m, or nullopt if none.
/// m <= kMaxSearchCap.
inline std::optional<std::array<std::uint64_t, 3>> smallest_three_square(std::uint64_t m) {
  for (std::uint64_t b1 = 0; 3 * b1 * b1 <= m; ++b1) {
    for (std::uint64_t b2 = b1; b1 * b1 + 2 * b2 * b2 <= m; ++b2) {
      const std::uint64_t rest = m - b1 * b1 - b2 * b2;
      const std::uint64_t b3 = isqrt_u64(rest);
      if (b3 * b3 == rest) return std::array{b1, b2, b3};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Exhaustive search for the lexicographically smallest sorted triple with
/// squared sum m. Returns nullopt when m is not a sum of three squares and
/// throws CapacityError when it is but m > search_cap.
template <ExactInteger Int>
std::optional<ThreeSquareTriple<Int>> represent_three_square(const Int& m,
                                                             std::uint64_t search_cap = kDefaultSearchCap) {
  if (search_cap == 0 || search_cap > kMaxSearchCap) {
    throw std::invalid_argument("search cap must be in [1, 2^62]");
  }
  if (!is_three_square(m)) return std::nullopt;
  if (m > search_cap) {
    throw CapacityError("three-square search refused: m = " + to_string(m) + " exceeds search cap " +
                        std::to_string(search_cap));
  }
  auto found = detail::smallest_three_square(m.template convert_to<std::uint64_t>());
  if (!found) {
    throw ContractViolation("no three-square witness for m = " + to_string(m) +
                            " although the criterion holds");
  }
  return ThreeSquareTriple<Int>{Int((*found)[0]), Int((*found)[1]), Int((*found)[2])};
}

}  // namespace rsq
