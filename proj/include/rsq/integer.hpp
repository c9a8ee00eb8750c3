#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace rsq {

/// Unbounded signed integer used by default throughout the library.
using Integer = boost::multiprecision::cpp_int;

/// Fixed-width integers that throw std::overflow_error instead of wrapping.
using CheckedInt128 = boost::multiprecision::checked_int128_t;
using CheckedInt256 = boost::multiprecision::checked_int256_t;

/// Opt-in trait for integer types whose arithmetic is exact: either
/// unbounded, or fixed-width with overflow detection. Builtin integers are
/// deliberately excluded since they wrap silently.
template <class T>
struct is_exact_integer : std::false_type {};
template <>
struct is_exact_integer<Integer> : std::true_type {};
template <>
struct is_exact_integer<CheckedInt128> : std::true_type {};
template <>
struct is_exact_integer<CheckedInt256> : std::true_type {};

template <class T>
concept ExactInteger = is_exact_integer<T>::value;

/// Remainder in [0, m) for m > 0.
template <ExactInteger Int>
Int floor_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

template <ExactInteger Int>
bool divisible(const Int& a, int d) {
  return a % d == 0;
}

/// Largest r >= 0 with r*r <= a. Requires a >= 0.
template <ExactInteger Int>
Int isqrt(const Int& a) {
  if (a < 0) throw std::domain_error("isqrt of negative value");
  if (a < 2) return a;
  // Newton iteration from above converges monotonically to floor(sqrt(a)).
  Int x = a;
  Int y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + a / x) / 2;
  }
  return x;
}

/// Parses an optionally signed decimal literal. Returns nullopt on anything
/// else (empty, embedded spaces, hex, trailing junk).
template <ExactInteger Int = Integer>
std::optional<Int> parse_integer(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) return std::nullopt;
  Int value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return negative ? Int(-value) : value;
}

template <ExactInteger Int>
std::string to_string(const Int& value) {
  return value.str();
}

/// Converts to a builtin integer, or nullopt when out of range.
template <std::integral Out, ExactInteger Int>
std::optional<Out> narrow(const Int& value) {
  if (value < std::numeric_limits<Out>::min() || value > std::numeric_limits<Out>::max()) {
    return std::nullopt;
  }
  return value.template convert_to<Out>();
}

}  // namespace rsq
