#pragma once

// Arithmetic in the Lipschitz order Z + Zi + Zj + Zk, together with the map
// f(q) = q(1 - i - j - k), its inverse on the image, and the two membership
// tests used by the restricted four-square pipeline.

#include "rsq/integer.hpp"

#include <array>
#include <optional>
#include <ostream>

namespace rsq {

template <ExactInteger Int = Integer>
struct Quaternion {
  Int a0 = 0;  // 1
  Int a1 = 0;  // i
  Int a2 = 0;  // j
  Int a3 = 0;  // k

  friend bool operator==(const Quaternion&, const Quaternion&) = default;

  Quaternion& operator+=(const Quaternion& o) {
    a0 += o.a0;
    a1 += o.a1;
    a2 += o.a2;
    a3 += o.a3;
    return *this;
  }
  friend Quaternion operator+(Quaternion x, const Quaternion& y) { return x += y; }

  std::array<Int, 4> components() const { return {a0, a1, a2, a3}; }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.a0 << ',' << q.a1 << ',' << q.a2 << ',' << q.a3 << ')';
  }
};

/// Hamilton product x * y (non-commutative: ij = k, ji = -k).
template <ExactInteger Int>
Quaternion<Int> mul(const Quaternion<Int>& x, const Quaternion<Int>& y) {
  return {
      Int(x.a0 * y.a0 - x.a1 * y.a1 - x.a2 * y.a2 - x.a3 * y.a3),
      Int(x.a0 * y.a1 + x.a1 * y.a0 + x.a2 * y.a3 - x.a3 * y.a2),
      Int(x.a0 * y.a2 - x.a1 * y.a3 + x.a2 * y.a0 + x.a3 * y.a1),
      Int(x.a0 * y.a3 + x.a1 * y.a2 - x.a2 * y.a1 + x.a3 * y.a0),
  };
}

template <ExactInteger Int>
Quaternion<Int> operator*(const Quaternion<Int>& x, const Quaternion<Int>& y) {
  return mul(x, y);
}

/// Reduced norm: sum of the squared coordinates.
template <ExactInteger Int>
Int norm(const Quaternion<Int>& q) {
  return q.a0 * q.a0 + q.a1 * q.a1 + q.a2 * q.a2 + q.a3 * q.a3;
}

/// Sum of the coordinates.
template <ExactInteger Int>
Int phi(const Quaternion<Int>& q) {
  return q.a0 + q.a1 + q.a2 + q.a3;
}

/// 1 - i - j - k
template <ExactInteger Int = Integer>
Quaternion<Int> f_multiplier() {
  return {1, -1, -1, -1};
}

/// 1 + i + j + k, which is 4 * (1 - i - j - k)^-1.
template <ExactInteger Int = Integer>
Quaternion<Int> f_inverse_multiplier() {
  return {1, 1, 1, 1};
}

/// f(q) = q * (1 - i - j - k). Real part of the result is phi(q); norm is 4 * norm(q).
template <ExactInteger Int>
Quaternion<Int> f_map(const Quaternion<Int>& q) {
  return mul(q, f_multiplier<Int>());
}

/// Inverse of f_map on its image: b * (1 + i + j + k) / 4 when that quotient is
/// integral, nullopt otherwise. Some result exactly when b lies in f(R).
template <ExactInteger Int>
std::optional<Quaternion<Int>> try_unmap(const Quaternion<Int>& b) {
  Quaternion<Int> p = mul(b, f_inverse_multiplier<Int>());
  if (!divisible(p.a0, 4) || !divisible(p.a1, 4) || !divisible(p.a2, 4) || !divisible(p.a3, 4)) {
    return std::nullopt;
  }
  return Quaternion<Int>{Int(p.a0 / 4), Int(p.a1 / 4), Int(p.a2 / 4), Int(p.a3 / 4)};
}

/// Membership in X = { b : norm(b) == 4 * Re(b) (mod 8) }.
template <ExactInteger Int>
bool in_X(const Quaternion<Int>& b) {
  return floor_mod<Int>(norm(b) - 4 * b.a0, Int(8)) == 0;
}

/// Coordinate description of f(R): for every index m, the sum of the other
/// three coordinates is congruent to coordinate m modulo 4.
template <ExactInteger Int>
bool in_fR_congruence(const Quaternion<Int>& b) {
  const Int total = phi(b);
  for (const Int& c : b.components()) {
    // (total - c) - c
    if (!divisible(Int(total - 2 * c), 4)) return false;
  }
  return true;
}

}  // namespace rsq
