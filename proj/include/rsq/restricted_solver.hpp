#pragma once

// Decides whether n = a0^2 + a1^2 + a2^2 + a3^2 has a solution with
// a0 + a1 + a2 + a3 = T, and constructs one by running the chain
//
//   4n - T^2 = b1^2 + b2^2 + b3^2
//   -> beta' = T + b1 i + b2 j + b3 k, a member of X
//   -> beta  = beta' with the signs of b1, b2, b3 adjusted into f(R)
//   -> alpha = beta (1 + i + j + k) / 4, so f(alpha) = beta
//
// Since Re f(alpha) = phi(alpha) and N f(alpha) = 4 N(alpha), alpha answers
// the instance.

#include "rsq/errors.hpp"
#include "rsq/integer.hpp"
#include "rsq/quaternion.hpp"
#include "rsq/three_squares.hpp"

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace rsq {

template <ExactInteger Int = Integer>
struct RestrictedTarget {
  Int n = 0;
  Int T = 0;

  friend bool operator==(const RestrictedTarget&, const RestrictedTarget&) = default;
};

template <ExactInteger Int = Integer>
struct Representation {
  std::array<Int, 4> a{};

  friend bool operator==(const Representation&, const Representation&) = default;

  Int sum_of_squares() const { return a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]; }
  Int sum() const { return a[0] + a[1] + a[2] + a[3]; }

  friend std::ostream& operator<<(std::ostream& os, const Representation& r) {
    return os << '(' << r.a[0] << ',' << r.a[1] << ',' << r.a[2] << ',' << r.a[3] << ')';
  }
};

/// Why an instance has no representation.
enum class Reason {
  criterion,  // 4n - T^2 has the shape 4^a (8b + 7)
  parity,     // n and T differ mod 2
  range,      // n < 0 or T^2 > 4n
};

inline std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::criterion:
      return "criterion";
    case Reason::parity:
      return "parity";
    case Reason::range:
      return "range";
  }
  return "?";
}

template <ExactInteger Int = Integer>
struct Verdict {
  bool representable = false;
  std::optional<Reason> reason;  // set iff !representable
  Int m = 0;                     // 4n - T^2, always filled
};

/// Decision with the reason attached. Checks, in order: n < 0 (range),
/// n != T mod 2 (parity), T^2 > 4n (range), then the three-square criterion.
template <ExactInteger Int>
Verdict<Int> classify(const RestrictedTarget<Int>& t) {
  Verdict<Int> v;
  v.m = 4 * t.n - t.T * t.T;
  if (t.n < 0) {
    v.reason = Reason::range;
  } else if (floor_mod<Int>(t.n - t.T, Int(2)) != 0) {
    v.reason = Reason::parity;
  } else if (v.m < 0) {
    v.reason = Reason::range;
  } else if (!is_three_square(v.m)) {
    v.reason = Reason::criterion;
  } else {
    v.representable = true;
  }
  return v;
}

template <ExactInteger Int>
bool decide(const RestrictedTarget<Int>& t) {
  return classify(t).representable;
}

/// beta' = T + b1 i + b2 j + b3 k. Throws ContractViolation unless beta' is in X.
template <ExactInteger Int>
Quaternion<Int> lift_to_X(const Int& T, const ThreeSquareTriple<Int>& triple) {
  Quaternion<Int> beta{T, triple.b1, triple.b2, triple.b3};
  if (!in_X(beta)) {
    throw ContractViolation("lift_to_X: " + to_string(T) + " with triple of value " + to_string(triple.value()) +
                            " is not in X");
  }
  return beta;
}

/// Flips signs of the i, j, k coordinates (never the real part) until the
/// result lies in f(R). Patterns are tried in the order +++, ++-, +-+, +--,
/// -++, -+-, --+, ---. Every member of X has at least one working pattern.
template <ExactInteger Int>
Quaternion<Int> fix_signs(const Quaternion<Int>& b) {
  for (int pattern = 0; pattern < 8; ++pattern) {
    Quaternion<Int> candidate = b;
    if (pattern & 4) candidate.a1 = -candidate.a1;
    if (pattern & 2) candidate.a2 = -candidate.a2;
    if (pattern & 1) candidate.a3 = -candidate.a3;
    if (in_fR_congruence(candidate)) return candidate;
  }
  throw ContractViolation("fix_signs: no sign pattern of " + to_string(b.a1) + ", " + to_string(b.a2) + ", " +
                          to_string(b.a3) + " lands in f(R)");
}

/// Intermediate values of one solve() run, exposed for tracing.
template <ExactInteger Int = Integer>
struct SolveTrace {
  Int m;
  ThreeSquareTriple<Int> triple;
  Quaternion<Int> lifted;  // beta'
  Quaternion<Int> fixed;   // beta
  Representation<Int> representation;
};

/// Runs the full pipeline. nullopt when the instance is unrepresentable;
/// propagates CapacityError from the three-square search.
template <ExactInteger Int>
std::optional<SolveTrace<Int>> solve_traced(const RestrictedTarget<Int>& t,
                                            std::uint64_t search_cap = kDefaultSearchCap) {
  const Verdict<Int> verdict = classify(t);
  if (!verdict.representable) return std::nullopt;

  auto triple = represent_three_square(verdict.m, search_cap);
  if (!triple) throw ContractViolation("solve: criterion holds but no triple for m = " + to_string(verdict.m));

  SolveTrace<Int> trace{verdict.m, *triple, {}, {}, {}};
  trace.lifted = lift_to_X(t.T, *triple);
  trace.fixed = fix_signs(trace.lifted);
  auto alpha = try_unmap(trace.fixed);
  if (!alpha) throw ContractViolation("solve: sign-fixed quaternion does not unmap");
  trace.representation = Representation<Int>{alpha->components()};

  if (trace.representation.sum_of_squares() != t.n || trace.representation.sum() != t.T) {
    throw ContractViolation("solve: output fails the identities for n = " + to_string(t.n) +
                            ", T = " + to_string(t.T));
  }
  return trace;
}

template <ExactInteger Int>
std::optional<Representation<Int>> solve(const RestrictedTarget<Int>& t,
                                         std::uint64_t search_cap = kDefaultSearchCap) {
  auto trace = solve_traced(t, search_cap);
  if (!trace) return std::nullopt;
  return trace->representation;
}

}  // namespace rsq
