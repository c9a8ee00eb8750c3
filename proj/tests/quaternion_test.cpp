#include "rsq/quaternion.hpp"

#include <gtest/gtest.h>

#include <array>
#include <random>

namespace {

using rsq::Integer;
using Q = rsq::Quaternion<Integer>;

Q q(long a0, long a1, long a2, long a3) { return Q{a0, a1, a2, a3}; }

// Product via the multiplication table of the basis 1, i, j, k:
// e_p * e_q = kSign[p][q] * e_{kIndex[p][q]}.
constexpr int kIndex[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};

Q table_product(const Q& x, const Q& y) {
  auto xs = x.components();
  auto ys = y.components();
  std::array<Integer, 4> r{};
  for (int p = 0; p < 4; ++p)
    for (int s = 0; s < 4; ++s) r[kIndex[p][s]] += kSign[p][s] * xs[p] * ys[s];
  return Q{r[0], r[1], r[2], r[3]};
}

template <class Fn>
void for_each_in_box(int lo, int hi, Fn&& fn) {
  for (int a0 = lo; a0 <= hi; ++a0)
    for (int a1 = lo; a1 <= hi; ++a1)
      for (int a2 = lo; a2 <= hi; ++a2)
        for (int a3 = lo; a3 <= hi; ++a3) fn(q(a0, a1, a2, a3));
}

Q random_q(std::mt19937& rng, int lo = -100, int hi = 100) {
  std::uniform_int_distribution<int> d(lo, hi);
  return q(d(rng), d(rng), d(rng), d(rng));
}

TEST(Mul, BasisRelations) {
  const Q one = q(1, 0, 0, 0), i = q(0, 1, 0, 0), j = q(0, 0, 1, 0), k = q(0, 0, 0, 1);
  EXPECT_EQ(rsq::mul(i, j), k);
  EXPECT_EQ(rsq::mul(j, i), q(0, 0, 0, -1));
  EXPECT_EQ(rsq::mul(j, k), i);
  EXPECT_EQ(rsq::mul(k, i), j);
  EXPECT_EQ(rsq::mul(i, i), q(-1, 0, 0, 0));
  EXPECT_EQ(rsq::mul(one, q(3, -2, 7, 5)), q(3, -2, 7, 5));
  EXPECT_EQ(rsq::mul(q(3, -2, 7, 5), one), q(3, -2, 7, 5));
}

TEST(Mul, OnePlusIJKTimesConjugate) { EXPECT_EQ(rsq::mul(q(1, 1, 1, 1), q(1, -1, -1, -1)), q(4, 0, 0, 0)); }

TEST(Mul, AgreesWithBasisTable) {
  std::mt19937 rng(12345);
  for (int t = 0; t < 2000; ++t) {
    Q x = random_q(rng), y = random_q(rng);
    ASSERT_EQ(rsq::mul(x, y), table_product(x, y)) << x << " * " << y;
  }
}

TEST(Mul, NormIsMultiplicative) {
  std::mt19937 rng(7);
  for (int t = 0; t < 2000; ++t) {
    Q x = random_q(rng), y = random_q(rng);
    ASSERT_EQ(rsq::norm(rsq::mul(x, y)), rsq::norm(x) * rsq::norm(y));
  }
}

TEST(Mul, AssociativeAndDistributive) {
  std::mt19937 rng(99);
  for (int t = 0; t < 1000; ++t) {
    Q x = random_q(rng), y = random_q(rng), z = random_q(rng);
    ASSERT_EQ(rsq::mul(rsq::mul(x, y), z), rsq::mul(x, rsq::mul(y, z)));
    ASSERT_EQ(rsq::mul(x, y + z), rsq::mul(x, y) + rsq::mul(x, z));
    ASSERT_EQ(rsq::mul(x + y, z), rsq::mul(x, z) + rsq::mul(y, z));
  }
}

TEST(Norm, Examples) {
  EXPECT_EQ(rsq::norm(q(0, 0, 0, 0)), 0);
  EXPECT_EQ(rsq::norm(q(1, 1, 1, 1)), 4);
  EXPECT_EQ(rsq::norm(q(2, 1, -1, -1)), 7);
}

TEST(Norm, ZeroOnlyAtZero) {
  for_each_in_box(-2, 2, [](const Q& x) { ASSERT_EQ(rsq::norm(x) == 0, x == Q{}); });
}

TEST(Phi, Examples) {
  EXPECT_EQ(rsq::phi(q(0, 0, 0, 0)), 0);
  EXPECT_EQ(rsq::phi(q(2, 1, -1, -1)), 1);
  EXPECT_EQ(rsq::phi(q(1, -5, 1, 1)), -2);
}

TEST(Phi, ParityMatchesNorm) {
  for_each_in_box(-6, 6, [](const Q& x) { ASSERT_EQ(rsq::floor_mod<Integer>(rsq::norm(x) - rsq::phi(x), 2), 0) << x; });
}

TEST(FMap, Examples) {
  EXPECT_EQ(rsq::f_map(q(0, 0, 0, 0)), q(0, 0, 0, 0));
  EXPECT_EQ(rsq::f_map(q(1, 0, 0, 0)), q(1, -1, -1, -1));
  EXPECT_EQ(rsq::f_map(q(0, 1, 0, 1)), q(2, 2, 0, 0));
}

TEST(FMap, RightMultiplicationNotLeft) {
  // i(1-i-j-k) = (1, 1, 1, -1), while (1-i-j-k)i = (1, 1, -1, 1).
  EXPECT_EQ(rsq::f_map(q(0, 1, 0, 0)), q(1, 1, 1, -1));
  EXPECT_NE(rsq::f_map(q(0, 1, 0, 0)), rsq::mul(rsq::f_multiplier<Integer>(), q(0, 1, 0, 0)));
}

TEST(FMap, IdentitiesContainmentAndRoundTrip) {
  for_each_in_box(-4, 4, [](const Q& x) {
    const Q image = rsq::f_map(x);
    ASSERT_EQ(image.a0, rsq::phi(x)) << x;
    ASSERT_EQ(rsq::norm(image), 4 * rsq::norm(x)) << x;
    ASSERT_TRUE(rsq::in_X(image)) << x;
    ASSERT_TRUE(rsq::in_fR_congruence(image)) << x;
    auto back = rsq::try_unmap(image);
    ASSERT_TRUE(back.has_value()) << x;
    ASSERT_EQ(*back, x);
  });
}

TEST(TryUnmap, Examples) {
  EXPECT_EQ(rsq::try_unmap(q(0, 0, 0, 0)), q(0, 0, 0, 0));
  EXPECT_EQ(rsq::try_unmap(q(2, 2, 0, 0)), q(0, 1, 0, 1));
  EXPECT_EQ(rsq::try_unmap(q(1, 0, 0, 0)), std::nullopt);
}

TEST(InX, Examples) {
  EXPECT_TRUE(rsq::in_X(q(0, 0, 0, 0)));
  EXPECT_TRUE(rsq::in_X(q(1, 1, 1, 1)));
  EXPECT_FALSE(rsq::in_X(q(1, 0, 0, 0)));
  // Negative real part: N = 4, 4 Re = -4, difference 8.
  EXPECT_TRUE(rsq::in_X(q(-1, 1, 1, 1)));
}

TEST(InFRCongruence, Examples) {
  EXPECT_TRUE(rsq::in_fR_congruence(q(0, 0, 0, 0)));
  EXPECT_TRUE(rsq::in_fR_congruence(q(1, -1, -1, -1)));
  EXPECT_FALSE(rsq::in_fR_congruence(q(2, 2, 2, 0)));
}

TEST(InFRCongruence, EquivalentToUnmapOnBox) {
  for_each_in_box(-8, 8, [](const Q& b) {
    auto alpha = rsq::try_unmap(b);
    ASSERT_EQ(rsq::in_fR_congruence(b), alpha.has_value()) << b;
    if (alpha) {
      ASSERT_EQ(rsq::f_map(*alpha), b);
    }
  });
}

TEST(Unbounded, LargeValuesStayExact) {
  const Integer big = Integer(1) << 200;
  const Q x{big, -big, big + 1, 3};
  const Q image = rsq::f_map(x);
  EXPECT_EQ(rsq::norm(image), 4 * rsq::norm(x));
  EXPECT_EQ(rsq::try_unmap(image), x);
}

TEST(CheckedWidth, OverflowIsReportedNotWrapped) {
  using C = rsq::CheckedInt128;
  const C big = C(1) << 100;
  const rsq::Quaternion<C> x{big, big, big, big};
  EXPECT_THROW(rsq::norm(x), std::overflow_error);
  const rsq::Quaternion<C> small{3, -1, 4, 1};
  EXPECT_EQ(rsq::norm(rsq::f_map(small)), 4 * rsq::norm(small));
}

}  // namespace
