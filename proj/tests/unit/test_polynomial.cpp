#include <qsv/error.hpp>
#include <qsv/polynomial.hpp>

#include <gtest/gtest.h>

using namespace qsv;

namespace {

ContextPtr ring(std::vector<std::string> syms, int m) { return make_context(ParamSet(std::move(syms)), 0, m); }

}  // namespace

TEST(ParamSet, CanonicalOrder) {
  EXPECT_EQ(ParamSet::canonical({"t", "z", "a", "c"}).symbols(), (std::vector<std::string>{"a", "c", "z", "t"}));
  EXPECT_THROW(ParamSet({"a", "a"}), Error);
  EXPECT_THROW(ParamSet({"a", "b", "c", "d", "z", "t", "u"}), Error);
}

TEST(TruncatedPolynomial, RendersInDegreeThenLexOrder) {
  auto ctx = ring({"a", "b"}, 4);
  auto a = TruncatedPolynomial::symbol(ctx, "a");
  auto b = TruncatedPolynomial::symbol(ctx, "b");
  auto one = TruncatedPolynomial::constant(ctx, 1);
  EXPECT_EQ((one - a * b * Rational(3, 2)).to_string(), "1 - 3/2*a*b");
  EXPECT_EQ(((a + b) * (a + b)).to_string(), "a^2 + 2*a*b + b^2");
  EXPECT_EQ((b - a).to_string(), "-a + b");
  EXPECT_EQ(TruncatedPolynomial(ctx).to_string(), "0");
}

TEST(TruncatedPolynomial, TruncatesAboveMaxDegree) {
  auto ctx = ring({"a"}, 3);
  auto a = TruncatedPolynomial::symbol(ctx, "a");
  EXPECT_TRUE(a.pow(4).is_zero());
  // (1 - a)(1 + a + a^2 + a^3) = 1 - a^4 = 1 modulo degree 4.
  auto one = TruncatedPolynomial::constant(ctx, 1);
  EXPECT_EQ((one - a) * (one + a + a * a + a * a * a), one);
}

TEST(TruncatedPolynomial, InverseOfUnit) {
  auto ctx = ring({"a", "b"}, 5);
  auto a = TruncatedPolynomial::symbol(ctx, "a");
  auto b = TruncatedPolynomial::symbol(ctx, "b");
  auto u = TruncatedPolynomial::constant(ctx, 2) - a + b * b * Rational(1, 3);
  EXPECT_EQ(u * u.inverse(), TruncatedPolynomial::constant(ctx, 1));
  EXPECT_THROW(a.inverse(), Error);
}

TEST(TruncatedPolynomial, Substitute) {
  auto ctx = ring({"a", "b"}, 4);
  auto a = TruncatedPolynomial::symbol(ctx, "a");
  auto b = TruncatedPolynomial::symbol(ctx, "b");
  auto one = TruncatedPolynomial::constant(ctx, 1);
  auto f = (one - a) * (one - b);
  auto v = f.substitute({{"a", Rational(1, 2)}, {"b", Rational(-1)}});
  EXPECT_EQ(v.as_constant(), Rational(1));
  auto g = f.substitute({{"a", Rational(2)}});
  EXPECT_EQ(g.context()->params().symbols(), std::vector<std::string>{"b"});
  EXPECT_EQ(g.to_string(), "-1 + b");
  EXPECT_THROW(f.substitute({{"z", Rational(1)}}), Error);
}

TEST(TruncatedPolynomial, EulerAndIntegralOperatorsAreInverse) {
  auto ctx = ring({"a", "t"}, 6);
  auto a = TruncatedPolynomial::symbol(ctx, "a");
  auto t = TruncatedPolynomial::symbol(ctx, "t");
  auto f = a * Rational(3) + a * a * t - a.pow(3) * Rational(1, 2);
  EXPECT_EQ(f.euler_operator("a").to_string(), "3*a - 3/2*a^3 + 2*a^2*t");
  EXPECT_EQ(f.integral_operator("a").euler_operator("a"), f);
  EXPECT_EQ(f.euler_operator("a").integral_operator("a"), f);
  EXPECT_THROW((f + t).integral_operator("a"), Error);
}

TEST(TruncatedPolynomial, DerivativeLowersMaxDegree) {
  auto ctx = ring({"z"}, 3);
  auto z = TruncatedPolynomial::symbol(ctx, "z");
  auto d = (z * z).derivative("z");
  EXPECT_EQ(d.context()->max_degree(), 2);
  EXPECT_EQ(d.to_string(), "2*z");
}

TEST(TruncatedPolynomial, MismatchedRingsAreRejected) {
  auto a1 = TruncatedPolynomial::symbol(ring({"a"}, 3), "a");
  auto a2 = TruncatedPolynomial::symbol(ring({"a"}, 4), "a");
  EXPECT_THROW(a1 + a2, Error);
  EXPECT_THROW(TruncatedPolynomial::symbol(ring({"a"}, 3), "b"), Error);
}

// F(a) = a^r (a + ... + a^k): D^m F = sum_j (r+j)^m a^(r+j) and I^m undoes it.
TEST(TruncatedPolynomial, DualityOfDAndIOnPowerFamilies) {
  auto ctx = ring({"a"}, 12);
  auto a = TruncatedPolynomial::symbol(ctx, "a");
  for (int r = 0; r <= 4; ++r)
    for (int k = 1; k <= 5; ++k) {
      TruncatedPolynomial f(ctx);
      for (int j = 1; j <= k; ++j) f += a.pow(r + j);
      for (int m = 0; m <= 3; ++m) {
        TruncatedPolynomial d = f;
        for (int i = 0; i < m; ++i) d = d.euler_operator("a");
        TruncatedPolynomial expect(ctx);
        for (int j = 1; j <= k; ++j) expect += a.pow(r + j) * Rational(r + j).pow(m);
        EXPECT_EQ(d, expect) << r << " " << k << " " << m;
        TruncatedPolynomial back = d;
        for (int i = 0; i < m; ++i) back = back.integral_operator("a");
        EXPECT_EQ(back, f);
        TruncatedPolynomial up = f;
        for (int i = 0; i < m; ++i) up = up.integral_operator("a");
        for (int i = 0; i < m; ++i) up = up.euler_operator("a");
        EXPECT_EQ(up, f);
      }
    }
}
