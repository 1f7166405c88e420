#include <qsv/partitions.hpp>
#include <qsv/series.hpp>

#include <gtest/gtest.h>

#include "generators.hpp"

using namespace qsv;

namespace {

constexpr int kCases = 40;

ContextPtr random_context(gen::Source& src) {
  std::vector<std::string> pool{"a", "b", "c", "z"};
  std::vector<std::string> syms;
  for (const auto& s : pool)
    if (src.coin(0.4)) syms.push_back(s);
  return make_context(ParamSet::canonical(syms), src.integer(0, 8), src.integer(0, 4));
}

}  // namespace

TEST(SeriesProperties, RingAxioms) {
  gen::Source src(20240611);
  for (int i = 0; i < kCases; ++i) {
    auto ctx = random_context(src);
    auto f = src.series(ctx), g = src.series(ctx), h = src.series(ctx);
    EXPECT_EQ((f * g) * h, f * (g * h)) << ctx->to_string();
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ(f - f, QSeries::zero(ctx));
    EXPECT_EQ(f * QSeries::one(ctx), f);
  }
}

TEST(SeriesProperties, InverseIsTwoSided) {
  gen::Source src(7);
  for (int i = 0; i < kCases; ++i) {
    auto ctx = random_context(src);
    auto u = src.unit(ctx);
    auto inv = invert(u);
    EXPECT_EQ(u * inv, QSeries::one(ctx)) << u.to_string();
    EXPECT_EQ(inv * u, QSeries::one(ctx));
    auto f = src.series(ctx);
    EXPECT_EQ(divide(f, u) * u, f);
  }
}

TEST(SeriesProperties, TruncationCommutesWithArithmetic) {
  gen::Source src(99);
  for (int i = 0; i < kCases; ++i) {
    auto big = random_context(src);
    int n = src.integer(0, big->order()), m = src.integer(0, big->max_degree());
    auto f = src.series(big), u = src.unit(big);
    auto tf = truncate(f, n, m), tu = truncate(u, n, m);
    EXPECT_EQ(truncate(f * u, n, m), tf * tu);
    EXPECT_EQ(truncate(invert(u), n, m), invert(tu));
    EXPECT_EQ(truncate(pochhammer_infinite(f.shifted(1)), n, m), pochhammer_infinite(tf.shifted(1)));
  }
}

TEST(SeriesProperties, PochhammerRecurrence) {
  gen::Source src(3);
  for (int i = 0; i < kCases; ++i) {
    auto ctx = random_context(src);
    auto x = src.series(ctx);
    int n = src.integer(0, 6);
    EXPECT_EQ(pochhammer_finite(x, n + 1), pochhammer_finite(x, n) * (QSeries::one(ctx) - x.shifted(n)));
    auto y = src.series(ctx);
    EXPECT_EQ(pochhammer_scaled(x, y, n + 1),
              pochhammer_scaled(x, y, n) * (x - y.shifted(n)));
  }
}

TEST(SeriesProperties, GaussianPascalRecurrence) {
  auto ctx = make_context(ParamSet(), 40, 0);
  for (int n = 1; n <= 12; ++n)
    for (int r = 0; r <= n; ++r)
      EXPECT_EQ(gaussian_binomial(ctx, n, r),
                gaussian_binomial(ctx, n - 1, r) + gaussian_binomial(ctx, n - 1, r - 1).shifted(n - r))
          << n << " " << r;
}

TEST(SeriesProperties, EulerProductCountsPartitions) {
  const int order = 30;
  auto ctx = make_context(ParamSet(), order, 0);
  auto p = invert(pochhammer_infinite(QSeries::q_power(ctx, 1)));
  for (int n = 0; n <= order; ++n)
    EXPECT_EQ(p.coefficient(n).constant_term(), Rational(count_partitions(n, PartitionClass::all))) << n;
}

TEST(SeriesProperties, SubstitutionIsARingMap) {
  gen::Source src(17);
  for (int i = 0; i < kCases; ++i) {
    // Degrees stay low enough that no product is truncated, which is when
    // binding a nonzero value commutes with multiplication.
    auto ctx = make_context(ParamSet({"a", "b"}), src.integer(0, 6), 8);
    auto f = src.series(ctx, 0.4, 4), g = src.series(ctx, 0.4, 4);
    Bindings b{{"a", src.rational()}};
    EXPECT_EQ(substitute(f * g, b), substitute(f, b) * substitute(g, b));
    EXPECT_EQ(substitute(f + g, b), substitute(f, b) + substitute(g, b));
    // Binding to zero never needs the truncated terms.
    Bindings zero{{"b", Rational(0)}};
    EXPECT_EQ(substitute(f * g, zero), substitute(f, zero) * substitute(g, zero));
  }
}

TEST(SeriesProperties, DerivativeIsADerivation) {
  gen::Source src(5);
  for (int i = 0; i < kCases; ++i) {
    auto ctx = make_context(ParamSet({"a", "z"}), src.integer(0, 6), src.integer(1, 5));
    auto f = src.series(ctx), g = src.series(ctx);
    auto d = [](const QSeries& x) { return differentiate(x, "z"); };
    auto lowered = [&](const QSeries& x) { return truncate(x, ctx->order(), ctx->max_degree() - 1); };
    EXPECT_EQ(d(f * g), d(f) * lowered(g) + lowered(f) * d(g));
  }
}
