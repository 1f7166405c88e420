#include <qsv/error.hpp>
#include <qsv/series.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qsv;

namespace {

ContextPtr plain(int n) { return make_context(ParamSet(), n, 0); }
ContextPtr with(std::vector<std::string> syms, int n, int m) {
  return make_context(ParamSet::canonical(std::move(syms)), n, m);
}

QSeries series_of(const ContextPtr& ctx, const std::map<int, long>& coeffs) {
  QSeries s(ctx);
  for (auto [k, c] : coeffs) s += QSeries::monomial(ctx, Rational(c), k);
  return s;
}

std::vector<long> integer_coefficients(const QSeries& f) {
  std::vector<long> out;
  for (int k = 0; k <= f.order(); ++k) out.push_back(f.coefficient(k).constant_term().numerator().get_si());
  return out;
}

}  // namespace

TEST(QSeries, Monomials) {
  auto ctx = with({"a"}, 5, 3);
  EXPECT_EQ(QSeries::monomial(ctx, 1, 0), QSeries::one(ctx));
  EXPECT_EQ(QSeries::monomial(ctx, -1, 2, {{"a", 1}}).to_string(), "(-a)q^2");
  EXPECT_EQ(QSeries::monomial(plain(5), Rational(3, 2), 1).to_string(), "3/2q");
  EXPECT_THROW(QSeries::monomial(ctx, 1, -1), Error);
  EXPECT_TRUE(QSeries::monomial(ctx, 1, 6).is_zero());
}

TEST(QSeries, RenderingIsCanonical) {
  auto ctx = with({"a", "b"}, 3, 3);
  auto a = QSeries::symbol(ctx, "a");
  auto b = QSeries::symbol(ctx, "b");
  auto q = QSeries::q_power(ctx, 1);
  auto f = QSeries::one(ctx) - a * b * Rational(3, 2) + q * Rational(2) - (a - b) * q * q * q;
  EXPECT_EQ(f.to_string(), "1 - 3/2*a*b + 2q + (-a + b)q^3");
  EXPECT_EQ(QSeries::zero(ctx).to_string(), "0");
  EXPECT_EQ((-q).to_string(), "-q");
}

TEST(QSeries, AddSubNeg) {
  auto ctx = with({"a"}, 4, 2);
  auto q = QSeries::q_power(ctx, 1);
  auto one = QSeries::one(ctx);
  auto a = QSeries::symbol(ctx, "a");
  EXPECT_EQ((one + q) + (one - q), QSeries::constant(ctx, 2));
  EXPECT_EQ(q + QSeries::zero(ctx), q);
  EXPECT_EQ((q + a * q * q) - q, a * q * q);
  EXPECT_EQ(-(-q), q);
}

TEST(QSeries, ContextMismatch) {
  EXPECT_THROW(QSeries::one(plain(3)) + QSeries::one(plain(4)), Error);
  EXPECT_THROW(QSeries::one(plain(3)) * QSeries::one(with({"a"}, 3, 1)), Error);
  EXPECT_THROW(compare(QSeries::one(plain(3)), QSeries::one(plain(4))), Error);
}

TEST(QSeries, ProductsMatchSubsetExpansion) {
  auto ctx = plain(8);
  auto one = QSeries::one(ctx);
  EXPECT_EQ((one + QSeries::q_power(ctx, 1)) * (one - QSeries::q_power(ctx, 1)), one - QSeries::q_power(ctx, 2));
  QSeries p = one;
  for (int k : {1, 2, 3}) p *= one - QSeries::q_power(ctx, k);
  EXPECT_EQ(p, series_of(ctx, oracle::signed_subset_product({1, 2, 3})));
  EXPECT_EQ(p.to_string(), "1 - q - q^2 + q^4 + q^5 - q^6");
}

TEST(QSeries, TelescopingInParameterTruncation) {
  const int m = 5;
  auto ctx = with({"a"}, 2, m);
  auto a = QSeries::symbol(ctx, "a");
  QSeries geo = QSeries::zero(ctx), power = QSeries::one(ctx);
  for (int i = 0; i <= m; ++i) {
    geo += power;
    power *= a;
  }
  EXPECT_EQ((QSeries::one(ctx) - a) * geo, QSeries::one(ctx));
}

TEST(QSeries, Invert) {
  auto ctx = plain(3);
  EXPECT_EQ(invert(QSeries::one(ctx) - QSeries::q_power(ctx, 1)).to_string(), "1 + q + q^2 + q^3");
  EXPECT_EQ(invert(QSeries::one(ctx)), QSeries::one(ctx));
  EXPECT_THROW(invert(QSeries::q_power(ctx, 1)), Error);
  auto actx = with({"a"}, 6, 4);
  auto f = QSeries::one(actx) - QSeries::symbol(actx, "a").shifted(1);
  EXPECT_EQ(invert(f) * f, QSeries::one(actx));
  // A constant scalar other than 1 and a parameter-dependent q^0 part.
  auto g = QSeries::constant(actx, 3) - QSeries::symbol(actx, "a") + QSeries::q_power(actx, 2);
  EXPECT_EQ(invert(g) * g, QSeries::one(actx));
  EXPECT_THROW(invert(QSeries::symbol(actx, "a")), Error);
}

TEST(QSeries, Differentiate) {
  auto ctx = with({"z"}, 4, 3);
  auto z = QSeries::symbol(ctx, "z");
  auto d = differentiate(z * z * QSeries::q_power(ctx, 1), "z");
  EXPECT_EQ(d.context()->max_degree(), 2);
  EXPECT_EQ(d.to_string(), "(2*z)q");
  EXPECT_TRUE(differentiate(QSeries::q_power(ctx, 3), "z").is_zero());
  EXPECT_THROW(differentiate(z, "a"), Error);
}

TEST(QSeries, Substitute) {
  auto ctx = with({"a", "b"}, 4, 4);
  auto a = QSeries::symbol(ctx, "a");
  auto b = QSeries::symbol(ctx, "b");
  auto q = QSeries::q_power(ctx, 1);
  auto f = a * q + a * a * q * q;
  EXPECT_EQ(substitute(f, {{"a", Rational(1)}}).to_string(), "q + q^2");
  EXPECT_EQ(substitute(f, {}), f);
  auto one = QSeries::one(ctx);
  auto g = substitute((one - a) * (one - b), {{"a", Rational(1, 2)}, {"b", Rational(-1)}});
  EXPECT_TRUE(g.context()->params().empty());
  EXPECT_EQ(g.to_string(), "1");
  EXPECT_THROW(substitute(f, {{"z", Rational(1)}}), Error);
}

TEST(QSeries, PochhammerFinite) {
  auto ctx = with({"a"}, 8, 3);
  auto q = QSeries::q_power(ctx, 1);
  auto a = QSeries::symbol(ctx, "a");
  EXPECT_EQ(pochhammer_finite(a, 0), QSeries::one(ctx));
  EXPECT_EQ(pochhammer_finite(q, 3).to_string(), "1 - q - q^2 + q^4 + q^5 - q^6");
  EXPECT_EQ(pochhammer_finite(a, 2).to_string(), "1 - a + (-a + a^2)q");
}

TEST(QSeries, PochhammerInfiniteAndEuler) {
  auto ctx = plain(5);
  EXPECT_EQ(pochhammer_infinite(QSeries::q_power(ctx, 1)),
            series_of(ctx, oracle::signed_subset_product({1, 2, 3, 4, 5})));
  EXPECT_EQ(pochhammer_infinite(QSeries::q_power(ctx, 1)).to_string(), "1 - q - q^2 + q^5");
  EXPECT_EQ(pochhammer_infinite(QSeries::zero(ctx)), QSeries::one(ctx));
  auto ctx6 = plain(6);
  EXPECT_EQ(invert(pochhammer_infinite(QSeries::q_power(ctx6, 1))).to_string(),
            "1 + q + 2q^2 + 3q^3 + 5q^4 + 7q^5 + 11q^6");
}

TEST(QSeries, PochhammerScaled) {
  auto ctx = with({"a", "b"}, 10, 6);
  auto a = QSeries::symbol(ctx, "a");
  auto b = QSeries::symbol(ctx, "b");
  auto q = QSeries::q_power(ctx, 1);
  EXPECT_EQ(pochhammer_scaled(a, b, 1), a - b);
  EXPECT_EQ(pochhammer_scaled(a, b, 2), (a - b) * (a - b * q));
  auto pctx = make_context(ParamSet(), 10, 6);
  Rational alpha(2), beta(3);
  for (int n = 0; n <= 5; ++n) {
    auto lhs = substitute(pochhammer_scaled(a, b, n), {{"a", alpha}, {"b", beta}});
    auto rhs = pochhammer_finite(QSeries::constant(pctx, beta / alpha), n) * alpha.pow(n);
    EXPECT_EQ(lhs, rhs) << n;
  }
}

TEST(QSeries, GaussianBinomialMatchesBoxCounts) {
  auto ctx = plain(40);
  EXPECT_EQ(gaussian_binomial(ctx, 5, 0), QSeries::one(ctx));
  EXPECT_TRUE(gaussian_binomial(ctx, 5, 6).is_zero());
  EXPECT_TRUE(gaussian_binomial(ctx, 5, -1).is_zero());
  EXPECT_EQ(gaussian_binomial(ctx, 2, 1).to_string(), "1 + q");
  EXPECT_EQ(gaussian_binomial(ctx, 4, 2).to_string(), "1 + q + 2q^2 + q^3 + q^4");
  for (int n = 0; n <= 9; ++n)
    for (int r = 0; r <= n; ++r) EXPECT_EQ(gaussian_binomial(ctx, n, r), series_of(ctx, oracle::box_partitions(n, r)));
}

TEST(SumFamily, TriangularNumbers) {
  auto ctx = plain(10);
  auto s = sum_family(ctx, 1, [&](int n) { return QSeries::q_power(ctx, n * (n + 1) / 2); },
                      [](int n) { return n * (n + 1) / 2; }, [](int) { return 0; });
  EXPECT_EQ(s.to_string(), "q + q^3 + q^6 + q^10");
}

TEST(SumFamily, LambertSeriesInParameterGrading) {
  auto ctx = with({"a"}, 3, 3);
  auto a = QSeries::symbol(ctx, "a");
  auto s = sum_family(
      ctx, 1,
      [&](int n) {
        QSeries an = QSeries::one(ctx);
        for (int i = 0; i < n; ++i) an *= a;
        return divide_one_minus(an * Rational(n), QSeries::one(ctx), n);
      },
      [](int) { return 0; }, [](int n) { return n; });
  // Hand expansion: sum over n, j of n a^n q^(n j).
  QSeries expected(ctx);
  for (int n = 1; n <= 3; ++n)
    for (int j = 0; n * j <= 3; ++j) expected += QSeries::monomial(ctx, n, n * j, {{"a", n}});
  EXPECT_EQ(s, expected);
  EXPECT_EQ(s.coefficient(0).to_string(), "a + 2*a^2 + 3*a^3");
}

TEST(SumFamily, KluyverGivesDivisorCounts) {
  const int order = 8;
  auto ctx = plain(order);
  auto one = QSeries::one(ctx);
  QSeries qn = one;  // (q)_n
  auto s = sum_family(
      ctx, 1,
      [&](int n) {
        qn = times_one_minus(qn, one, n);
        auto t = divide(QSeries::q_power(ctx, n * (n + 1) / 2), qn);
        return divide_one_minus(t, one, n) * Rational(n % 2 ? 1 : -1);
      },
      [](int n) { return n * (n + 1) / 2; }, [](int) { return 0; });
  auto c = integer_coefficients(s);
  for (int n = 1; n <= order; ++n) EXPECT_EQ(c[n], oracle::divisor_count(n)) << n;
  EXPECT_EQ(s.to_string(), "q + 2q^2 + 2q^3 + 3q^4 + 2q^5 + 4q^6 + 2q^7 + 4q^8");
}

TEST(SumFamily, GuardStopsRunawaySums) {
  auto ctx = plain(3);
  EXPECT_THROW(sum_family(ctx, 1, [&](int) { return QSeries::zero(ctx); }, [](int) { return 0; },
                          [](int) { return 0; }),
               Error);
}

TEST(SumRunningProduct, StopsWhenProductVanishes) {
  auto ctx = plain(10);
  int steps = 0;
  auto s = sum_running_product(1, QSeries::q_power(ctx, 1), [&](const QSeries& p, int n) {
    ++steps;
    return p.shifted(n + 1);
  });
  EXPECT_EQ(s.to_string(), "q + q^3 + q^6 + q^10");
  EXPECT_EQ(steps, 4);
}

TEST(Compare, WitnessIsFirstDivergence) {
  auto ctx = plain(4);
  auto one = QSeries::one(ctx);
  auto q = QSeries::q_power(ctx, 1);
  EXPECT_TRUE(compare(one + q, one + q).equal);
  auto r = compare(one + q, one - q);
  ASSERT_FALSE(r.equal);
  EXPECT_EQ(r.witness->q_exp, 1);
  EXPECT_EQ(r.witness->monomial, "1");
  EXPECT_EQ(r.witness->lhs, Rational(1));
  EXPECT_EQ(r.witness->rhs, Rational(-1));

  auto actx = with({"a", "b"}, 4, 3);
  auto a = QSeries::symbol(actx, "a");
  auto b = QSeries::symbol(actx, "b");
  auto w = compare(a * b.shifted(2) + b * b.shifted(2), a * a.shifted(2)).witness;
  ASSERT_TRUE(w);
  EXPECT_EQ(w->q_exp, 2);
  EXPECT_EQ(w->monomial, "a^2");
}

TEST(Truncate, LowersBothGradings) {
  auto ctx = with({"a"}, 6, 4);
  auto a = QSeries::symbol(ctx, "a");
  auto f = invert(QSeries::one(ctx) - a - QSeries::q_power(ctx, 1));
  auto small = make_context(ParamSet({"a"}), 3, 2);
  auto direct = invert(QSeries::one(small) - QSeries::symbol(small, "a") - QSeries::q_power(small, 1));
  EXPECT_EQ(truncate(f, 3, 2), direct);
  EXPECT_THROW(truncate(f, 7, 4), Error);
}
