#pragma once

// Small seeded generators for property tests.

#include <qsv/series.hpp>

#include <random>

namespace gen {

class Source {
 public:
  explicit Source(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  qsv::Rational rational() {
    int num = integer(-9, 9);
    int den = coin(0.7) ? 1 : integer(1, 7);
    return qsv::Rational(num, den);
  }

  qsv::Rational nonzero_rational() {
    qsv::Rational r = rational();
    return r.is_zero() ? qsv::Rational(1) : r;
  }

  // Sparse random series with a few terms per q-coefficient.
  qsv::QSeries series(const qsv::ContextPtr& ctx, double density = 0.4, int max_degree = -1) {
    qsv::QSeries s(ctx);
    const auto& params = ctx->params().symbols();
    for (int k = 0; k <= ctx->order(); ++k) {
      if (!coin(density)) continue;
      int terms = integer(1, 3);
      for (int t = 0; t < terms; ++t) {
        std::map<std::string, int> e;
        int budget = integer(0, max_degree < 0 ? ctx->max_degree() : max_degree);
        for (const auto& p : params) {
          int x = integer(0, budget);
          budget -= x;
          if (x) e[p] = x;
        }
        s += qsv::QSeries::monomial(ctx, rational(), k, e);
      }
    }
    return s;
  }

  qsv::QSeries unit(const qsv::ContextPtr& ctx) {
    qsv::QSeries s = series(ctx);
    return s - qsv::QSeries::constant(ctx, s.constant_scalar()) + qsv::QSeries::constant(ctx, nonzero_rational());
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace gen
