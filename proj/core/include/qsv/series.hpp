#pragma once

#include <qsv/polynomial.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsv {

// f = sum_{k=0}^{N} f_k q^k with coefficients in the truncated parameter ring.
class QSeries {
 public:
  explicit QSeries(ContextPtr ctx);

  static QSeries zero(ContextPtr ctx) { return QSeries(std::move(ctx)); }
  static QSeries one(ContextPtr ctx) { return constant(std::move(ctx), Rational(1)); }
  static QSeries constant(ContextPtr ctx, const Rational& value);
  // The parameter as a series (degree-one monomial at q^0).
  static QSeries symbol(ContextPtr ctx, const std::string& name);
  // q^k; zero when k > N.
  static QSeries q_power(ContextPtr ctx, int k);
  static QSeries monomial(ContextPtr ctx, const Rational& coeff, int q_exp,
                          const std::map<std::string, int>& exponents = {});
  static QSeries from_polynomial(const TruncatedPolynomial& p, int q_exp = 0);

  const ContextPtr& context() const { return ctx_; }
  int order() const { return ctx_->order(); }
  TruncatedPolynomial coefficient(int k) const;
  const detail::TermList& raw_coefficient(int k) const { return coeffs_[k]; }
  detail::TermList& raw_coefficient(int k) { return coeffs_[k]; }

  bool is_zero() const;
  // Smallest k with a nonzero coefficient.
  std::optional<int> valuation() const;
  Rational constant_scalar() const;

  QSeries shifted(int k) const;  // times q^k
  QSeries scaled(const Rational& r) const;

  // "1 + a*q + (2 - b)*q^2"; "0" for zero.
  std::string to_string() const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const QSeries& o);
  QSeries& operator*=(const Rational& r);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const Rational& r) { return a *= r; }
  friend QSeries operator*(const Rational& r, QSeries a) { return a *= r; }
  friend QSeries operator-(const QSeries& a);

  friend bool operator==(const QSeries& a, const QSeries& b);

 private:
  ContextPtr ctx_;
  std::vector<detail::TermList> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QSeries& f);

// Multiplicative inverse; the q^0 coefficient must have a nonzero constant.
QSeries invert(const QSeries& f);
QSeries divide(const QSeries& f, const QSeries& g);

// f * (1 - x q^k) and f / (1 - x q^k).
QSeries times_one_minus(const QSeries& f, const QSeries& x, int k);
QSeries divide_one_minus(const QSeries& f, const QSeries& x, int k);

// Derivative in a parameter. The result has max degree M - 1, the largest
// degree at which the derivative of a degree-M truncation is still exact.
QSeries differentiate(const QSeries& f, const std::string& symbol);

// Binds symbols to rationals; the result lives over the remaining symbols.
// Exact only if the untruncated coefficients never exceed degree M, or every
// binding is zero.
QSeries substitute(const QSeries& f, const Bindings& bindings);

QSeries truncate(const QSeries& f, int order, int max_degree);

// prod_{k<n} (1 - x q^k)
QSeries pochhammer_finite(const QSeries& x, int n);
// prod_{k>=0} (1 - x q^k), factors beyond q^N are identically 1 when x has
// no constant q^0 part; otherwise the product is taken over k <= N.
QSeries pochhammer_infinite(const QSeries& x);
// prod_{k<n} (x - y q^k), i.e. (y/x; q)_n x^n without negative powers.
QSeries pochhammer_scaled(const QSeries& x, const QSeries& y, int n);
// Gaussian binomial [n r] as a series in q.
QSeries gaussian_binomial(const ContextPtr& ctx, int n, int r);

struct Divergence {
  int q_exp;
  std::vector<int> exponents;
  std::string monomial;
  Rational lhs;
  Rational rhs;
};

struct SeriesComparison {
  bool equal = true;
  std::optional<Divergence> witness;
};

// The witness is the smallest (q-exponent, monomial) in rendering order
// where the coefficients differ.
SeriesComparison compare(const QSeries& f, const QSeries& g);

inline constexpr long summation_guard = 1000000;

// Sums term(n) for n = first, first+1, ... and stops at the first n whose
// declared q-valuation bound exceeds N or parameter-degree bound exceeds M.
// Terms are requested in increasing n, so generators may keep state.
QSeries sum_family(const ContextPtr& ctx, int first, const std::function<QSeries(int)>& term,
                   const std::function<long(int)>& q_val_bound,
                   const std::function<long(int)>& p_val_bound);

// Sums extra(P_n, n) (P_n by default) where P_first = start and
// P_{n+1} = step(P_n, n).
// Stops once P_n vanishes in the truncated ring; every later P_n is then zero
// as well, so the result is the full truncated sum.
QSeries sum_running_product(int first, QSeries start,
                            const std::function<QSeries(const QSeries&, int)>& step,
                            const std::function<QSeries(const QSeries&, int)>& extra = {});

}  // namespace qsv
