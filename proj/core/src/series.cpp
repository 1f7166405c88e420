#include <qsv/error.hpp>
#include <qsv/series.hpp>

#include "terms.hpp"

#include <algorithm>

namespace qsv {

namespace {

void require_same_context(const ContextPtr& x, const ContextPtr& y) {
  if (x != y && !(*x == *y))
    throw Error(Errc::context_mismatch, x->to_string() + " vs " + y->to_string());
}

std::vector<int> nonzero_indices(const QSeries& f) {
  std::vector<int> idx;
  for (int k = 0; k <= f.order(); ++k)
    if (!f.raw_coefficient(k).empty()) idx.push_back(k);
  return idx;
}

// Rendering order on monomials: degree ascending, then key descending.
bool render_before(detail::Key x, detail::Key y) {
  int dx = detail::key_degree(x), dy = detail::key_degree(y);
  return dx != dy ? dx < dy : x > y;
}

std::string q_part(int k) { return k == 1 ? "q" : "q^" + std::to_string(k); }

}  // namespace

QSeries::QSeries(ContextPtr ctx) : ctx_(std::move(ctx)), coeffs_(ctx_->order() + 1) {}

QSeries QSeries::constant(ContextPtr ctx, const Rational& value) {
  QSeries s(std::move(ctx));
  if (!value.is_zero()) s.coeffs_[0].push_back({0, value});
  return s;
}

QSeries QSeries::symbol(ContextPtr ctx, const std::string& name) {
  return from_polynomial(TruncatedPolynomial::symbol(std::move(ctx), name));
}

QSeries QSeries::q_power(ContextPtr ctx, int k) { return monomial(std::move(ctx), Rational(1), k); }

QSeries QSeries::monomial(ContextPtr ctx, const Rational& coeff, int q_exp,
                          const std::map<std::string, int>& exponents) {
  if (q_exp < 0) throw Error(Errc::exponent_out_of_range, "negative q-exponent");
  TruncatedPolynomial p = TruncatedPolynomial::monomial(ctx, coeff, exponents);
  QSeries s(std::move(ctx));
  if (q_exp <= s.order()) s.coeffs_[q_exp] = p.raw_terms();
  return s;
}

QSeries QSeries::from_polynomial(const TruncatedPolynomial& p, int q_exp) {
  if (q_exp < 0) throw Error(Errc::exponent_out_of_range, "negative q-exponent");
  QSeries s(p.context());
  if (q_exp <= s.order()) s.coeffs_[q_exp] = p.raw_terms();
  return s;
}

TruncatedPolynomial QSeries::coefficient(int k) const {
  if (k < 0 || k > order())
    throw Error(Errc::exponent_out_of_range, "coefficient index " + std::to_string(k));
  return TruncatedPolynomial(ctx_, coeffs_[k]);
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.empty(); });
}

std::optional<int> QSeries::valuation() const {
  for (int k = 0; k <= order(); ++k)
    if (!coeffs_[k].empty()) return k;
  return std::nullopt;
}

Rational QSeries::constant_scalar() const {
  return !coeffs_[0].empty() && coeffs_[0].front().key == 0 ? coeffs_[0].front().coeff : Rational(0);
}

QSeries QSeries::shifted(int k) const {
  if (k < 0) throw Error(Errc::exponent_out_of_range, "negative shift");
  QSeries s(ctx_);
  for (int i = 0; i + k <= order(); ++i) s.coeffs_[i + k] = coeffs_[i];
  return s;
}

QSeries QSeries::scaled(const Rational& r) const {
  QSeries s = *this;
  return s *= r;
}

std::string QSeries::to_string() const {
  std::string s;
  for (int k = 0; k <= order(); ++k) {
    if (coeffs_[k].empty()) continue;
    TruncatedPolynomial c(ctx_, coeffs_[k]);
    auto scalar = c.as_constant();
    bool negative = false;
    std::string body;
    if (k == 0) {
      body = c.to_string();
      if (body.front() == '-') {
        negative = true;
        body.erase(0, 1);
      }
    } else if (scalar) {
      negative = scalar->sign() < 0;
      Rational mag = scalar->abs();
      body = (mag.is_one() ? "" : mag.to_string()) + q_part(k);
    } else {
      body = "(" + c.to_string() + ")" + q_part(k);
    }
    if (s.empty())
      s = negative ? "-" + body : body;
    else
      s += (negative ? " - " : " + ") + body;
  }
  return s.empty() ? "0" : s;
}

std::ostream& operator<<(std::ostream& os, const QSeries& f) { return os << f.to_string(); }

QSeries& QSeries::operator+=(const QSeries& o) {
  require_same_context(ctx_, o.ctx_);
  for (int k = 0; k <= order(); ++k) coeffs_[k] = detail::add(coeffs_[k], o.coeffs_[k]);
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  require_same_context(ctx_, o.ctx_);
  for (int k = 0; k <= order(); ++k) coeffs_[k] = detail::sub(coeffs_[k], o.coeffs_[k]);
  return *this;
}

QSeries& QSeries::operator*=(const QSeries& o) { return *this = *this * o; }

QSeries& QSeries::operator*=(const Rational& r) {
  for (auto& c : coeffs_) detail::scale_in_place(c, r);
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  require_same_context(a.ctx_, b.ctx_);
  const int n = a.order();
  const int m = a.ctx_->max_degree();
  std::vector<int> ia = nonzero_indices(a), ib = nonzero_indices(b);
  QSeries out(a.ctx_);
  if (ia.empty() || ib.empty()) return out;
  std::vector<std::pair<int, int>> pairs;
  detail::Accumulator acc;
  for (int k = 0; k <= n; ++k) {
    pairs.clear();
    for (int i : ia) {
      if (i > k) break;
      if (!b.coeffs_[k - i].empty()) pairs.emplace_back(i, k - i);
    }
    if (pairs.empty()) continue;
    if (pairs.size() == 1) {
      out.coeffs_[k] = detail::mul(a.coeffs_[pairs[0].first], b.coeffs_[pairs[0].second], m);
      continue;
    }
    for (auto [i, j] : pairs) acc.add_product(a.coeffs_[i], b.coeffs_[j], m);
    out.coeffs_[k] = acc.take();
  }
  return out;
}

QSeries operator-(const QSeries& a) {
  QSeries s = a;
  for (auto& c : s.coeffs_) detail::negate_in_place(c);
  return s;
}

bool operator==(const QSeries& a, const QSeries& b) { return compare(a, b).equal; }

QSeries divide(const QSeries& f, const QSeries& g) {
  require_same_context(f.context(), g.context());
  const int n = f.order();
  const int m = f.context()->max_degree();
  const auto& g0 = g.raw_coefficient(0);
  if (g0.empty() || g0.front().key != 0)
    throw Error(Errc::not_a_unit, "divisor has no constant term");
  const bool monic = g0.size() == 1 && g0.front().coeff.is_one();
  detail::TermList inv0 = monic ? detail::TermList{} : detail::inverse(g0, m);
  std::vector<int> ig;
  for (int j = 1; j <= n; ++j)
    if (!g.raw_coefficient(j).empty()) ig.push_back(j);
  QSeries h(f.context());
  detail::Accumulator acc;
  for (int i = 0; i <= n; ++i) {
    // h_i = g_0^{-1} (f_i - sum_{j>=1} g_j h_{i-j})
    acc.add(f.raw_coefficient(i));
    for (int j : ig) {
      if (j > i) break;
      if (!h.raw_coefficient(i - j).empty()) acc.sub_product(g.raw_coefficient(j), h.raw_coefficient(i - j), m);
    }
    detail::TermList r = acc.take();
    h.raw_coefficient(i) = monic ? std::move(r) : detail::mul(inv0, r, m);
  }
  return h;
}

QSeries invert(const QSeries& f) { return divide(QSeries::one(f.context()), f); }

QSeries times_one_minus(const QSeries& f, const QSeries& x, int k) {
  if (k > f.order()) return f;
  return f - (f * x).shifted(k);
}

QSeries divide_one_minus(const QSeries& f, const QSeries& x, int k) {
  if (k > f.order()) return f;
  return divide(f, QSeries::one(f.context()) - x.shifted(k));
}

QSeries differentiate(const QSeries& f, const std::string& symbol) {
  const Context& c = *f.context();
  if (c.max_degree() == 0)
    throw Error(Errc::exponent_out_of_range, "derivative needs parameter degree at least 1");
  if (!c.params().contains(symbol)) throw Error(Errc::unknown_symbol, "'" + symbol + "' is not a parameter");
  QSeries out(make_context(c.params(), c.order(), c.max_degree() - 1));
  for (int k = 0; k <= c.order(); ++k)
    out.raw_coefficient(k) = f.coefficient(k).derivative(symbol).raw_terms();
  return out;
}

QSeries substitute(const QSeries& f, const Bindings& bindings) {
  const Context& c = *f.context();
  std::vector<std::string> bound;
  for (const auto& [name, v] : bindings) {
    if (!c.params().contains(name)) throw Error(Errc::unknown_symbol, "'" + name + "' is not a parameter");
    bound.push_back(name);
  }
  QSeries out(make_context(c.params().without(bound), c.order(), c.max_degree()));
  for (int k = 0; k <= c.order(); ++k)
    out.raw_coefficient(k) = f.coefficient(k).substitute(bindings).raw_terms();
  return out;
}

QSeries truncate(const QSeries& f, int order, int max_degree) {
  const Context& c = *f.context();
  if (order > c.order() || max_degree > c.max_degree())
    throw Error(Errc::exponent_out_of_range, "truncate can only lower the truncation");
  QSeries out(make_context(c.params(), order, max_degree));
  for (int k = 0; k <= order; ++k) {
    auto& dst = out.raw_coefficient(k);
    for (const auto& t : f.raw_coefficient(k))
      if (detail::key_degree(t.key) <= max_degree) dst.push_back(t);
  }
  return out;
}

QSeries pochhammer_finite(const QSeries& x, int n) {
  QSeries acc = QSeries::one(x.context());
  for (int k = 0; k < n && k <= x.order(); ++k) acc = times_one_minus(acc, x, k);
  return acc;
}

QSeries pochhammer_infinite(const QSeries& x) { return pochhammer_finite(x, x.order() + 1); }

QSeries pochhammer_scaled(const QSeries& x, const QSeries& y, int n) {
  QSeries acc = QSeries::one(x.context());
  for (int k = 0; k < n; ++k) acc = acc * x - (acc * y).shifted(std::min(k, x.order() + 1));
  return acc;
}

QSeries gaussian_binomial(const ContextPtr& ctx, int n, int r) {
  if (r < 0 || n < 0 || r > n) return QSeries::zero(ctx);
  QSeries one = QSeries::one(ctx);
  QSeries acc = one;
  for (int i = 1; i <= r; ++i) acc = times_one_minus(acc, one, n - r + i);
  for (int i = 1; i <= r; ++i) acc = divide_one_minus(acc, one, i);
  return acc;
}

SeriesComparison compare(const QSeries& f, const QSeries& g) {
  require_same_context(f.context(), g.context());
  for (int k = 0; k <= f.order(); ++k) {
    detail::TermList diff = detail::sub(f.raw_coefficient(k), g.raw_coefficient(k));
    if (diff.empty()) continue;
    detail::Key best = diff.front().key;
    for (const auto& t : diff)
      if (render_before(t.key, best)) best = t.key;
    const std::size_t n = f.context()->params().size();
    std::vector<int> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = detail::key_exponent(best, i);
    const Rational* l = detail::find(f.raw_coefficient(k), best);
    const Rational* r = detail::find(g.raw_coefficient(k), best);
    Divergence d{k, e, format_monomial(f.context()->params(), e), l ? *l : Rational(0), r ? *r : Rational(0)};
    if (d.monomial.empty()) d.monomial = "1";
    return {false, std::move(d)};
  }
  return {true, std::nullopt};
}

QSeries sum_family(const ContextPtr& ctx, int first, const std::function<QSeries(int)>& term,
                   const std::function<long(int)>& q_val_bound,
                   const std::function<long(int)>& p_val_bound) {
  QSeries s(ctx);
  for (long n = first;; ++n) {
    if (n - first >= summation_guard)
      throw Error(Errc::nontermination, "summation guard reached");
    if (q_val_bound(static_cast<int>(n)) > ctx->order() || p_val_bound(static_cast<int>(n)) > ctx->max_degree())
      break;
    s += term(static_cast<int>(n));
  }
  return s;
}

QSeries sum_running_product(int first, QSeries start,
                            const std::function<QSeries(const QSeries&, int)>& step,
                            const std::function<QSeries(const QSeries&, int)>& extra) {
  QSeries s(start.context());
  QSeries p = std::move(start);
  for (long n = first; !p.is_zero(); ++n) {
    if (n - first >= summation_guard)
      throw Error(Errc::nontermination, "summation guard reached");
    s += extra ? extra(p, static_cast<int>(n)) : p;
    p = step(p, static_cast<int>(n));
  }
  return s;
}

}  // namespace qsv
