#include <qsv/error.hpp>
#include <qsv/polynomial.hpp>

#include "terms.hpp"

#include <algorithm>
#include <set>

namespace qsv {

namespace {

int canonical_rank(const std::string& s) {
  static const std::vector<std::string> order{"a", "b", "c", "d", "z", "t"};
  auto it = std::find(order.begin(), order.end(), s);
  return it == order.end() ? static_cast<int>(order.size()) : static_cast<int>(it - order.begin());
}

void require_same_ring(const Context& x, const Context& y) {
  if (!x.same_coefficient_ring(y))
    throw Error(Errc::context_mismatch, x.to_string() + " vs " + y.to_string());
}

std::vector<int> exponents_of(detail::Key k, std::size_t n) {
  std::vector<int> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = detail::key_exponent(k, i);
  return e;
}

std::size_t symbol_index(const ParamSet& params, const std::string& name) {
  auto i = params.index_of(name);
  if (!i) throw Error(Errc::unknown_symbol, "'" + name + "' is not a parameter");
  return *i;
}

}  // namespace

ParamSet::ParamSet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() > max_symbols)
    throw Error(Errc::invalid_argument, "at most 6 parameter symbols are supported");
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw Error(Errc::invalid_argument, "empty symbol name");
    if (!seen.insert(s).second) throw Error(Errc::invalid_argument, "duplicate symbol '" + s + "'");
  }
}

ParamSet ParamSet::canonical(std::vector<std::string> symbols) {
  std::sort(symbols.begin(), symbols.end(), [](const std::string& x, const std::string& y) {
    int rx = canonical_rank(x), ry = canonical_rank(y);
    return rx != ry ? rx < ry : x < y;
  });
  return ParamSet(std::move(symbols));
}

std::optional<std::size_t> ParamSet::index_of(const std::string& symbol) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

ParamSet ParamSet::without(const std::vector<std::string>& removed) const {
  std::vector<std::string> kept;
  for (const auto& s : symbols_)
    if (std::find(removed.begin(), removed.end(), s) == removed.end()) kept.push_back(s);
  return ParamSet(std::move(kept));
}

Context::Context(ParamSet params, int order, int max_degree)
    : params_(std::move(params)), order_(order), max_degree_(max_degree) {
  if (order < 0) throw Error(Errc::exponent_out_of_range, "negative q-order");
  if (max_degree < 0 || max_degree > max_degree_limit)
    throw Error(Errc::exponent_out_of_range, "parameter degree must lie in [0, 120]");
}

std::string Context::to_string() const {
  std::string s = "(N=" + std::to_string(order_) + ", M=" + std::to_string(max_degree_) + ", {";
  for (std::size_t i = 0; i < params_.size(); ++i) s += (i ? "," : "") + params_[i];
  return s + "})";
}

ContextPtr make_context(ParamSet params, int order, int max_degree) {
  return std::make_shared<const Context>(std::move(params), order, max_degree);
}

namespace detail {

Key make_key(const std::vector<int>& exponents) {
  if (exponents.size() > ParamSet::max_symbols)
    throw Error(Errc::invalid_argument, "too many exponents");
  Key k = 0;
  int deg = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 255)
      throw Error(Errc::exponent_out_of_range, "exponent " + std::to_string(exponents[i]));
    deg += exponents[i];
    k |= static_cast<Key>(exponents[i]) << (8 * (5 - i));
  }
  if (deg > 255) throw Error(Errc::exponent_out_of_range, "total degree too large");
  return k | (static_cast<Key>(deg) << 56);
}

}  // namespace detail

TruncatedPolynomial TruncatedPolynomial::constant(ContextPtr ctx, const Rational& value) {
  TruncatedPolynomial p(std::move(ctx));
  if (!value.is_zero()) p.terms_.push_back({0, value});
  return p;
}

TruncatedPolynomial TruncatedPolynomial::symbol(ContextPtr ctx, const std::string& name) {
  std::size_t i = symbol_index(ctx->params(), name);
  TruncatedPolynomial p(std::move(ctx));
  if (p.ctx_->max_degree() >= 1) p.terms_.push_back({detail::unit_key(i), Rational(1)});
  return p;
}

TruncatedPolynomial TruncatedPolynomial::monomial(ContextPtr ctx, const Rational& coeff,
                                                  const std::map<std::string, int>& exponents) {
  std::vector<int> e(ctx->params().size(), 0);
  int deg = 0;
  for (const auto& [name, power] : exponents) {
    if (power < 0) throw Error(Errc::exponent_out_of_range, "negative exponent of " + name);
    e[symbol_index(ctx->params(), name)] = power;
    deg += power;
  }
  TruncatedPolynomial p(std::move(ctx));
  if (deg <= p.ctx_->max_degree() && !coeff.is_zero()) p.terms_.push_back({detail::make_key(e), coeff});
  return p;
}

Rational TruncatedPolynomial::constant_term() const {
  return !terms_.empty() && terms_.front().key == 0 ? terms_.front().coeff : Rational(0);
}

std::optional<Rational> TruncatedPolynomial::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.front().key == 0) return terms_.front().coeff;
  return std::nullopt;
}

Rational TruncatedPolynomial::coefficient(const std::map<std::string, int>& exponents) const {
  std::vector<int> e(ctx_->params().size(), 0);
  for (const auto& [name, power] : exponents) e[symbol_index(ctx_->params(), name)] = power;
  const Rational* c = detail::find(terms_, detail::make_key(e));
  return c ? *c : Rational(0);
}

std::optional<int> TruncatedPolynomial::min_degree() const {
  if (terms_.empty()) return std::nullopt;
  return detail::key_degree(terms_.front().key);
}

std::vector<std::pair<std::vector<int>, Rational>> TruncatedPolynomial::terms() const {
  std::vector<const detail::Term*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const detail::Term* x, const detail::Term* y) {
    int dx = detail::key_degree(x->key), dy = detail::key_degree(y->key);
    return dx != dy ? dx < dy : x->key > y->key;
  });
  std::vector<std::pair<std::vector<int>, Rational>> out;
  for (const auto* t : order) out.emplace_back(exponents_of(t->key, ctx_->params().size()), t->coeff);
  return out;
}

TruncatedPolynomial TruncatedPolynomial::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  TruncatedPolynomial result = constant(ctx_, Rational(1));
  TruncatedPolynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

TruncatedPolynomial TruncatedPolynomial::inverse() const {
  return TruncatedPolynomial(ctx_, detail::inverse(terms_, ctx_->max_degree()));
}

TruncatedPolynomial TruncatedPolynomial::derivative(const std::string& symbol) const {
  std::size_t i = symbol_index(ctx_->params(), symbol);
  if (ctx_->max_degree() == 0)
    throw Error(Errc::exponent_out_of_range, "derivative needs parameter degree at least 1");
  auto ctx = make_context(ctx_->params(), ctx_->order(), ctx_->max_degree() - 1);
  detail::TermList out;
  for (const auto& t : terms_) {
    int e = detail::key_exponent(t.key, i);
    if (e == 0) continue;
    out.push_back({t.key - detail::unit_key(i), t.coeff * Rational(e)});
  }
  std::sort(out.begin(), out.end(), [](const detail::Term& x, const detail::Term& y) { return x.key < y.key; });
  return TruncatedPolynomial(std::move(ctx), std::move(out));
}

TruncatedPolynomial TruncatedPolynomial::euler_operator(const std::string& symbol) const {
  std::size_t i = symbol_index(ctx_->params(), symbol);
  detail::TermList out;
  for (const auto& t : terms_) {
    int e = detail::key_exponent(t.key, i);
    if (e != 0) out.push_back({t.key, t.coeff * Rational(e)});
  }
  return TruncatedPolynomial(ctx_, std::move(out));
}

TruncatedPolynomial TruncatedPolynomial::integral_operator(const std::string& symbol) const {
  std::size_t i = symbol_index(ctx_->params(), symbol);
  detail::TermList out = terms_;
  for (auto& t : out) {
    int e = detail::key_exponent(t.key, i);
    if (e == 0)
      throw Error(Errc::invalid_argument, "integral operator needs every term divisible by " + symbol);
    t.coeff /= Rational(e);
  }
  return TruncatedPolynomial(ctx_, std::move(out));
}

TruncatedPolynomial TruncatedPolynomial::substitute(const Bindings& bindings) const {
  const ParamSet& params = ctx_->params();
  std::vector<std::string> bound;
  std::vector<std::optional<Rational>> value(params.size());
  for (const auto& [name, v] : bindings) {
    value[symbol_index(params, name)] = v;
    bound.push_back(name);
  }
  ParamSet rest = params.without(bound);
  auto ctx = make_context(rest, ctx_->order(), ctx_->max_degree());
  std::vector<std::size_t> target(params.size());
  for (std::size_t i = 0; i < params.size(); ++i)
    if (!value[i]) target[i] = *rest.index_of(params[i]);
  detail::Accumulator acc;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    std::vector<int> e(rest.size(), 0);
    for (std::size_t i = 0; i < params.size() && !c.is_zero(); ++i) {
      int k = detail::key_exponent(t.key, i);
      if (value[i]) {
        if (k) c *= value[i]->pow(k);
      } else {
        e[target[i]] = k;
      }
    }
    if (!c.is_zero()) acc.add({detail::Term{detail::make_key(e), c}});
  }
  return TruncatedPolynomial(std::move(ctx), acc.take());
}

std::ostream& operator<<(std::ostream& os, const TruncatedPolynomial& p) { return os << p.to_string(); }

std::string format_monomial(const ParamSet& params, const std::vector<int>& exponents) {
  std::string s;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += params[i];
    if (exponents[i] > 1) s += '^' + std::to_string(exponents[i]);
  }
  return s;
}

std::string TruncatedPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    std::string m = format_monomial(ctx_->params(), e);
    bool negative = c.sign() < 0;
    Rational mag = c.abs();
    std::string body = m.empty() ? mag.to_string() : mag.is_one() ? m : mag.to_string() + "*" + m;
    if (first)
      s = negative ? "-" + body : body;
    else
      s += (negative ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& o) {
  require_same_ring(*ctx_, *o.ctx_);
  terms_ = detail::add(terms_, o.terms_);
  return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator-=(const TruncatedPolynomial& o) {
  require_same_ring(*ctx_, *o.ctx_);
  terms_ = detail::sub(terms_, o.terms_);
  return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator*=(const TruncatedPolynomial& o) {
  require_same_ring(*ctx_, *o.ctx_);
  terms_ = detail::mul(terms_, o.terms_, ctx_->max_degree());
  return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator*=(const Rational& r) {
  detail::scale_in_place(terms_, r);
  return *this;
}

TruncatedPolynomial operator-(const TruncatedPolynomial& a) {
  TruncatedPolynomial r = a;
  detail::negate_in_place(r.terms_);
  return r;
}

bool operator==(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  require_same_ring(*a.ctx_, *b.ctx_);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

}  // namespace qsv
