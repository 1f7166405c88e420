#pragma once

#include <qsv/rational.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qsv {

// Ordered set of parameter symbols. The order fixes the monomial layout and
// rendering; canonical() sorts by a < b < c < d < z < t, then alphabetically.
class ParamSet {
 public:
  static constexpr std::size_t max_symbols = 6;

  ParamSet() = default;
  explicit ParamSet(std::vector<std::string> symbols);
  static ParamSet canonical(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::string& operator[](std::size_t i) const { return symbols_[i]; }
  std::optional<std::size_t> index_of(const std::string& symbol) const;
  bool contains(const std::string& symbol) const { return index_of(symbol).has_value(); }
  ParamSet without(const std::vector<std::string>& removed) const;

  friend bool operator==(const ParamSet&, const ParamSet&) = default;

 private:
  std::vector<std::string> symbols_;
};

// Truncation data shared by polynomials and series: parameter symbols,
// q-order N and total parameter degree M. Polynomials ignore N.
class Context {
 public:
  static constexpr int max_degree_limit = 120;

  Context(ParamSet params, int order, int max_degree);

  const ParamSet& params() const { return params_; }
  int order() const { return order_; }
  int max_degree() const { return max_degree_; }

  bool same_coefficient_ring(const Context& o) const {
    return max_degree_ == o.max_degree_ && params_ == o.params_;
  }
  friend bool operator==(const Context&, const Context&) = default;

  std::string to_string() const;

 private:
  ParamSet params_;
  int order_;
  int max_degree_;
};

using ContextPtr = std::shared_ptr<const Context>;
ContextPtr make_context(ParamSet params, int order, int max_degree);

using Bindings = std::map<std::string, Rational>;

namespace detail {

// Monomial key: total degree in the top byte, exponent of symbol i in byte 5-i.
// Keys add under multiplication as long as every exponent stays below 256.
using Key = std::uint64_t;

inline int key_degree(Key k) { return static_cast<int>(k >> 56); }
inline int key_exponent(Key k, std::size_t i) {
  return static_cast<int>((k >> (8 * (5 - i))) & 0xFF);
}
Key make_key(const std::vector<int>& exponents);
inline Key unit_key(std::size_t i) { return (Key{1} << 56) | (Key{1} << (8 * (5 - i))); }

struct Term {
  Key key;
  Rational coeff;
};

// Sorted by key, no zero coefficients.
using TermList = std::vector<Term>;

}  // namespace detail

// Polynomial in the parameters, reduced modulo monomials of degree > M.
class TruncatedPolynomial {
 public:
  explicit TruncatedPolynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  TruncatedPolynomial(ContextPtr ctx, detail::TermList terms)
      : ctx_(std::move(ctx)), terms_(std::move(terms)) {}

  static TruncatedPolynomial constant(ContextPtr ctx, const Rational& value);
  static TruncatedPolynomial symbol(ContextPtr ctx, const std::string& name);
  static TruncatedPolynomial monomial(ContextPtr ctx, const Rational& coeff,
                                      const std::map<std::string, int>& exponents);

  const ContextPtr& context() const { return ctx_; }
  const detail::TermList& raw_terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational constant_term() const;
  std::optional<Rational> as_constant() const;
  Rational coefficient(const std::map<std::string, int>& exponents) const;
  // Smallest total degree present, or nullopt for zero.
  std::optional<int> min_degree() const;

  // Terms in rendering order: total degree ascending, then exponent vectors
  // descending lexicographically (a^2, a*b, b^2).
  std::vector<std::pair<std::vector<int>, Rational>> terms() const;

  TruncatedPolynomial pow(int e) const;
  // Requires a nonzero constant term.
  TruncatedPolynomial inverse() const;
  TruncatedPolynomial derivative(const std::string& symbol) const;
  // a d/da
  TruncatedPolynomial euler_operator(const std::string& symbol) const;
  // integral from 0 to a of f(t)/t dt; every term must contain the symbol.
  TruncatedPolynomial integral_operator(const std::string& symbol) const;
  // Result lives over the remaining symbols.
  TruncatedPolynomial substitute(const Bindings& bindings) const;

  std::string to_string() const;

  TruncatedPolynomial& operator+=(const TruncatedPolynomial& o);
  TruncatedPolynomial& operator-=(const TruncatedPolynomial& o);
  TruncatedPolynomial& operator*=(const TruncatedPolynomial& o);
  TruncatedPolynomial& operator*=(const Rational& r);

  friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a += b; }
  friend TruncatedPolynomial operator-(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a -= b; }
  friend TruncatedPolynomial operator*(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a *= b; }
  friend TruncatedPolynomial operator*(TruncatedPolynomial a, const Rational& r) { return a *= r; }
  friend TruncatedPolynomial operator*(const Rational& r, TruncatedPolynomial a) { return a *= r; }
  friend TruncatedPolynomial operator-(const TruncatedPolynomial& a);

  friend bool operator==(const TruncatedPolynomial& a, const TruncatedPolynomial& b);

 private:
  ContextPtr ctx_;
  detail::TermList terms_;
};

std::ostream& operator<<(std::ostream& os, const TruncatedPolynomial& p);

// Renders an exponent vector such as "a^2*b"; empty string for 1.
std::string format_monomial(const ParamSet& params, const std::vector<int>& exponents);

}  // namespace qsv
