#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace qsv {

// Exact rational number in canonical form (positive denominator, reduced).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}
  Rational(long num, long den);
  explicit Rational(const mpz_class& value) : v_(value) {}
  explicit Rational(mpq_class value);

  // Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& get() const { return v_; }

  Rational inverse() const;
  Rational pow(long e) const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  // this += x * y without a temporary in the common all-integer case.
  void add_mul(const Rational& x, const Rational& y);
  void sub_mul(const Rational& x, const Rational& y);

  std::string to_string() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  mpq_class v_;
};

}  // namespace qsv
