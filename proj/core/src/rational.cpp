#include <qsv/error.hpp>
#include <qsv/rational.hpp>

#include <cctype>

namespace qsv {

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class to_mpz(std::string_view s) {
  std::string digits(s.front() == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(Errc::not_a_unit, "zero denominator");
  v_ = mpq_class(num, 1) / mpq_class(den, 1);
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  if (!valid_integer(num)) throw Error(Errc::parse_error, "not a rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(to_mpz(num));
  std::string_view den = s.substr(slash + 1);
  if (!valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw Error(Errc::parse_error, "not a rational: '" + std::string(text) + "'");
  mpz_class d = to_mpz(den);
  if (d == 0) throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(to_mpz(num), d);
  return Rational(std::move(q));
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::not_a_unit, "inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(num, den));
}

void Rational::add_mul(const Rational& x, const Rational& y) {
  if (v_.get_den() == 1 && x.v_.get_den() == 1 && y.v_.get_den() == 1) {
    mpz_addmul(v_.get_num_mpz_t(), x.v_.get_num_mpz_t(), y.v_.get_num_mpz_t());
    return;
  }
  v_ += x.v_ * y.v_;
}

void Rational::sub_mul(const Rational& x, const Rational& y) {
  if (v_.get_den() == 1 && x.v_.get_den() == 1 && y.v_.get_den() == 1) {
    mpz_submul(v_.get_num_mpz_t(), x.v_.get_num_mpz_t(), y.v_.get_num_mpz_t());
    return;
  }
  v_ -= x.v_ * y.v_;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::not_a_unit, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const { return v_.get_str(10); }

}  // namespace qsv
