#include <qsv/arithmetic.hpp>
#include <qsv/error.hpp>

#include <algorithm>

namespace qsv {

std::vector<long> divisors(long n) {
  if (n <= 0) throw Error(Errc::invalid_argument, "divisors of a non-positive integer");
  std::vector<long> small, large;
  for (long e = 1; e * e <= n; ++e) {
    if (n % e) continue;
    small.push_back(e);
    if (e != n / e) large.push_back(n / e);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

long divisor_count(long n) { return static_cast<long>(divisors(n).size()); }

long divisor_count_2mod4(long n) {
  auto d = divisors(n);
  return std::count_if(d.begin(), d.end(), [](long e) { return e % 4 == 2; });
}

Rational divisor_power_sum(long n, int m, const Rational& a) {
  Rational s(0);
  for (long e : divisors(n)) s += Rational(e).pow(m) * a.pow(e);
  return s;
}

long divisor_sign_sum(long n) {
  long s = 0;
  for (long e : divisors(n)) s += (e + n / e) % 2 == 0 ? 1 : -1;
  return s;
}

}  // namespace qsv
