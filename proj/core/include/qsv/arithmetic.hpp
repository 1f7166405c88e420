#pragma once

#include <qsv/rational.hpp>

#include <vector>

namespace qsv {

std::vector<long> divisors(long n);
long divisor_count(long n);
// Number of divisors congruent to 2 mod 4.
long divisor_count_2mod4(long n);
// sum_{e | n} e^m a^e, m may be negative.
Rational divisor_power_sum(long n, int m, const Rational& a);
// sum_{e | n} (-1)^(e + n/e)
long divisor_sign_sum(long n);

}  // namespace qsv
