#pragma once

#include <qsv/partitions.hpp>
#include <qsv/polynomial.hpp>
#include <qsv/rational.hpp>

#include <string>
#include <vector>

namespace qsv {

// Partition weights written once for rational and for polynomial slots, so
// the same code yields numbers and generating polynomials.
namespace weights {

inline Rational one_like(const Rational&) { return Rational(1); }
inline TruncatedPolynomial one_like(const TruncatedPolynomial& p) {
  return TruncatedPolynomial::constant(p.context(), Rational(1));
}
inline Rational zero_like(const Rational&) { return Rational(0); }
inline TruncatedPolynomial zero_like(const TruncatedPolynomial& p) { return TruncatedPolynomial(p.context()); }
inline Rational power(const Rational& x, int e) { return x.pow(e); }
inline TruncatedPolynomial power(const TruncatedPolynomial& x, int e) { return x.pow(e); }
inline int sign(int e) { return e % 2 == 0 ? 1 : -1; }

// 1 + x + ... + x^(k-1)
template <class V>
V geometric(const V& x, int k) {
  V s = zero_like(x);
  V p = one_like(x);
  for (int i = 0; i < k; ++i) {
    s = s + p;
    p = p * x;
  }
  return s;
}

// (-1)^(#-1) (1 + c + ... + c^(s-1)), over D(n)
template <class V>
V ffw(const PartitionStats& st, const V& c) {
  return geometric(c, st.smallest) * Rational(sign(st.count - 1));
}

// (-1)^(#-1) a^(l-s+1) (1 + a + ... + a^(s-1)), over D(n)
template <class V>
V entry4(const PartitionStats& st, const V& a) {
  return power(a, st.largest - st.smallest + 1) * geometric(a, st.smallest) * Rational(sign(st.count - 1));
}

// (-1)^(#-1) sum_{j=1}^{s} (l-s+j)^m a^(l-s+j), over D(n)
template <class V>
V bs_general(const PartitionStats& st, int m, const V& a) {
  V s = zero_like(a);
  for (int j = 1; j <= st.smallest; ++j) {
    int base = st.largest - st.smallest + j;
    s = s + power(a, base) * Rational(base).pow(m);
  }
  return s * Rational(sign(st.count - 1));
}

// (-z)^(l-1) nu(l), over the partitions containing every part 1..l
template <class V>
V pstar_top(const PartitionStats& st, const V& z) {
  return power(z, st.largest - 1) * Rational(sign(st.largest - 1) * st.nu(st.largest));
}

// (-z)^(#-1) s, over D(n)
template <class V>
V distinct_smallest(const PartitionStats& st, const V& z) {
  return power(z, st.count - 1) * Rational(sign(st.count - 1) * st.smallest);
}

// t^(l + # - 1 - nu_d) (t - 1)^(nu_d - 1) when s >= 2, over P(n)
template <class V>
V c0dm_lhs(const PartitionStats& st, const V& t) {
  if (st.smallest < 2) return zero_like(t);
  return power(t, st.largest + st.count - 1 - st.distinct_count) *
         power(t - one_like(t), st.distinct_count - 1);
}

// [l = 2] t^# + [consecutive parts, s = 2, l >= 3] (-1)^l t^# nu(l-1), over P(n)
template <class V>
V c0dm_rhs(const Partition& p, const PartitionStats& st, const V& t) {
  V w = zero_like(t);
  if (st.largest == 2) w = w + power(t, st.count);
  if (st.smallest == 2 && st.largest >= 3 && belongs_to(p, PartitionClass::p1star))
    w = w + power(t, st.count) * Rational(sign(st.largest) * st.nu(st.largest - 1));
  return w;
}

}  // namespace weights

// nu(l) prod_{i<l} (2 nu(i) - 1); defined on the class where every part
// 1..l occurs.
long omega_weight(const Partition& p);

Rational bs_weighted_sum(int n, int m, const Rational& a);
// sum over D(n) of (-1)^(rank+s-1) sum_{j=1}^{s} (-1)^j (l-s+j)^m
Rational bs_alternating_sum(int n, int m);
// sum over D(n) of (-1)^(#-1) (1 + c + ... + c^(s-1))
Rational ffw(const Rational& c, int n);
long overpartition_count(int n);
// Number of partitions of n with rank m.
long rank_count(int m, int n);

struct WeightSpec {
  std::string name;
  Bindings params;
};

// Names accepted by weighted_sum, with the parameters each one reads.
struct WeightInfo {
  std::string name;
  std::vector<std::string> params;
  std::string description;
};
const std::vector<WeightInfo>& named_weights();

Rational weighted_sum(int n, PartitionClass c, const WeightSpec& weight, const EnumerationCaps& caps = {});

}  // namespace qsv
