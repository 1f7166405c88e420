#pragma once

// Brute-force reference computations, written independently of the library
// code they check.

#include <functional>
#include <map>
#include <vector>

namespace oracle {

// p(0..n) by the standard coin-change recurrence.
inline std::vector<long> partition_counts(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int k = part; k <= n; ++k) p[k] += p[k - part];
  return p;
}

// Number of partitions of 0..n into distinct parts.
inline std::vector<long> distinct_counts(int n) {
  std::vector<long> q(n + 1, 0);
  q[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int k = n; k >= part; --k) q[k] += q[k - part];
  return q;
}

inline long divisor_count(long n) {
  long c = 0;
  for (long e = 1; e <= n; ++e) c += n % e == 0;
  return c;
}

// Coefficients of prod_{k in parts} (1 - q^k) by expanding over subsets.
inline std::map<int, long> signed_subset_product(const std::vector<int>& parts) {
  std::map<int, long> out;
  const unsigned long subsets = 1UL << parts.size();
  for (unsigned long s = 0; s < subsets; ++s) {
    int e = 0, sign = 1;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (s >> i & 1) {
        e += parts[i];
        sign = -sign;
      }
    out[e] += sign;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Coefficients of [n r] as counts of partitions fitting in an r x (n-r) box.
inline std::map<int, long> box_partitions(int n, int r) {
  std::map<int, long> out;
  std::vector<int> parts(r, 0);
  // Enumerate weakly decreasing sequences of r entries in [0, n-r].
  std::function<void(int, int, int)> rec = [&](int i, int max_part, int sum) {
    if (i == r) {
      ++out[sum];
      return;
    }
    for (int v = 0; v <= max_part; ++v) rec(i + 1, v, sum + v);
  };
  rec(0, n - r, 0);
  return out;
}

}  // namespace oracle
