#include <qsv/error.hpp>
#include <qsv/weights.hpp>

#include <functional>

namespace qsv {

namespace {

using weights::sign;

Rational param(const WeightSpec& w, const std::string& name) {
  auto it = w.params.find(name);
  if (it == w.params.end())
    throw Error(Errc::invalid_argument, "weight '" + w.name + "' needs parameter '" + name + "'");
  return it->second;
}

int integer_param(const WeightSpec& w, const std::string& name) {
  Rational r = param(w, name);
  if (!r.is_integer()) throw Error(Errc::invalid_argument, "parameter '" + name + "' must be an integer");
  return static_cast<int>(r.numerator().get_si());
}

Rational sum_over(int n, PartitionClass c, const EnumerationCaps& caps,
                  const std::function<Rational(const Partition&, const PartitionStats&)>& w) {
  Rational s(0);
  for_each_partition(n, c, [&](const Partition& p) { s += w(p, stats(p)); }, caps);
  return s;
}

long two_pow(int e) { return 1L << e; }

}  // namespace

long omega_weight(const Partition& p) {
  if (!belongs_to(p, PartitionClass::pstar) || p.parts().empty())
    throw Error(Errc::wrong_class, "omega is defined on partitions containing every part 1..l, got " +
                                       p.to_string());
  PartitionStats st = stats(p);
  long w = st.nu(st.largest);
  for (int i = 1; i < st.largest; ++i) w *= 2L * st.nu(i) - 1;
  return w;
}

Rational bs_weighted_sum(int n, int m, const Rational& a) {
  return sum_over(n, PartitionClass::distinct, {},
                  [&](const Partition&, const PartitionStats& st) { return weights::bs_general(st, m, a); });
}

Rational bs_alternating_sum(int n, int m) {
  return sum_over(n, PartitionClass::distinct, {}, [&](const Partition&, const PartitionStats& st) {
    Rational inner(0);
    for (int j = 1; j <= st.smallest; ++j) inner += Rational(sign(j)) * Rational(st.largest - st.smallest + j).pow(m);
    return inner * Rational(sign(st.rank + st.smallest - 1));
  });
}

Rational ffw(const Rational& c, int n) {
  return sum_over(n, PartitionClass::distinct, {},
                  [&](const Partition&, const PartitionStats& st) { return weights::ffw(st, c); });
}

long overpartition_count(int n) { return count_partitions(n, PartitionClass::overpartitions); }

long rank_count(int m, int n) {
  long k = 0;
  for_each_partition(n, PartitionClass::all, [&](const Partition& p) { k += stats(p).rank == m; });
  return k;
}

const std::vector<WeightInfo>& named_weights() {
  static const std::vector<WeightInfo> v{
      {"one", {}, "1"},
      {"omega", {}, "nu(l) prod_{i<l} (2 nu(i) - 1)"},
      {"signed-omega", {}, "(-1)^(#-1) omega"},
      {"signed-smallest", {}, "(-1)^(#-1) s"},
      {"bs-general", {"m", "a"}, "(-1)^(#-1) sum_{j=1}^{s} (l-s+j)^m a^(l-s+j)"},
      {"bs-alternating", {"m"}, "(-1)^(rank+s-1) sum_{j=1}^{s} (-1)^j (l-s+j)^m"},
      {"ffw", {"c"}, "(-1)^(#-1) (1 + c + ... + c^(s-1))"},
      {"entry4", {"a"}, "(-1)^(#-1) a^(l-s+1) (1 + a + ... + a^(s-1))"},
      {"signed-second-gap", {}, "(-1)^(#-1) (s2 - s)"},
      {"two-pow-distinct", {}, "2^nu_d"},
      {"signed-largest-two-pow", {}, "(-1)^(l-1) 2^(nu_d - 1)"},
      {"signed-count-two-pow", {}, "(-1)^(#-1) 2^(nu_d - 1)"},
      {"signed-count-odd-smallest", {}, "(-1)^(#-1) when s is odd, else 0"},
      {"pstar-top", {"z"}, "(-z)^(l-1) nu(l)"},
      {"pstar-top-odd", {}, "(-1)^(l-1) when nu(l) is odd, else 0"},
      {"distinct-smallest", {"z"}, "(-z)^(#-1) s"},
      {"rank-power", {"z"}, "z^rank"},
      {"c0dm-lhs", {"t"}, "t^(l+#-1-nu_d) (t-1)^(nu_d-1) when s >= 2"},
      {"c0dm-rhs", {"t"}, "[l=2] t^# + [consecutive, s=2, l>=3] (-1)^l t^# nu(l-1)"},
  };
  return v;
}

Rational weighted_sum(int n, PartitionClass c, const WeightSpec& w, const EnumerationCaps& caps) {
  using Fn = std::function<Rational(const Partition&, const PartitionStats&)>;
  Fn f;
  const std::string& name = w.name;
  if (name == "one") {
    f = [](const Partition&, const PartitionStats&) { return Rational(1); };
  } else if (name == "omega") {
    f = [](const Partition& p, const PartitionStats&) { return Rational(omega_weight(p)); };
  } else if (name == "signed-omega") {
    f = [](const Partition& p, const PartitionStats& st) { return Rational(sign(st.count - 1) * omega_weight(p)); };
  } else if (name == "signed-smallest") {
    f = [](const Partition&, const PartitionStats& st) { return Rational(sign(st.count - 1) * st.smallest); };
  } else if (name == "bs-general") {
    int m = integer_param(w, "m");
    Rational a = param(w, "a");
    f = [m, a](const Partition&, const PartitionStats& st) { return weights::bs_general(st, m, a); };
  } else if (name == "bs-alternating") {
    int m = integer_param(w, "m");
    f = [m](const Partition&, const PartitionStats& st) {
      Rational inner(0);
      for (int j = 1; j <= st.smallest; ++j)
        inner += Rational(sign(j)) * Rational(st.largest - st.smallest + j).pow(m);
      return inner * Rational(sign(st.rank + st.smallest - 1));
    };
  } else if (name == "ffw") {
    Rational c = param(w, "c");
    f = [c](const Partition&, const PartitionStats& st) { return weights::ffw(st, c); };
  } else if (name == "entry4") {
    Rational a = param(w, "a");
    f = [a](const Partition&, const PartitionStats& st) { return weights::entry4(st, a); };
  } else if (name == "signed-second-gap") {
    f = [](const Partition& p, const PartitionStats& st) {
      if (!st.second_smallest)
        throw Error(Errc::wrong_class, "second smallest part undefined for " + p.to_string());
      return Rational(sign(st.count - 1) * (*st.second_smallest - st.smallest));
    };
  } else if (name == "two-pow-distinct") {
    f = [](const Partition&, const PartitionStats& st) { return Rational(two_pow(st.distinct_count)); };
  } else if (name == "signed-largest-two-pow") {
    f = [](const Partition&, const PartitionStats& st) {
      return Rational(sign(st.largest - 1) * two_pow(st.distinct_count - 1));
    };
  } else if (name == "signed-count-two-pow") {
    f = [](const Partition&, const PartitionStats& st) {
      return Rational(sign(st.count - 1) * two_pow(st.distinct_count - 1));
    };
  } else if (name == "signed-count-odd-smallest") {
    f = [](const Partition&, const PartitionStats& st) {
      return Rational(st.smallest % 2 ? sign(st.count - 1) : 0);
    };
  } else if (name == "pstar-top") {
    Rational z = param(w, "z");
    f = [z](const Partition&, const PartitionStats& st) { return weights::pstar_top(st, z); };
  } else if (name == "pstar-top-odd") {
    f = [](const Partition&, const PartitionStats& st) {
      return Rational(st.nu(st.largest) % 2 ? sign(st.largest - 1) : 0);
    };
  } else if (name == "distinct-smallest") {
    Rational z = param(w, "z");
    f = [z](const Partition&, const PartitionStats& st) { return weights::distinct_smallest(st, z); };
  } else if (name == "rank-power") {
    Rational z = param(w, "z");
    f = [z](const Partition&, const PartitionStats& st) { return z.pow(st.rank); };
  } else if (name == "c0dm-lhs") {
    Rational t = param(w, "t");
    f = [t](const Partition&, const PartitionStats& st) { return weights::c0dm_lhs(st, t); };
  } else if (name == "c0dm-rhs") {
    Rational t = param(w, "t");
    f = [t](const Partition& p, const PartitionStats& st) { return weights::c0dm_rhs(p, st, t); };
  } else {
    throw Error(Errc::unknown_weight, "'" + name + "'");
  }
  return sum_over(n, c, caps, f);
}

}  // namespace qsv
