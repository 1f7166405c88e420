#include "support.hpp"

namespace qsv::catalog_detail {

QSeries andrews_lhs(const SideArgs& a) {
  QSeries z = a.x("z"), c = a.x("c");
  QSeries zc = z * c;
  QSeries start = divide_one_minus(divide_one_minus(zc.shifted(1), z, 1), c, 1);
  return sum_running_product(1, start, [&](const QSeries& p, int n) {
    return divide_one_minus(divide_one_minus((p * zc).shifted(2 * n + 1), z, n + 1), c, n + 1);
  });
}

QSeries andrews_rhs(const SideArgs& a) {
  QSeries z = a.x("z"), c = a.x("c");
  QSeries start = divide_one_minus(c.shifted(1), z, 1);
  return z * sum_running_product(1, start, [&](const QSeries& p, int n) {
           return divide_one_minus((p * c).shifted(1), z, n + 1);
         });
}

namespace {

// sum_{m>=0} prod_{k<m}(c - b q^k) q^m/(b)_m (a/(1 - a q^m) - b/(1 - b q^m))
QSeries dm_rhs(const SideArgs& a, const QSeries& c) {
  QSeries x = a.x("a"), y = a.x("b");
  return sum_running_product(
      0, a.one(),
      [&](const QSeries& p, int m) { return divide_one_minus(times_diff(p, c, y, m).shifted(1), y, m); },
      [&](const QSeries& p, int m) { return divide_one_minus(p * x, x, m) - divide_one_minus(p * y, y, m); });
}

IdentityRecord dixit_maji_1() {
  auto lhs = [](const SideArgs& a) { return dm_entry3_like_lhs(a, a.x("c")); };
  auto rhs = [](const SideArgs& a) { return dm_rhs(a, a.x("c")); };
  return analytic("dixit-maji-1", "Dixit-Maji generalization of Entry 3",
                  "sum_{n>=1} (b/a)_n a^n / ((1 - c q^n)(b)_n) = "
                  "sum_{m>=0} (b/c)_m c^m/(b)_m (a q^m/(1 - a q^m) - b q^m/(1 - b q^m))",
                  {symbolic("a"), symbolic("b"), either("c")}, lhs, rhs);
}

IdentityRecord dixit_maji_2() {
  auto lhs = [](const SideArgs& a) { return dm_entry3_like_lhs(a, a.x("c")); };
  auto rhs = [](const SideArgs& a) {
    QSeries x = a.x("a"), y = a.x("b");
    Rational g = a.value("c");
    QSeries gs = a.constant(g), ratio = y * g.inverse();
    // inner(n) = sum_{m>=1} (a^m - b^m)/(1 - c q^(m+n)); a^m - b^m has degree m.
    auto inner = [&](int n) {
      return sum_family(
          a.context(), 1,
          [&, px = a.one(), py = a.one()](int m) mutable {
            px = px * x;
            py = py * y;
            return divide_one_minus(px - py, gs, m + n);
          },
          [](int) { return 0; }, [](int m) { return m; });
    };
    QSeries s = sum_running_product(
        0, a.one(),
        [&](const QSeries& p, int n) { return divide_one_minus(times_one_minus(p * ratio, gs, n), a.one(), n + 1); },
        [&](const QSeries& p, int n) { return p * inner(n); });
    return over_poch(times_poch(s, ratio, 0), y, 0);
  };
  return analytic("dixit-maji-2", "Dixit-Maji double-sum form",
                  "sum_{n>=1} (b/a)_n a^n / ((1 - c q^n)(b)_n) = (b/c)_inf/(b)_inf "
                  "sum_{n>=0} (c)_n (b/c)^n/(q)_n sum_{m>=1} (a^m - b^m)/(1 - c q^(m+n))",
                  {symbolic("a"), symbolic("b"), sampled("c", {Rational(0)})}, lhs, rhs);
}

IdentityRecord agl_one_var() {
  auto lhs = [](const SideArgs& a) {
    QSeries z = a.x("z"), c = a.x("c");
    return sum_running_product(
        1, divide_one_minus(z.shifted(1), z, 1),
        [&](const QSeries& p, int n) { return divide_one_minus(-(p * z).shifted(n + 1), z, n + 1); },
        [&](const QSeries& p, int n) { return divide_one_minus(p, c, n); });
  };
  auto rhs = [](const SideArgs& a) {
    QSeries z = a.x("z"), c = a.x("c");
    return z * sum_running_product(1, divide_one_minus(a.q(), z, 1), [&](const QSeries& p, int n) {
             return divide_one_minus(times_diff(p, c, z, n).shifted(1), z, n + 1);
           });
  };
  return analytic("agl-one-var", "Dixit-Maji one-variable generalization of Andrews-Garvan-Liang",
                  "sum_{n>=1} (-1)^(n-1) z^n q^(n(n+1)/2) / ((1 - c q^n)(zq)_n) = "
                  "z sum_{n>=1} prod_{k=1}^{n-1}(c - z q^k) q^n/(zq)_n",
                  {either("z"), either("c")}, lhs, rhs);
}

IdentityRecord main_theorem() {
  auto lhs = [](const SideArgs& a) {
    QSeries x = a.x("a"), y = a.x("b"), c = a.x("c"), d = a.x("d");
    QSeries start = divide_one_minus(divide_one_minus((x - y) * (d - c), y, 0), c, 1);
    return sum_running_product(1, start, [&](const QSeries& p, int n) {
      QSeries t = times_diff(times_diff(p, x, y, n), d, c, n);
      return divide_one_minus(divide_one_minus(t, y, n), c, n + 1);
    });
  };
  auto rhs = [](const SideArgs& a) {
    QSeries x = a.x("a"), y = a.x("b"), c = a.x("c"), d = a.x("d");
    QSeries ad = x * d, bd = y * d;
    QSeries start = divide_one_minus(divide_one_minus(a.one(), y, 0), ad, 0);
    QSeries s = sum_running_product(0, start, [&](const QSeries& p, int m) {
      QSeries t = times_diff(times_one_minus(p, x, m), c, bd, m).shifted(1);
      return divide_one_minus(divide_one_minus(t, y, m + 1), ad, m + 1);
    });
    return (x - y) * (d - c) * s;
  };
  IdentityRecord r =
      analytic("main-theorem", "one-variable generalization of the Dixit-Maji identity",
               "sum_{n>=1} (b/a)_n (c/d)_n (ad)^n / ((b)_n (cq)_n) = "
               "(a - b)(d - c) sum_{m>=0} (a)_m (bd/c)_m c^m q^m / ((b)_(m+1) (ad)_(m+1)), "
               "the factor (ad - b) cancelled against the bracket",
               {either("a"), either("b", {Rational(1)}), either("c"), either("d")}, lhs, rhs);
  r.plan = group_plan({{"a", "b"}, {"c", "d"}});
  r.validate = [](const Sample& s) {
    auto bound = [&](const char* p) { return s.bound.count(p) > 0; };
    if (bound("a") && bound("d") && s.bound.at("a") * s.bound.at("d") == Rational(1))
      throw Error(Errc::constraint_violation, "a*d must differ from 1");
    if ((bound("a") || bound("b")) && (bound("c") || bound("d")))
      throw Error(Errc::constraint_violation, "keep a and b, or c and d, symbolic: the left side does not terminate");
  };
  return r;
}

IdentityRecord two_var_agl() {
  auto lhs = [](const SideArgs& a) {
    QSeries z = a.x("z"), c = a.x("c"), d = a.x("d");
    QSeries start = divide_one_minus(divide_one_minus((-z * (d - c)).shifted(1), z, 1), c, 1);
    return sum_running_product(1, start, [&](const QSeries& p, int n) {
      QSeries t = times_diff(-(p * z), d, c, n).shifted(n + 1);
      return divide_one_minus(divide_one_minus(t, z, n + 1), c, n + 1);
    });
  };
  auto rhs = [](const SideArgs& a) {
    QSeries z = a.x("z"), c = a.x("c"), d = a.x("d");
    QSeries zd = z * d;
    QSeries s = sum_running_product(1, divide_one_minus(a.q(), z, 1), [&](const QSeries& p, int n) {
      return divide_one_minus(times_diff(p, c, zd, n).shifted(1), z, n + 1);
    });
    return z * (c - d) * s;
  };
  return analytic("two-var-agl", "two-variable generalization of Andrews-Garvan-Liang",
                  "sum_{n>=1} (-z)^n (c/d)_n d^n q^(n(n+1)/2) / ((zq)_n (cq)_n) = "
                  "z (c - d) sum_{n>=1} prod_{k=1}^{n-1}(c - z d q^k) q^n/(zq)_n",
                  {either("z"), either("c"), either("d")}, lhs, rhs);
}

IdentityRecord andrews_symmetric() {
  IdentityRecord r = analytic("andrews-symmetric", "Andrews' identity symmetric in z and c",
                              "sum_{n>=1} z^n c^n q^(n^2) / ((zq)_n (cq)_n) = z sum_{n>=1} (cq)^n/(zq)_n",
                              {either("z"), either("c")}, andrews_lhs, andrews_rhs);
  add_side(r, "rhs-swapped", [](const SideArgs& a) { return andrews_rhs(a.swapped("z", "c")); });
  add_side(r, "lhs-swapped", [](const SideArgs& a) { return andrews_lhs(a.swapped("z", "c")); });
  return r;
}

IdentityRecord rank_gf() {
  auto lhs = [](const SideArgs& a) {
    Rational z = a.value("z");
    QSeries zs = a.constant(z), zi = a.constant(z.inverse());
    QSeries start = divide_one_minus(divide_one_minus(a.q(), zs, 1), zi, 1);
    return sum_running_product(1, start, [&](const QSeries& p, int n) {
      return divide_one_minus(divide_one_minus(p.shifted(2 * n + 1), zs, n + 1), zi, n + 1);
    });
  };
  auto rhs = [](const SideArgs& a) {
    Rational z = a.value("z");
    QSeries zs = a.constant(z);
    Rational zi = z.inverse();
    return sum_running_product(1, divide_one_minus(a.q(), zs, 1), [&](const QSeries& p, int n) {
      return divide_one_minus((p * zi).shifted(1), zs, n + 1);
    });
  };
  IdentityRecord r = analytic("rank-gf", "rank generating function",
                              "sum_{n>=1} q^(n^2) / ((zq)_n (q/z)_n) = sum_{n>=1} z (q/z)^n/(zq)_n = "
                              "sum_{n>=1} sum_m N(m, n) z^m q^n",
                              {sampled("z", {Rational(0)})}, lhs, rhs);
  r.kind = IdentityKind::mixed;
  add_side(r, "enum", [](const SideArgs& a) {
    Rational z = a.value("z");
    return enumerated(a, PartitionClass::all,
                      [&](const Partition&, const PartitionStats& st) { return a.scalar(z.pow(st.rank)); });
  });
  return r;
}

IdentityRecord bs_one_var() {
  auto lhs = [](const SideArgs& a) {
    int m = static_cast<int>(a.slot("m"));
    TruncatedPolynomial x = a.poly("a");
    return class_sum(a, PartitionClass::distinct,
                     [&](const Partition&, const PartitionStats& st) { return weights::bs_general(st, m, x); });
  };
  auto rhs = [](const SideArgs& a) {
    int m = static_cast<int>(a.slot("m"));
    TruncatedPolynomial x = a.poly("a"), s(a.context());
    for (long e : divisors(a.index())) s += x.pow(static_cast<int>(e)) * Rational(e).pow(m);
    return s;
  };
  IdentityRecord r = combinatorial("bs-one-var", "one-parameter Bressoud-Subbarao identity",
                                   "sum over D(n) of (-1)^(#-1) sum_{j=1}^{s} (l - s + j)^m a^(l - s + j) = "
                                   "sum_{e|n} e^m a^e, m any integer",
                                   {either("a")}, lhs, rhs);
  r.slots = {"m"};
  r.plan = slot_plan("m", {-3, -2, -1, 0, 1, 2, 3}, default_plan());
  r.degree_for = [](int max_degree, int n_last) { return std::max(max_degree, n_last); };
  return r;
}

IdentityRecord bs_a_neg1() {
  auto lhs = [](const SideArgs& a) {
    int m = static_cast<int>(a.slot("m"));
    return class_sum(a, PartitionClass::distinct, [&](const Partition&, const PartitionStats& st) {
      Rational s(0);
      for (int j = 1; j <= st.smallest; ++j) s += Rational(sgn(j)) * Rational(st.largest - st.smallest + j).pow(m);
      return a.scalar(s * Rational(sgn(st.rank + st.smallest - 1)));
    });
  };
  auto rhs = [](const SideArgs& a) {
    int m = static_cast<int>(a.slot("m"));
    Rational s(0);
    for (long e : divisors(a.index())) s += Rational(sgn(e)) * Rational(e).pow(m);
    return a.scalar(s);
  };
  IdentityRecord r = combinatorial("bs-a-neg1", "Bressoud-Subbarao analogue at a = -1",
                                   "sum over D(n) of (-1)^(rank + s - 1) sum_{j=1}^{s} (-1)^j (l - s + j)^m = "
                                   "sum_{e|n} (-1)^e e^m",
                                   {}, lhs, rhs);
  r.slots = {"m"};
  r.plan = slot_plan("m", {-3, -2, -1, 0, 1, 2, 3}, default_plan());
  return r;
}

}  // namespace

std::vector<IdentityRecord> generalization_entries() {
  return {dixit_maji_1(), dixit_maji_2(), agl_one_var(), main_theorem(), two_var_agl(),
          andrews_symmetric(), rank_gf(), bs_one_var(), bs_a_neg1()};
}

}  // namespace qsv::catalog_detail
