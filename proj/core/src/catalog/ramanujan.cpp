#include "support.hpp"

namespace qsv::catalog_detail {

namespace {

// sum_{n>=1} (-1)^(n-1) x^n q^(n(n+1)/2) / ((1 - q^n)(xq)_n), shared by
// Entry 4 and Kluyver's identity.
QSeries entry4_lhs(const SideArgs& a, const QSeries& x) {
  QSeries start = divide_one_minus((x * a.q()), x, 1);
  return sum_running_product(
      1, start,
      [&](const QSeries& p, int n) { return divide_one_minus(-(p * x).shifted(n + 1), x, n + 1); },
      [&](const QSeries& p, int n) { return divide_one_minus(p, a.one(), n); });
}

// sum_{n>=1} x^n q^n / (1 - q^n)
QSeries lambert(const SideArgs& a, const QSeries& x) {
  return sum_family(
      a.context(), 1,
      [&, p = a.one()](int n) mutable {
        p = p * x;
        return divide_one_minus(p.shifted(n), a.one(), n);
      },
      [](int n) { return n; }, [](int) { return 0; });
}

IdentityRecord entry1() {
  auto lhs = [](const SideArgs& a) {
    return over_poch(times_poch(a.one(), -a.x("a"), 1), a.x("b"), 1);
  };
  auto rhs = [](const SideArgs& a) {
    QSeries x = a.x("a"), y = a.x("b");
    return sum_running_product(0, a.one(), [&](const QSeries& p, int n) {
      QSeries t = (p * x + (p * y).shifted(n)).shifted(n + 1);
      return divide_one_minus(divide_one_minus(t, a.one(), n + 1), y, n + 1);
    });
  };
  return analytic("entry1", "Ramanujan's Entry 1",
                  "(-aq)_inf/(bq)_inf = sum_{n>=0} prod_{k<n}(a + b q^k) q^(n(n+1)/2) / ((q)_n (bq)_n)",
                  {either("a"), either("b")}, lhs, rhs);
}

IdentityRecord entry2() {
  auto lhs = [](const SideArgs& a) {
    QSeries x = a.x("a");
    QSeries start = divide_one_minus(divide_one_minus(x.shifted(1), a.one(), 1), x, 1);
    QSeries s = sum_running_product(
        1, start,
        [&](const QSeries& p, int n) {
          QSeries t = (p * x).shifted(2 * n + 1);
          return divide_one_minus(divide_one_minus(t, a.one(), n + 1), x, n + 1);
        },
        [](const QSeries& p, int n) { return p * Rational(n); });
    return times_poch(s, x, 1);
  };
  auto rhs = [](const SideArgs& a) {
    QSeries x = a.x("a");
    return sum_running_product(
        1, x.shifted(1), [&](const QSeries& p, int n) { return -(p * x).shifted(n + 1); },
        [&](const QSeries& p, int n) { return divide_one_minus(p, a.one(), n); });
  };
  return analytic("entry2", "Ramanujan's Entry 2",
                  "(aq)_inf sum_{n>=1} n a^n q^(n^2) / ((q)_n (aq)_n) = "
                  "sum_{n>=1} (-1)^(n-1) a^n q^(n(n+1)/2) / (1 - q^n)",
                  {either("a")}, lhs, rhs);
}

// sum_{n>=1} prod_{k<n} (a - b q^k)/(1 - b q^k) / (1 - c q^n); the
// products have parameter valuation n, so a and b must stay symbolic.
QSeries entry3_like_lhs(const SideArgs& a, const QSeries& c) {
  QSeries x = a.x("a"), y = a.x("b");
  QSeries start = divide_one_minus(x - y, y, 0);
  return sum_running_product(
      1, start,
      [&](const QSeries& p, int n) { return divide_one_minus(times_diff(p, x, y, n), y, n); },
      [&](const QSeries& p, int n) { return divide_one_minus(p, c, n); });
}

IdentityRecord entry3() {
  auto lhs = [](const SideArgs& a) { return entry3_like_lhs(a, a.one()); };
  auto rhs = [](const SideArgs& a) {
    QSeries x = a.x("a"), y = a.x("b");
    return sum_family(
        a.context(), 1,
        [&, px = a.one(), py = a.one()](int n) mutable {
          px = px * x;
          py = py * y;
          return divide_one_minus(px - py, a.one(), n);
        },
        [](int) { return 0; }, [](int n) { return n; });
  };
  return analytic("entry3", "Ramanujan's Entry 3",
                  "sum_{n>=1} (b/a)_n a^n / ((1 - q^n)(b)_n) = sum_{n>=1} (a^n - b^n)/(1 - q^n)",
                  {symbolic("a"), symbolic("b")}, lhs, rhs);
}

IdentityRecord entry4() {
  auto lhs = [](const SideArgs& a) { return entry4_lhs(a, a.x("a")); };
  auto rhs = [](const SideArgs& a) { return lambert(a, a.x("a")); };
  return analytic("entry4", "Ramanujan's Entry 4 (Uchimura)",
                  "sum_{n>=1} (-1)^(n-1) a^n q^(n(n+1)/2) / ((1 - q^n)(aq)_n) = sum_{n>=1} a^n q^n/(1 - q^n)",
                  {either("a")}, lhs, rhs);
}

IdentityRecord entry5() {
  auto lhs = [](const SideArgs& a) {
    QSeries x = a.x("a");
    return sum_running_product(
        1, divide_one_minus(x, x, 0),
        [&](const QSeries& p, int n) { return divide_one_minus(times_one_minus(p * x, a.one(), n), x, n); },
        [&](const QSeries& p, int n) { return divide_one_minus(p, a.one(), n); });
  };
  auto rhs = [](const SideArgs& a) {
    QSeries x = a.x("a");
    return sum_family(
        a.context(), 1,
        [&, p = a.one()](int n) mutable {
          p = p * x;
          return divide_one_minus(p * Rational(n), a.one(), n);
        },
        [](int) { return 0; }, [](int n) { return n; });
  };
  return analytic("entry5", "Ramanujan's Entry 5",
                  "sum_{n>=1} a^n (q)_(n-1) / ((1 - q^n)(a)_n) = sum_{n>=1} n a^n/(1 - q^n)", {symbolic("a")},
                  lhs, rhs);
}

IdentityRecord kluyver() {
  auto lhs = [](const SideArgs& a) { return entry4_lhs(a, a.one()); };
  auto rhs = [](const SideArgs& a) { return lambert(a, a.one()); };
  return analytic("kluyver", "Kluyver's identity",
                  "sum_{n>=1} (-1)^(n-1) q^(n(n+1)/2) / ((1 - q^n)(q)_n) = sum_{n>=1} q^n/(1 - q^n)", {}, lhs, rhs);
}

// sum_{n>=1} n q^n (x q^(n+1))_inf
QSeries uchimura_sum(const SideArgs& a, const QSeries& x) {
  return sum_family(
      a.context(), 1,
      [&](int n) { return times_poch(a.q(n) * Rational(n), x, n + 1); }, [](int n) { return n; },
      [](int) { return 0; });
}

IdentityRecord uchimura() {
  auto lhs = [](const SideArgs& a) { return uchimura_sum(a, a.one()); };
  auto rhs = [](const SideArgs& a) { return lambert(a, a.one()); };
  IdentityRecord r = analytic("uchimura", "Uchimura's identity",
                              "sum_{n>=1} n q^n (q^(n+1))_inf = sum_{n>=1} (-1)^(n-1) q^(n(n+1)/2) / ((1 - q^n)(q)_n) "
                              "= sum_{n>=1} q^n/(1 - q^n)",
                              {}, lhs, rhs);
  add_side(r, "mid", [](const SideArgs& a) { return entry4_lhs(a, a.one()); });
  return r;
}

IdentityRecord bs() {
  auto lhs = [](const SideArgs& a) {
    return class_sum(a, PartitionClass::distinct, [&](const Partition&, const PartitionStats& st) {
      return a.scalar(Rational(sgn(st.count - 1) * st.smallest));
    });
  };
  auto rhs = [](const SideArgs& a) { return a.scalar(Rational(divisor_count(a.index()))); };
  return combinatorial("bs", "Bressoud-Subbarao identity", "sum over D(n) of (-1)^(#-1) s = d(n)", {}, lhs, rhs);
}

IdentityRecord bs_general() {
  auto lhs = [](const SideArgs& a) {
    int m = static_cast<int>(a.slot("m"));
    return class_sum(a, PartitionClass::distinct, [&](const Partition&, const PartitionStats& st) {
      return weights::bs_general(st, m, a.scalar(1));
    });
  };
  auto rhs = [](const SideArgs& a) {
    return a.scalar(divisor_power_sum(a.index(), static_cast<int>(a.slot("m")), Rational(1)));
  };
  IdentityRecord r = combinatorial("bs-general", "Bressoud-Subbarao identity for divisor power sums",
                                   "sum over D(n) of (-1)^(#-1) sum_{j=1}^{s} (l - s + j)^m = sum_{e|n} e^m, m >= 0",
                                   {}, lhs, rhs);
  r.slots = {"m"};
  r.plan = slot_plan("m", {0, 1, 2, 3}, default_plan());
  r.validate = [](const Sample& s) {
    if (auto it = s.slots.find("m"); it != s.slots.end() && it->second < 0)
      throw Error(Errc::constraint_violation, "m must be nonnegative here; bs-one-var covers negative m");
  };
  return r;
}

IdentityRecord ffw_gf() {
  auto lhs = [](const SideArgs& a) {
    QSeries c = a.x("c");
    return sum_running_product(
        1, divide_one_minus(a.q(), a.one(), 1),
        [&](const QSeries& p, int n) { return divide_one_minus(-p.shifted(n + 1), a.one(), n + 1); },
        [&](const QSeries& p, int n) { return divide_one_minus(p, c, n); });
  };
  auto rhs = [](const SideArgs& a) {
    QSeries c = a.x("c");
    QSeries ratio = over_poch(times_poch(a.one(), a.one(), 1), c, 1);
    return divide_one_minus(a.one() - ratio, c, 0);
  };
  IdentityRecord r = analytic("ffw-gf", "Andrews-Garvan-Liang generating function for FFW(c, n)",
                              "sum_{n>=1} (-1)^(n-1) q^(n(n+1)/2) / ((1 - c q^n)(q)_n) = "
                              "(1 - (q)_inf/(cq)_inf)/(1 - c) = sum_{n>=1} FFW(c, n) q^n",
                              {either("c", {Rational(1)})}, lhs, rhs);
  r.kind = IdentityKind::mixed;
  add_side(r, "enum", [](const SideArgs& a) {
    TruncatedPolynomial c = a.poly("c");
    return enumerated(a, PartitionClass::distinct,
                      [&](const Partition&, const PartitionStats& st) { return weights::ffw(st, c); });
  });
  return r;
}

}  // namespace

std::vector<IdentityRecord> ramanujan_entries() {
  return {entry1(), entry2(), entry3(), entry4(), entry5(), kluyver(), uchimura(), bs(), bs_general(), ffw_gf()};
}

QSeries dm_entry3_like_lhs(const SideArgs& a, const QSeries& c) { return entry3_like_lhs(a, c); }

}  // namespace qsv::catalog_detail
