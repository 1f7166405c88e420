#include "support.hpp"

namespace qsv::catalog_detail {

namespace {

TruncatedPolynomial signed_omega(const SideArgs& a) {
  return class_sum(a, PartitionClass::pstar, [&](const Partition& p, const PartitionStats& st) {
    return a.scalar(Rational(sgn(st.count - 1) * omega_weight(p)));
  });
}

TruncatedPolynomial omega_sum(const SideArgs& a) {
  return class_sum(a, PartitionClass::pstar,
                   [&](const Partition& p, const PartitionStats&) { return a.scalar(Rational(omega_weight(p))); });
}

Rational d24_combination(int n) { return Rational(divisor_count(n) - 4 * divisor_count_2mod4(n)); }

IdentityRecord thm_d24() {
  auto lhs = [](const SideArgs& a) { return a.scalar(d24_combination(a.index())); };
  return combinatorial("thm-d24", "divisors congruent to 2 mod 4 via omega weights",
                       "d(n) - 4 d_{2,4}(n) = sum over P*(n) of (-1)^(#-1) omega, "
                       "omega = nu(l) prod_{i<l} (2 nu(i) - 1)",
                       {}, lhs, signed_omega);
}

IdentityRecord prop_overp() {
  auto lhs = [](const SideArgs& a) { return a.scalar(Rational(overpartition_count(a.index()))); };
  auto rhs = [](const SideArgs& a) { return omega_sum(a) * Rational(2); };
  return combinatorial("prop-overp", "overpartitions via omega weights", "pbar(n) = 2 sum over P*(n) of omega", {},
                       lhs, rhs);
}

IdentityRecord thm_dstar() {
  auto lhs = [](const SideArgs& a) { return a.scalar(Rational(divisor_count(a.index()))); };
  auto rhs = [](const SideArgs& a) {
    TruncatedPolynomial s = class_sum(a, PartitionClass::dstar, [&](const Partition&, const PartitionStats& st) {
      return a.scalar(Rational(sgn(st.count - 1) * (*st.second_smallest - st.smallest)));
    });
    return a.scalar(Rational(1 + a.index() / 2)) - s;
  };
  return combinatorial("thm-dstar", "divisor count via partitions whose largest part repeats twice",
                       "d(n) = 1 + floor(n/2) - sum over D*(n) of (-1)^(#-1) (s_2 - s)", {}, lhs, rhs);
}

IdentityRecord part_imp_entry4() {
  auto lhs = [](const SideArgs& a) {
    TruncatedPolynomial x = a.poly("a");
    return class_sum(a, PartitionClass::distinct,
                     [&](const Partition&, const PartitionStats& st) { return weights::entry4(st, x); });
  };
  auto rhs = [](const SideArgs& a) {
    TruncatedPolynomial x = a.poly("a"), s(a.context());
    for (long e : divisors(a.index())) s += x.pow(static_cast<int>(e));
    return s;
  };
  IdentityRecord r = combinatorial("part-imp-entry4", "weighted partition form of Entry 4",
                                   "sum over D(n) of (-1)^(#-1) a^(l-s+1) (a^s - 1)/(a - 1) = sum_{e|n} a^e",
                                   {either("a")}, lhs, rhs);
  r.degree_for = [](int max_degree, int n_last) { return std::max(max_degree, n_last); };
  return r;
}

Rational two_pow(int e) { return Rational(2).pow(e); }

IdentityRecord prop_conj() {
  auto lhs = [](const SideArgs& a) {
    return class_sum(a, PartitionClass::all, [&](const Partition&, const PartitionStats& st) {
      return a.scalar(two_pow(st.distinct_count - 1) * Rational(sgn(st.largest - 1)));
    });
  };
  auto rhs = [](const SideArgs& a) {
    return class_sum(a, PartitionClass::distinct, [&](const Partition&, const PartitionStats& st) {
      return a.scalar(Rational(st.smallest % 2 == 1 ? sgn(st.count - 1) : 0));
    });
  };
  return combinatorial("prop-conj", "conjugated form of the c = 1, z = -1 weighted identity",
                       "sum over P(n) of (-1)^(l-1) 2^(nu_d - 1) = sum over D(n) with s odd of (-1)^(#-1)", {}, lhs,
                       rhs);
}

// Left and right sides of the d = -1 specialization of the two-variable
// identity, with z and c given as series.
QSeries wpi_lhs(const SideArgs& a, const QSeries& z, const QSeries& c) {
  QSeries start = divide_one_minus(divide_one_minus(a.q(), z, 1), c, 1);
  return sum_running_product(1, start, [&](const QSeries& p, int n) {
    QSeries t = (p * z + (p * z * c).shifted(n)).shifted(n + 1);
    return divide_one_minus(divide_one_minus(t, z, n + 1), c, n + 1);
  });
}

QSeries wpi_rhs(const SideArgs& a, const QSeries& z, const QSeries& c) {
  return sum_running_product(1, divide_one_minus(a.q(), z, 1), [&](const QSeries& p, int n) {
    return divide_one_minus((p * c + (p * z).shifted(n)).shifted(1), z, n + 1);
  });
}

IdentityRecord wpi_d_neg1() {
  auto lhs = [](const SideArgs& a) { return wpi_lhs(a, a.x("z"), a.x("c")); };
  auto rhs = [](const SideArgs& a) { return wpi_rhs(a, a.x("z"), a.x("c")); };
  return analytic("wpi-d-neg1", "two-variable identity at d = -1",
                  "sum_{n>=1} z^(n-1) (-cq)_(n-1) q^(n(n+1)/2) / ((zq)_n (cq)_n) = "
                  "sum_{n>=1} prod_{k=1}^{n-1}(c + z q^k) q^n/(zq)_n",
                  {either("z"), either("c")}, lhs, rhs);
}

IdentityRecord id_dczneg1() {
  auto lhs = [](const SideArgs& a) { return wpi_lhs(a, -a.one(), -a.one()); };
  auto rhs = [](const SideArgs& a) {
    return sum_family(
        a.context(), 1,
        [&](int n) { return divide_one_minus(a.q(n) * Rational(sgn(n - 1)), -a.one(), n); },
        [](int n) { return n; }, [](int) { return 0; });
  };
  IdentityRecord r = analytic("id-dczneg1", "d = c = z = -1 specialization (OEIS A228441)",
                              "sum_{n>=1} (-1)^(n-1) (q)_(n-1) q^(n(n+1)/2)/(-q)_n^2 = sum_{n>=1} (-1)^(n-1) q^n/(1 + q^n)"
                              " = sum_{k>=1} sum_{e|k} (-1)^(e + k/e) q^k, with coefficients d(k) - 4 d_{2,4}(k) "
                              "and sum over P*(k) of (-1)^(#-1) omega",
                              {}, lhs, rhs);
  r.kind = IdentityKind::mixed;
  add_side(r, "divisor-signs", [](const SideArgs& a) {
    return coefficient_series(a, [](int n) { return Rational(divisor_sign_sum(n)); });
  }, "rhs");
  add_side(r, "d24", [](const SideArgs& a) { return coefficient_series(a, d24_combination); }, "rhs");
  add_side(r, "enum", [](const SideArgs& a) {
    return enumerated(a, PartitionClass::pstar, [&](const Partition& p, const PartitionStats& st) {
      return a.scalar(Rational(sgn(st.count - 1) * omega_weight(p)));
    });
  });
  return r;
}

IdentityRecord id_dneg1_cz1() {
  auto lhs = [](const SideArgs& a) { return wpi_lhs(a, a.one(), a.one()); };
  auto rhs = [](const SideArgs& a) { return wpi_rhs(a, a.one(), a.one()); };
  IdentityRecord r = analytic("id-dneg1-cz1", "d = -1, c = z = 1 specialization",
                              "sum_{n>=1} (-q)_(n-1) q^(n(n+1)/2)/(q)_n^2 = sum_{n>=1} (-q)_(n-1) q^n/(q)_n, "
                              "coefficients sum over P*(n) of omega = sum over P(n) of 2^(nu_d - 1) = pbar(n)/2",
                              {}, lhs, rhs);
  r.kind = IdentityKind::mixed;
  add_side(r, "enum-omega", [](const SideArgs& a) {
    return enumerated(a, PartitionClass::pstar, [&](const Partition& p, const PartitionStats&) {
      return a.scalar(Rational(omega_weight(p)));
    });
  });
  add_side(r, "enum-two-pow", [](const SideArgs& a) {
    return enumerated(a, PartitionClass::all, [&](const Partition&, const PartitionStats& st) {
      return a.scalar(two_pow(st.distinct_count - 1));
    });
  }, "rhs");
  add_side(r, "half-overp", [](const SideArgs& a) {
    QSeries g = over_poch(times_poch(a.one(), -a.one(), 1), a.one(), 1);
    return (g - a.one()) * Rational(1, 2);
  }, "rhs");
  return r;
}

IdentityRecord id_dneg1_c1_zneg1() {
  auto lhs = [](const SideArgs& a) { return wpi_lhs(a, -a.one(), a.one()); };
  auto rhs = [](const SideArgs& a) { return wpi_rhs(a, -a.one(), a.one()); };
  IdentityRecord r = analytic("id-dneg1-c1-zneg1", "d = -1, c = 1, z = -1 specialization",
                              "sum_{n>=1} (-1)^(n-1) q^(n(n+1)/2)/((1 + q^n)(q)_n) = sum_{n>=1} (q)_(n-1) q^n/(-q)_n, "
                              "coefficients sum over P*(n) with nu(l) odd of (-1)^(l-1) = "
                              "sum over P(n) of (-1)^(#-1) 2^(nu_d - 1)",
                              {}, lhs, rhs);
  r.kind = IdentityKind::mixed;
  add_side(r, "direct", [](const SideArgs& a) {
    return sum_running_product(
        1, divide_one_minus(a.q(), a.one(), 1),
        [&](const QSeries& p, int n) { return divide_one_minus(-p.shifted(n + 1), a.one(), n + 1); },
        [&](const QSeries& p, int n) { return divide_one_minus(p, -a.one(), n); });
  });
  add_side(r, "enum-pstar", [](const SideArgs& a) {
    return enumerated(a, PartitionClass::pstar, [&](const Partition&, const PartitionStats& st) {
      return a.scalar(Rational(st.nu(st.largest) % 2 == 1 ? sgn(st.largest - 1) : 0));
    });
  });
  add_side(r, "enum-two-pow", [](const SideArgs& a) {
    return enumerated(a, PartitionClass::all, [&](const Partition&, const PartitionStats& st) {
      return a.scalar(two_pow(st.distinct_count - 1) * Rational(sgn(st.count - 1)));
    });
  }, "rhs");
  return r;
}

// sum_{m>=0} (-1)^m q^(m(m-1)/2) b^m/(b)_m (a q^m/(1 - a q^m) - b q^m/(1 - b q^m))
QSeries c0dm_rhs(const SideArgs& a, const QSeries& x, const QSeries& y) {
  return sum_running_product(
      0, a.one(),
      [&](const QSeries& p, int m) { return divide_one_minus(-(p * y).shifted(m), y, m); },
      [&](const QSeries& p, int m) {
        return divide_one_minus((p * x).shifted(m), x, m) - divide_one_minus((p * y).shifted(m), y, m);
      });
}

IdentityRecord c0_dm() {
  auto lhs = [](const SideArgs& a) {
    QSeries x = a.x("a"), y = a.x("b");
    return sum_running_product(1, divide_one_minus(x - y, y, 0), [&](const QSeries& p, int n) {
      return divide_one_minus(times_diff(p, x, y, n), y, n);
    });
  };
  auto rhs = [](const SideArgs& a) { return c0dm_rhs(a, a.x("a"), a.x("b")); };
  return analytic("c0-dm", "Dixit-Maji identity at c = 0",
                  "sum_{n>=1} (b/a)_n a^n/(b)_n = "
                  "sum_{m>=0} (-1)^m q^(m(m-1)/2) b^m/(b)_m (a q^m/(1 - a q^m) - b q^m/(1 - b q^m))",
                  {symbolic("a"), symbolic("b")}, lhs, rhs);
}

IdentityRecord c0_dm_final() {
  auto lhs = [](const SideArgs& a) {
    TruncatedPolynomial t = a.poly("t");
    return enumerated(a, PartitionClass::all,
                      [&](const Partition&, const PartitionStats& st) { return weights::c0dm_lhs(st, t); });
  };
  auto rhs = [](const SideArgs& a) {
    TruncatedPolynomial t = a.poly("t");
    return enumerated(a, PartitionClass::all,
                      [&](const Partition& p, const PartitionStats& st) { return weights::c0dm_rhs(p, st, t); });
  };
  IdentityRecord r = analytic("c0-dm-final", "weighted partition identity from the c = 0 Dixit-Maji case",
                              "sum over P(n), s >= 2 of t^(l + # - 2) (1 - 1/t)^(nu_d - 1) = sum over P(n), l = 2 "
                              "of t^# + sum over P1*(n), s = 2, l >= 3 of (-1)^l t^# nu(l - 1); both sides are "
                              "q/(1 - q) times the c = 0 identity at a = tq, b = tq^2",
                              {either("t")}, lhs, rhs);
  r.kind = IdentityKind::mixed;
  // q/(1 - q) sum_{n>=1} (q)_n t^n q^n/(tq^2)_n
  add_side(r, "lhs-series", [](const SideArgs& a) {
    QSeries t = a.x("t");
    QSeries s = sum_running_product(1, divide_one_minus(times_one_minus(t.shifted(1), a.one(), 1), t, 2),
                                    [&](const QSeries& p, int n) {
                                      QSeries u = times_one_minus((p * t).shifted(1), a.one(), n + 1);
                                      return divide_one_minus(u, t, n + 2);
                                    });
    return divide_one_minus(s.shifted(1), a.one(), 1);
  });
  add_side(r, "rhs-series", [](const SideArgs& a) {
    QSeries t = a.x("t");
    return divide_one_minus(c0dm_rhs(a, t.shifted(1), t.shifted(2)).shifted(1), a.one(), 1);
  }, "rhs");
  return r;
}

}  // namespace

std::vector<IdentityRecord> partition_entries() {
  return {thm_d24(), prop_overp(), thm_dstar(), part_imp_entry4(), prop_conj(), c0_dm_final()};
}

std::vector<IdentityRecord> specialization_entries() {
  return {wpi_d_neg1(), id_dczneg1(), id_dneg1_cz1(), id_dneg1_c1_zneg1(), c0_dm()};
}

}  // namespace qsv::catalog_detail
