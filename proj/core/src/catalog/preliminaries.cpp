#include "support.hpp"

namespace qsv::catalog_detail {

namespace {

IdentityRecord qbinomial() {
  auto lhs = [](const SideArgs& a) {
    QSeries x = a.x("a"), z = a.x("z");
    return sum_running_product(0, a.one(), [&](const QSeries& p, int n) {
      return divide_one_minus(times_one_minus(p * z, x, n), a.one(), n + 1);
    });
  };
  auto rhs = [](const SideArgs& a) {
    QSeries x = a.x("a"), z = a.x("z");
    return over_poch(times_poch(a.one(), x * z, 0), z, 0);
  };
  return analytic("qbinomial", "q-binomial theorem", "sum_{n>=0} (a)_n z^n/(q)_n = (az)_inf/(z)_inf",
                  {either("a"), symbolic("z")}, lhs, rhs);
}

IdentityRecord qbinomial_limit() {
  auto lhs = [](const SideArgs& a) {
    QSeries x = a.x("a");
    return sum_running_product(0, a.one(), [&](const QSeries& p, int n) {
      return divide_one_minus(-(p * x).shifted(n + 1), a.one(), n + 1);
    });
  };
  auto rhs = [](const SideArgs& a) { return times_poch(a.one(), a.x("a"), 1); };
  return analytic("qbinomial-limit", "Euler's limit of the q-binomial theorem",
                  "sum_{n>=0} (-a)^n q^(n(n+1)/2)/(q)_n = (aq)_inf", {either("a")}, lhs, rhs);
}

// prod_{k=1..n, k != skip} (1 - q^k)
QSeries poch_without(const SideArgs& a, int n, int skip) {
  QSeries f = a.one();
  for (int k = 1; k <= n; ++k)
    if (k != skip) f = times_one_minus(f, a.one(), k);
  return f;
}

IdentityRecord van_hamme() {
  auto lhs = [](const SideArgs& a) {
    int n = a.index();
    QSeries s(a.context());
    for (int r = 1; r <= n; ++r) s += poch_without(a, n, r).shifted(r);
    return s;
  };
  auto rhs = [](const SideArgs& a) {
    int n = a.index();
    QSeries s(a.context());
    for (int r = 1; r <= n; ++r)
      s += (gaussian_binomial(a.context(), n, r) * poch_without(a, n, r)).shifted(tri(r)) * Rational(sgn(r - 1));
    return s;
  };
  IdentityRecord r = analytic("van-hamme", "van Hamme's finite Kluyver identity",
                              "(q)_n sum_{r=1}^{n} q^r/(1 - q^r) = (q)_n sum_{r=1}^{n} [n r] (-1)^(r-1) "
                              "q^(r(r+1)/2)/(1 - q^r); both sides are polynomials of degree below n^2 + n",
                              {}, lhs, rhs);
  r.family = IndexRange{1, 25};
  r.order_for = [](int order, int n) { return std::max(order, n * n + n); };
  return r;
}

IdentityRecord heine_special() {
  auto lhs = [](const SideArgs& a) {
    QSeries x = a.x("a"), y = a.x("b"), c = a.x("c"), z = a.x("z");
    QSeries bc = y * c;
    return sum_running_product(0, a.one(), [&](const QSeries& p, int n) {
      QSeries t = times_one_minus(times_one_minus(p * z, x, n), y, n).shifted(1);
      return divide_one_minus(divide_one_minus(t, a.one(), n + 1), bc, n + 1);
    });
  };
  auto rhs = [](const SideArgs& a) {
    QSeries x = a.x("a"), y = a.x("b"), c = a.x("c"), z = a.x("z");
    QSeries bc = y * c, bz = y * z, az = x * z;
    QSeries s = sum_running_product(0, a.one(), [&](const QSeries& p, int n) {
      QSeries t = times_one_minus(times_diff(p, c, az, n), y, n).shifted(1);
      return divide_one_minus(divide_one_minus(t, a.one(), n + 1), bz, n + 1);
    });
    QSeries pre = over_poch(over_poch(times_poch(times_poch(a.one(), c, 1), bz, 1), bc, 1), z, 1);
    return pre * s;
  };
  return analytic("heine-special", "Heine's transformation with positive-valuation arguments",
                  "2phi1(a, b; bcq; q, zq) = (cq)_inf (bzq)_inf/((bcq)_inf (zq)_inf) 2phi1(az/c, b; bzq; q, cq), "
                  "the right series written with (az/c)_n c^n = prod_{k<n}(c - a z q^k)",
                  {either("a"), either("b"), either("c"), either("z")}, lhs, rhs);
}

IdentityRecord andrews_finite_rank() {
  auto lhs = [](const SideArgs& a) {
    int big = a.index();
    Rational z = a.value("z");
    QSeries zs = a.constant(z), zi = a.constant(z.inverse());
    QSeries s(a.context());
    for (int n = 0; n <= big && n * n <= a.order(); ++n) {
      QSeries t = (gaussian_binomial(a.context(), big, n) * times_poch(a.one(), a.one(), 1, n)).shifted(n * n);
      s += over_poch(over_poch(t, zs, 1, n), zi, 1, n);
    }
    return s;
  };
  auto rhs = [](const SideArgs& a) {
    int big = a.index();
    Rational z = a.value("z");
    QSeries zs = a.constant(z), zi = a.constant(z.inverse());
    QSeries s = over_poch(a.one(), a.one(), 1, big);
    for (int n = 1; n <= big; ++n) {
      int e = n * (3 * n + 1) / 2;
      if (e > a.order()) break;
      QSeries t = (gaussian_binomial(a.context(), big, n) * times_poch(a.one(), a.one(), 1, n)).shifted(e);
      t = over_poch(t, a.one(), 1, n + big) * Rational(sgn(n));
      // 1/(1 - z q^n) - 1/(z - q^n), the second as z^(-1)/(1 - z^(-1) q^n)
      QSeries bracket = divide_one_minus(a.one(), zs, n) - divide_one_minus(zi, zi, n);
      s += t * bracket * (Rational(1) - z);
    }
    return s;
  };
  IdentityRecord r = analytic("andrews-finite-rank", "Andrews' finite rank generating function",
                              "sum_{n=0}^{N} [N n] (q)_n q^(n^2)/((zq)_n (q/z)_n) = 1/(q)_N + (1 - z) sum_{n=1}^{N} "
                              "[N n] (-1)^n (q)_n q^(n(3n+1)/2)/(q)_(n+N) (1/(1 - z q^n) - 1/(z - q^n))",
                              {sampled("z", {Rational(0)})}, lhs, rhs);
  r.family = IndexRange{1, 12};
  return r;
}

IdentityRecord andrews_z1() {
  auto lhs = [](const SideArgs& a) { return a.one(); };
  auto rhs = [](const SideArgs& a) {
    int big = a.index();
    QSeries s(a.context());
    for (int n = 0; n <= big && n * n <= a.order(); ++n)
      s += times_poch(gaussian_binomial(a.context(), big, n).shifted(n * n), a.one(), n + 1, big - n);
    return s;
  };
  IdentityRecord r = analytic("andrews-z1", "Andrews' finite identity at z = 1",
                              "(q)_N times 1/(q)_N = sum_{n=0}^{N} [N n] q^(n^2)/(q)_n, i.e. "
                              "1 = sum_{n=0}^{N} [N n] q^(n^2) (q^(n+1))_(N-n), a polynomial identity",
                              {}, lhs, rhs);
  r.family = IndexRange{1, 25};
  r.order_for = [](int order, int n) { return std::max(order, n * n + tri(n)); };
  return r;
}

// d/dx of an Andrews side at x = 1, where x is z or c. The side is built
// with x symbolic and a degree bound high enough that nothing the
// substitution x = 1 needs is truncated: x has degree at most N in the
// coefficient of q^N, and the other parameter keeps degree M.
QSeries derivative_at_one(const SideArgs& a, const std::string& x, QSeries (*side)(const SideArgs&)) {
  std::string other = x == "z" ? "c" : "z";
  int degree = std::max(a.max_degree(), a.order() + (a.is_symbolic(other) ? a.max_degree() : 0)) + 1;
  if (degree > Context::max_degree_limit)
    throw Error(Errc::exponent_out_of_range, "diff-z needs parameter degree " + std::to_string(degree));
  SideArgs wide = a.rebuilt(a.order(), degree, {x});
  QSeries f = substitute(differentiate(side(wide), x), Bindings{{x, Rational(1)}});
  return truncate(f, a.order(), a.max_degree());
}

// H_n = sum_{r=1}^{n} q^r/(1 - q^r), built incrementally.
struct Harmonic {
  const SideArgs& a;
  std::vector<QSeries> h;
  const QSeries& operator()(int n) {
    if (h.empty()) h.push_back(QSeries(a.context()));
    while (static_cast<int>(h.size()) <= n) {
      int r = static_cast<int>(h.size());
      h.push_back(h.back() + divide_one_minus(a.q(r), a.one(), r));
    }
    return h[n];
  }
};

// sum_{n>=1} x^n q^(n^2)/((q)_n (xq)_n) weighted by extra(n)
QSeries rank_like(const SideArgs& a, const QSeries& x, const std::function<QSeries(const QSeries&, int)>& extra) {
  QSeries start = divide_one_minus(divide_one_minus(x.shifted(1), a.one(), 1), x, 1);
  return sum_running_product(
      1, start,
      [&](const QSeries& p, int n) {
        return divide_one_minus(divide_one_minus((p * x).shifted(2 * n + 1), a.one(), n + 1), x, n + 1);
      },
      extra);
}

// sum_{n>=1} n x^n q^(n^2)/((q)_n (xq)_n) - 1/(xq)_inf sum_{s>=1} (-x)^s q^(s(s+1)/2)/(1 - q^s) (1/(q)_s - 1)
QSeries simplified_lhs(const SideArgs& a, const QSeries& x) {
  QSeries first = rank_like(a, x, [](const QSeries& p, int n) { return p * Rational(n); });
  QSeries second(a.context());
  QSeries power = -x.shifted(1);                    // (-x)^s q^(s(s+1)/2)
  QSeries scaled = divide_one_minus(power, a.one(), 1);  // the same over (q)_s
  for (int s = 1; !power.is_zero(); ++s) {
    second += divide_one_minus(scaled - power, a.one(), s);
    power = -(power * x).shifted(s + 1);
    scaled = divide_one_minus(-(scaled * x).shifted(s + 1), a.one(), s + 1);
  }
  return first - over_poch(second, x, 1);
}

IdentityRecord diff_z() {
  IdentityRecord r;
  r.id = "diff-z";
  r.kind = IdentityKind::analytic;
  r.reference = "Andrews' symmetric identity differentiated (route to Entry 2)";
  r.statement =
      "d/dz of both sides of sum z^n c^n q^(n^2)/((zq)_n (cq)_n) = z sum (cq)^n/(zq)_n at z = 1 equals "
      "sum c^n q^(n^2)/((q)_n (cq)_n) (n + H_n) and sum (cq)^n/(q)_n (1 + H_n), H_n = sum_{r<=n} q^r/(1 - q^r), "
      "and their simplified forms; likewise d/dc at c = 1, whose right side is sum n z q^n/(zq)_n";
  r.params = {either("c"), either("z")};
  auto side = [&r](std::string name, SeriesBuilder b) { r.sides.push_back(Side{std::move(name), std::move(b), {}}); };
  side("lhs", [](const SideArgs& a) { return derivative_at_one(a, "z", andrews_lhs); });
  side("rhs", [](const SideArgs& a) { return derivative_at_one(a, "z", andrews_rhs); });
  side("lhs-direct", [](const SideArgs& a) {
    Harmonic h{a, {}};
    return rank_like(a, a.x("c"), [&](const QSeries& p, int n) { return p * (a.constant(n) + h(n)); });
  });
  side("rhs-direct", [](const SideArgs& a) {
    Harmonic h{a, {}};
    QSeries c = a.x("c");
    return sum_running_product(
        1, divide_one_minus(c.shifted(1), a.one(), 1),
        [&](const QSeries& p, int n) { return divide_one_minus((p * c).shifted(1), a.one(), n + 1); },
        [&](const QSeries& p, int n) { return p * (a.one() + h(n)); });
  });
  side("lhs-simplified", [](const SideArgs& a) { return simplified_lhs(a, a.x("c")); });
  side("rhs-simplified", [](const SideArgs& a) {
    QSeries c = a.x("c");
    QSeries inv = over_poch(a.one(), c, 1);
    QSeries s = sum_running_product(
        1, divide_one_minus(c.shifted(2), a.one(), 1),
        [&](const QSeries& p, int n) { return divide_one_minus(-(p * c).shifted(n + 2), a.one(), n + 1); },
        [&](const QSeries& p, int n) { return divide_one_minus(p, a.one(), n); });
    return inv - a.one() + inv * s;
  });
  side("lhs-c", [](const SideArgs& a) { return derivative_at_one(a, "c", andrews_lhs); });
  side("rhs-c", [](const SideArgs& a) { return derivative_at_one(a, "c", andrews_rhs); });
  side("lhs-c-simplified", [](const SideArgs& a) { return simplified_lhs(a, a.x("z")); });
  side("rhs-c-simplified", [](const SideArgs& a) {
    QSeries z = a.x("z");
    return z * sum_running_product(
                   1, divide_one_minus(a.q(), z, 1),
                   [&](const QSeries& p, int n) { return divide_one_minus(p.shifted(1), z, n + 1); },
                   [](const QSeries& p, int n) { return p * Rational(n); });
  });
  r.checks = {{"lhs", "rhs"},           {"lhs", "lhs-direct"},       {"rhs", "rhs-direct"},
              {"lhs", "lhs-simplified"}, {"rhs", "rhs-simplified"},   {"lhs-c", "rhs-c"},
              {"lhs-c", "lhs-c-simplified"}, {"rhs-c", "rhs-c-simplified"}};
  r.plan = bound_plan();
  return r;
}

IdentityRecord madhya() {
  auto lhs = [](const SideArgs& a) {
    int r = a.index();
    QSeries c = a.x("c");
    return sum_running_product(0, a.one(), [&](const QSeries& p, int t) {
      QSeries u = (p * c).shifted(2 * t + 1 + 2 * r);
      return divide_one_minus(divide_one_minus(u, c, r + 1 + t), a.one(), t + 1);
    });
  };
  auto rhs = [](const SideArgs& a) {
    int r = a.index();
    QSeries c = a.x("c");
    QSeries s = sum_running_product(0, a.one(), [&](const QSeries& p, int t) {
      QSeries u = -(times_one_minus(p, a.one(), r + t) * c).shifted(r + t + 1);
      return divide_one_minus(u, a.one(), t + 1);
    });
    return over_poch(s, c, r + 1);
  };
  IdentityRecord rec = analytic("madhya", "Heine limit used in the proof of Entry 2",
                                "sum_{t>=0} q^(t^2) (c q^(2r))^t/((c q^(r+1))_t (q)_t) = "
                                "1/(c q^(r+1))_inf sum_{t>=0} (q^r)_t (-c)^t q^(rt + t(t+1)/2)/(q)_t",
                                {either("c")}, lhs, rhs);
  rec.family = IndexRange{1, 5};
  return rec;
}

IdentityRecord uchimura_one_var() {
  auto lhs = [](const SideArgs& a) {
    QSeries z = a.x("z");
    return sum_running_product(
        1, divide_one_minus(a.q(), a.one(), 1),
        [&](const QSeries& p, int n) { return divide_one_minus(-(p * z).shifted(n + 1), a.one(), n + 1); },
        [&](const QSeries& p, int n) { return divide_one_minus(p, a.one(), n); });
  };
  auto rhs = [](const SideArgs& a) {
    QSeries z = a.x("z");
    return sum_family(
        a.context(), 1, [&](int n) { return times_poch(a.q(n) * Rational(n), z, n + 1); },
        [](int n) { return n; }, [](int) { return 0; });
  };
  return analytic("uchimura-one-var", "one-variable Uchimura identity",
                  "sum_{n>=1} (-z)^(n-1) q^(n(n+1)/2) / ((q)_n (1 - q^n)) = sum_{n>=1} n q^n (z q^(n+1))_inf",
                  {either("z")}, lhs, rhs);
}

IdentityRecord uchimura_form2() {
  auto lhs = [](const SideArgs& a) {
    QSeries z = a.x("z");
    QSeries s = sum_running_product(
        1, divide_one_minus(-z.shifted(1), a.one(), 1),
        [&](const QSeries& p, int n) { return divide_one_minus(-(p * z).shifted(n + 1), a.one(), n + 1); },
        [&](const QSeries& p, int n) { return divide_one_minus(p, a.one(), n); });
    return -over_poch(s, z, 1);
  };
  auto rhs = [](const SideArgs& a) {
    QSeries z = a.x("z");
    return z * sum_running_product(
                   1, divide_one_minus(a.q(), z, 1),
                   [&](const QSeries& p, int n) { return divide_one_minus(p.shifted(1), z, n + 1); },
                   [](const QSeries& p, int n) { return p * Rational(n); });
  };
  return analytic("uchimura-form2", "one-variable Uchimura identity, second form",
                  "-1/(zq)_inf sum_{n>=1} (-z)^n q^(n(n+1)/2) / ((q)_n (1 - q^n)) = sum_{n>=1} n z q^n/(zq)_n",
                  {either("z")}, lhs, rhs);
}

}  // namespace

std::vector<IdentityRecord> preliminary_entries() {
  return {qbinomial(), qbinomial_limit(), van_hamme(), heine_special(), andrews_finite_rank(), andrews_z1(),
          diff_z(), madhya(), uchimura_one_var(), uchimura_form2()};
}

}  // namespace qsv::catalog_detail
