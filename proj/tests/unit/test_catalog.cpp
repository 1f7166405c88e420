#include <qsv/catalog.hpp>
#include <qsv/error.hpp>

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace qsv;

namespace {

VerificationConfig small(int order = 10, int degree = 6) {
  VerificationConfig c;
  c.order = order;
  c.max_degree = degree;
  c.jobs = 1;
  return c;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::invalid_argument;
}

std::vector<long> integer_coefficients(const QSeries& f) {
  std::vector<long> out;
  for (int k = 0; k <= f.order(); ++k) {
    auto c = f.coefficient(k).as_constant();
    EXPECT_TRUE(c && c->is_integer()) << f.coefficient(k).to_string();
    out.push_back(c ? c->numerator().get_si() : -1);
  }
  return out;
}

}  // namespace

TEST(Catalog, RegistryShape) {
  const auto& all = catalog_entries();
  EXPECT_EQ(all.size(), 40u);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& r = all[i];
    EXPECT_TRUE(ids.insert(r.id).second) << r.id;
    if (i) EXPECT_LT(all[i - 1].id, r.id);
    EXPECT_FALSE(r.reference.empty()) << r.id;
    EXPECT_FALSE(r.statement.empty()) << r.id;
    ASSERT_FALSE(r.checks.empty()) << r.id;
    EXPECT_EQ(r.checks.front().lhs, "lhs");
    EXPECT_EQ(r.checks.front().rhs, "rhs");
    for (const auto& c : r.checks) {
      EXPECT_NO_THROW(r.side(c.lhs)) << r.id;
      EXPECT_NO_THROW(r.side(c.rhs)) << r.id;
    }
    for (const auto& p : r.free_params())
      EXPECT_TRUE(std::set<std::string>({"a", "b", "c", "d", "z", "t"}).count(p)) << r.id << " " << p;
  }
  for (const char* id :
       {"entry1", "entry2", "entry3", "entry4", "entry5", "kluyver", "uchimura", "bs", "bs-general", "ffw-gf",
        "dixit-maji-1", "dixit-maji-2", "agl-one-var", "main-theorem", "two-var-agl", "andrews-symmetric", "rank-gf",
        "bs-one-var", "bs-a-neg1", "thm-d24", "prop-overp", "thm-dstar", "qbinomial", "qbinomial-limit", "van-hamme",
        "heine-special", "andrews-finite-rank", "andrews-z1", "diff-z", "madhya", "uchimura-one-var",
        "uchimura-form2", "part-imp-entry4", "wpi-d-neg1", "id-dczneg1", "id-dneg1-cz1", "id-dneg1-c1-zneg1",
        "prop-conj", "c0-dm", "c0-dm-final"})
    EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Catalog, LookupExamples) {
  EXPECT_EQ(lookup("entry4").free_params(), (std::vector<std::string>{"a"}));
  EXPECT_EQ(lookup("main-theorem").free_params(), (std::vector<std::string>{"a", "b", "c", "d"}));
  EXPECT_EQ(lookup("bs").kind, IdentityKind::combinatorial);
  EXPECT_EQ(lookup("rank-gf").kind, IdentityKind::mixed);
  EXPECT_EQ(code_of([] { lookup("nosuch"); }), Errc::unknown_identity);
  EXPECT_EQ(code_of([] { lookup("entry4").side("middle"); }), Errc::invalid_argument);
}

TEST(Catalog, SampleConstraints) {
  EXPECT_EQ(code_of([] { make_sample(lookup("entry4"), {{"b", Rational(2)}}); }), Errc::unknown_symbol);
  EXPECT_EQ(code_of([] { make_sample(lookup("entry5"), {{"a", Rational(2)}}); }), Errc::constraint_violation);
  EXPECT_EQ(code_of([] { make_sample(lookup("ffw-gf"), {{"c", Rational(1)}}); }), Errc::constraint_violation);
  EXPECT_EQ(code_of([] { make_sample(lookup("rank-gf"), {}); }), Errc::constraint_violation);
  EXPECT_EQ(code_of([] { make_sample(lookup("main-theorem"), {{"b", Rational(1)}}); }),
            Errc::constraint_violation);
  EXPECT_EQ(code_of([] {
              make_sample(lookup("main-theorem"),
                          {{"a", Rational(2)}, {"b", Rational(3)}, {"c", Rational(5)}, {"d", Rational(1, 2)}});
            }),
            Errc::constraint_violation);
  EXPECT_EQ(code_of([] { make_sample(lookup("bs-general"), {}); }), Errc::constraint_violation);
  EXPECT_EQ(code_of([] { make_sample(lookup("bs-general"), {}, {{"k", 1}}); }), Errc::unknown_symbol);
  EXPECT_EQ(code_of([] { make_sample(lookup("bs-general"), {}, {{"m", -1}}); }), Errc::constraint_violation);
  EXPECT_NO_THROW(make_sample(lookup("bs-general"), {}, {{"m", 2}}));
}

TEST(Catalog, KluyverRhsGivesDivisorCounts) {
  const auto& r = lookup("kluyver");
  QSeries f = evaluate_side(r, "rhs", make_sample(r, {}), 8, 4);
  std::vector<long> expect{0};
  for (long n = 1; n <= 8; ++n) expect.push_back(oracle::divisor_count(n));
  EXPECT_EQ(integer_coefficients(f), expect);
  EXPECT_EQ(expect, (std::vector<long>{0, 1, 2, 2, 3, 2, 4, 2, 4}));
}

TEST(Catalog, Entry1AtOneZeroCountsDistinctParts) {
  const auto& r = lookup("entry1");
  QSeries f = evaluate_side(r, "lhs", make_sample(r, {{"a", Rational(1)}, {"b", Rational(0)}}), 6, 4);
  std::vector<long> expect = oracle::distinct_counts(6);
  EXPECT_EQ(integer_coefficients(f), expect);
  EXPECT_EQ(expect, (std::vector<long>{1, 1, 1, 2, 2, 3, 4}));
}

TEST(Catalog, BsValuesAreDivisorCounts) {
  const auto& r = lookup("bs");
  auto values = evaluate_values(r, "lhs", make_sample(r, {}), {1, 6}, 4);
  ASSERT_EQ(values.size(), 6u);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(values[n - 1].as_constant(), Rational(oracle::divisor_count(n)));
  }
  EXPECT_EQ(code_of([&] { evaluate_side(r, "lhs", make_sample(r, {}), 6, 4); }), Errc::invalid_argument);
}

TEST(Catalog, FfwGfAtTwo) {
  const auto& r = lookup("ffw-gf");
  QSeries f = evaluate_side(r, "rhs", make_sample(r, {{"c", Rational(2)}}), 3, 2);
  // FFW(2, n) by hand: n=1 {1}: 1; n=2 {2}: 1+2; n=3 {3}: 1+2+4 minus {2+1}: 1.
  EXPECT_EQ(integer_coefficients(f), (std::vector<long>{0, 1, 3, 6}));
}

TEST(Verify, MainTheorem) {
  VerificationReport rep = verify("main-theorem", small(20, 10));
  EXPECT_EQ(rep.status, VerificationStatus::pass) << rep.error.value_or("");
  EXPECT_FALSE(rep.witness);
  EXPECT_GE(rep.samples.size(), 3u);
  std::set<std::string> touched;
  for (const auto& s : rep.samples)
    for (const auto& [name, value] : s.sample.bound) touched.insert(name);
  EXPECT_EQ(touched, (std::set<std::string>{"a", "b", "c", "d"}));
}

TEST(Verify, Entry2SymbolicAtHighDegree) {
  VerificationReport rep = verify("entry2", small(20, 20));
  EXPECT_EQ(rep.status, VerificationStatus::pass);
  bool symbolic = false;
  for (const auto& s : rep.samples) symbolic |= s.symbolic == std::vector<std::string>{"a"};
  EXPECT_TRUE(symbolic);
}

TEST(Verify, CorruptedAnalyticEntryHasWitness) {
  IdentityRecord r = lookup("entry2");
  SeriesBuilder rhs = r.side("rhs").series;
  for (auto& s : r.sides)
    if (s.name == "rhs") s.series = [rhs](const SideArgs& a) { return rhs(a) + a.q(5); };
  VerificationReport rep = verify(r, small());
  ASSERT_EQ(rep.status, VerificationStatus::fail);
  ASSERT_TRUE(rep.witness);
  EXPECT_EQ(rep.witness->check, "lhs=rhs");
  EXPECT_EQ(rep.witness->q_exp, 5);
  EXPECT_EQ(rep.witness->monomial, "1");
  EXPECT_EQ(rep.witness->rhs - rep.witness->lhs, Rational(1));
  EXPECT_EQ(rep.witness->sample, 0u);

  VerificationConfig empty = small(4, 6);
  EXPECT_EQ(verify(r, empty).status, VerificationStatus::pass);
}

TEST(Verify, CorruptedCombinatorialEntryHasWitness) {
  IdentityRecord r = lookup("bs");
  ValueBuilder rhs = r.side("rhs").value;
  for (auto& s : r.sides)
    if (s.name == "rhs")
      s.value = [rhs](const SideArgs& a) { return a.index() == 4 ? rhs(a) + a.scalar(1) : rhs(a); };
  VerificationReport rep = verify(r, small());
  ASSERT_EQ(rep.status, VerificationStatus::fail);
  ASSERT_TRUE(rep.witness);
  EXPECT_EQ(rep.witness->n, 4);
  EXPECT_FALSE(rep.witness->q_exp);
  EXPECT_EQ(rep.witness->lhs, Rational(3));
  EXPECT_EQ(rep.witness->rhs, Rational(4));
}

TEST(Verify, ThrowingSideIsReportedNotRaised) {
  IdentityRecord r = lookup("entry2");
  for (auto& s : r.sides)
    if (s.name == "rhs") s.series = [](const SideArgs&) -> QSeries { throw Error(Errc::invalid_argument, "boom"); };
  VerificationReport rep = verify(r, small());
  EXPECT_EQ(rep.status, VerificationStatus::fail);
  EXPECT_EQ(rep.error.value_or(""), "invalid-argument: boom");
  for (auto& s : r.sides)
    if (s.name == "rhs") s.series = [](const SideArgs&) -> QSeries { throw Error(Errc::cap_exceeded, "big"); };
  EXPECT_EQ(verify(r, small()).status, VerificationStatus::skipped);
}

TEST(Verify, EmptyWindow) {
  VerificationConfig c = small(0, 12);
  for (const auto& rep : verify_all(c))
    EXPECT_EQ(rep.status, VerificationStatus::pass) << rep.id << " " << rep.error.value_or("");
}

TEST(Verify, SingleIndexRange) {
  VerificationConfig c = small();
  c.n_range = IndexRange{1, 1};
  for (const auto& r : catalog_entries()) {
    if (r.kind != IdentityKind::combinatorial) continue;
    VerificationReport rep = verify(r, c);
    EXPECT_EQ(rep.status, VerificationStatus::pass) << r.id;
    EXPECT_EQ(rep.order, 1) << r.id;
  }
}

TEST(Verify, InvalidConfigIsAFailure) {
  VerificationConfig c = small();
  c.samples = 2;
  VerificationReport rep = verify("entry2", c);
  EXPECT_EQ(rep.status, VerificationStatus::fail);
  EXPECT_TRUE(rep.error);
  EXPECT_FALSE(rep.witness);
}

TEST(Verify, FamilyIndicesAreCapped) {
  VerificationConfig c = small();
  c.family_last = 3;
  VerificationReport rep = verify("van-hamme", c);
  EXPECT_EQ(rep.status, VerificationStatus::pass);
  std::set<int> seen;
  for (const auto& s : rep.samples) seen.insert(s.index.value());
  EXPECT_EQ(seen, (std::set<int>{1, 2, 3}));
}

TEST(Verify, AllIsStableAndDeterministic) {
  VerificationConfig c = small(8, 5);
  auto one = verify_all(c);
  c.jobs = 3;
  auto three = verify_all(c);
  ASSERT_EQ(one.size(), catalog_entries().size());
  ASSERT_EQ(one.size(), three.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].id, catalog_entries()[i].id);
    EXPECT_EQ(one[i].id, three[i].id);
    EXPECT_EQ(one[i].status, VerificationStatus::pass) << one[i].id;
    EXPECT_EQ(one[i].samples.size(), three[i].samples.size());
    for (std::size_t k = 0; k < one[i].samples.size(); ++k)
      EXPECT_EQ(one[i].samples[k].sample, three[i].samples[k].sample);
  }
}

TEST(Verify, SeedRotatesThePool) {
  VerificationConfig c = small();
  auto a = sampling_plan(lookup("entry4"), c);
  c.seed = 1;
  auto b = sampling_plan(lookup("entry4"), c);
  EXPECT_EQ(a.size(), b.size());
  EXPECT_NE(a, b);
  EXPECT_EQ(verify("entry4", c).status, VerificationStatus::pass);
}

TEST(Verify, ExcludedValuesAreFilteredFromPlans) {
  VerificationConfig c = small();
  for (unsigned seed = 0; seed < 5; ++seed) {
    c.seed = seed;
    for (const auto& r : catalog_entries())
      for (const auto& s : sampling_plan(r, c))
        for (const auto& [name, value] : s.bound) {
          const ParamSpec* p = r.param(name);
          ASSERT_TRUE(p);
          EXPECT_EQ(std::count(p->excluded.begin(), p->excluded.end(), value), 0) << r.id << " " << name;
        }
  }
}

// A smaller window is always a prefix of a larger one; catches declared
// summation bounds that stop too early.
TEST(Properties, SmallerWindowIsAPrefix) {
  VerificationConfig c = small();
  for (const auto& r : catalog_entries()) {
    if (r.kind == IdentityKind::combinatorial) continue;
    Sample s = sampling_plan(r, c).front();
    int index = r.family ? std::min(r.family->last, r.family->first + 2) : 0;
    for (const auto& side : r.sides) {
      if (!side.series) continue;
      QSeries big = evaluate_side(r, side.name, s, 14, 8, index);
      QSeries little = evaluate_side(r, side.name, s, 9, 5, index);
      SeriesComparison cmp = compare(truncate(big, 9, 5), little);
      EXPECT_TRUE(cmp.equal) << r.id << "/" << side.name << " at q^" << cmp.witness->q_exp;
    }
  }
}

TEST(Properties, AndrewsSymmetricInZAndC) {
  const auto& r = lookup("andrews-symmetric");
  const std::vector<Rational> pool = default_sample_pool();
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      Sample zc = make_sample(r, {{"z", pool[i]}, {"c", pool[j]}});
      Sample cz = make_sample(r, {{"z", pool[j]}, {"c", pool[i]}});
      for (const char* side : {"lhs", "rhs"})
        EXPECT_EQ(evaluate_side(r, side, zc, 12, 6), evaluate_side(r, side, cz, 12, 6)) << side;
    }
  QSeries sym = evaluate_side(r, "lhs", make_sample(r, {}), 10, 6);
  QSeries swapped = evaluate_side(r, "lhs-swapped", make_sample(r, {}), 10, 6);
  EXPECT_EQ(sym, swapped);
}

TEST(Properties, SpecializationCoherence) {
  auto results = check_specializations(16, 8);
  EXPECT_GE(results.size(), 5u);
  for (const auto& c : results) {
    EXPECT_TRUE(c.pass) << c.name << " " << c.error.value_or("");
    EXPECT_FALSE(c.error);
  }
}

TEST(Properties, RankGfMatchesEnumeration) {
  const auto& r = lookup("rank-gf");
  for (Rational z : {Rational(2), Rational(1, 2), Rational(-3, 5)}) {
    Sample s = make_sample(r, {{"z", z}});
    EXPECT_EQ(evaluate_side(r, "lhs", s, 15, 2), evaluate_side(r, "enum", s, 15, 2));
  }
}
