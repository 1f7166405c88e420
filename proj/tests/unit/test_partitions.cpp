#include <qsv/error.hpp>
#include <qsv/partitions.hpp>
#include <qsv/series.hpp>

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace qsv;

namespace {

std::vector<std::string> rendered(int n, PartitionClass c) {
  std::vector<std::string> out;
  for (const auto& p : enumerate(n, c)) out.push_back(p.to_string());
  return out;
}

using Strings = std::vector<std::string>;

// Independent class membership via multiplicities.
bool naive_member(const std::vector<int>& parts, PartitionClass c) {
  std::map<int, int> nu;
  for (int p : parts) ++nu[p];
  int l = parts.front(), s = parts.back();
  bool all_between = true;
  for (int j = s; j <= l; ++j) all_between = all_between && nu.count(j);
  bool others_distinct = true;
  for (auto [v, k] : nu)
    if (v != l && k > 1) others_distinct = false;
  switch (c) {
    case PartitionClass::all: return true;
    case PartitionClass::distinct: return nu.size() == parts.size();
    case PartitionClass::pstar: return s == 1 && all_between;
    case PartitionClass::p1star: return all_between;
    case PartitionClass::d1: return others_distinct;
    case PartitionClass::dstar: return others_distinct && nu[l] == 2 && parts.size() >= 3;
    default: return false;
  }
}

}  // namespace

TEST(Enumerate, MatchesTables) {
  EXPECT_EQ(rendered(6, PartitionClass::pstar), (Strings{"3+2+1", "2+2+1+1", "2+1+1+1+1", "1+1+1+1+1+1"}));
  EXPECT_EQ(rendered(9, PartitionClass::dstar), (Strings{"4+4+1", "3+3+2+1"}));
  EXPECT_EQ(rendered(15, PartitionClass::dstar),
            (Strings{"7+7+1", "6+6+3", "6+6+2+1", "5+5+4+1", "5+5+3+2"}));
  EXPECT_EQ(rendered(1, PartitionClass::distinct), (Strings{"1"}));
  EXPECT_EQ(rendered(4, PartitionClass::all), (Strings{"4", "3+1", "2+2", "2+1+1", "1+1+1+1"}));
  EXPECT_EQ(rendered(2, PartitionClass::overpartitions), (Strings{"2", "2'", "1+1", "1'+1"}));
}

TEST(Enumerate, CountsMatchRecurrences) {
  auto p = oracle::partition_counts(40);
  auto q = oracle::distinct_counts(60);
  for (int n = 0; n <= 40; ++n) EXPECT_EQ(count_partitions(n, PartitionClass::all), p[n]) << n;
  for (int n = 0; n <= 60; ++n) EXPECT_EQ(count_partitions(n, PartitionClass::distinct), q[n]) << n;
}

TEST(Enumerate, RestrictedClassesAgreeWithFilteredPartitions) {
  for (int n = 1; n <= 22; ++n) {
    auto all = enumerate(n, PartitionClass::all);
    for (auto c : {PartitionClass::distinct, PartitionClass::pstar, PartitionClass::p1star, PartitionClass::d1,
                   PartitionClass::dstar}) {
      std::vector<Partition> filtered;
      for (const auto& p : all)
        if (naive_member(p.parts(), c)) filtered.push_back(p);
      EXPECT_EQ(enumerate(n, c), filtered) << n << " " << to_string(c);
      for (const auto& p : filtered) EXPECT_TRUE(belongs_to(p, c));
    }
  }
}

TEST(Enumerate, ReverseLexicographicAndUnique) {
  for (auto c : all_partition_classes()) {
    if (c == PartitionClass::overpartitions) continue;
    auto v = enumerate(18, c);
    for (std::size_t i = 1; i < v.size(); ++i)
      EXPECT_TRUE(std::lexicographical_compare(v[i].parts().begin(), v[i].parts().end(), v[i - 1].parts().begin(),
                                               v[i - 1].parts().end()))
          << to_string(c);
  }
}

TEST(Enumerate, OverpartitionsMatchGeneratingFunction) {
  const int order = 25;
  auto ctx = make_context(ParamSet(), order, 0);
  auto q = QSeries::q_power(ctx, 1);
  auto gf = pochhammer_infinite(-q) * invert(pochhammer_infinite(q));
  for (int n = 0; n <= order; ++n) {
    auto v = enumerate(n, PartitionClass::overpartitions);
    std::set<std::string> unique;
    for (const auto& p : v) unique.insert(p.to_string());
    EXPECT_EQ(unique.size(), v.size());
    EXPECT_EQ(gf.coefficient(n).constant_term(), Rational(static_cast<long>(v.size()))) << n;
  }
}

TEST(Enumerate, CapsAreConfigurable) {
  EXPECT_THROW(enumerate(61, PartitionClass::all), Error);
  EXPECT_THROW(enumerate(121, PartitionClass::distinct), Error);
  EnumerationCaps caps;
  caps.all = 5;
  EXPECT_THROW(enumerate(6, PartitionClass::all, caps), Error);
  EXPECT_EQ(enumerate(5, PartitionClass::all, caps).size(), 7u);
  try {
    enumerate(61, PartitionClass::all);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::cap_exceeded);
  }
}

TEST(Stats, ReadOff) {
  auto st = stats(Partition({3, 2, 1}));
  EXPECT_EQ(st.smallest, 1);
  EXPECT_EQ(st.largest, 3);
  EXPECT_EQ(st.count, 3);
  EXPECT_EQ(st.rank, 0);
  EXPECT_EQ(st.distinct_count, 3);
  auto s9 = stats(Partition({4, 4, 1}));
  EXPECT_EQ(*s9.second_smallest - s9.smallest, 3);
  EXPECT_EQ(stats(Partition({2, 2, 1, 1})).nu(2), 2);
  EXPECT_FALSE(stats(Partition({2, 2})).second_smallest.has_value());
}

TEST(Stats, InvariantsOverEnumeration) {
  for (int n = 1; n <= 20; ++n)
    for (const auto& p : enumerate(n, PartitionClass::all)) {
      auto st = stats(p);
      int total = 0, distinct = 0;
      for (int j = 0; j <= st.largest; ++j) {
        total += j * st.nu(j);
        distinct += st.nu(j) > 0;
      }
      EXPECT_EQ(total, n);
      EXPECT_EQ(distinct, st.distinct_count);
      EXPECT_EQ(st.rank, st.largest - st.count);
    }
}

TEST(Conjugate, InvolutionAndClassBijection) {
  EXPECT_EQ(conjugate(Partition({3, 2, 1})), Partition({3, 2, 1}));
  EXPECT_EQ(conjugate(Partition({4})), Partition({1, 1, 1, 1}));
  EXPECT_THROW(conjugate(Partition({2, 1}, {2})), Error);
  for (int n = 1; n <= 20; ++n) {
    for (const auto& p : enumerate(n, PartitionClass::all)) EXPECT_EQ(conjugate(conjugate(p)), p);
    // Conjugation maps "every part 1..l occurs" onto distinct parts,
    // exchanging (l, nu(l)) with (#, s).
    auto pstar = enumerate(n, PartitionClass::pstar);
    std::set<std::string> images;
    for (const auto& p : pstar) {
      auto c = conjugate(p);
      EXPECT_TRUE(belongs_to(c, PartitionClass::distinct));
      auto sp = stats(p), sc = stats(c);
      EXPECT_EQ(sp.largest, sc.count);
      EXPECT_EQ(sp.nu(sp.largest), sc.smallest);
      images.insert(c.to_string());
    }
    EXPECT_EQ(images.size(), enumerate(n, PartitionClass::distinct).size());
  }
}

TEST(PartitionClass, NamesRoundTrip) {
  for (auto c : all_partition_classes()) EXPECT_EQ(parse_partition_class(to_string(c)), c);
  EXPECT_FALSE(parse_partition_class("bogus"));
}
