#pragma once

#include <qsv/arithmetic.hpp>
#include <qsv/catalog.hpp>
#include <qsv/error.hpp>
#include <qsv/weights.hpp>

#include <functional>
#include <string>
#include <vector>

namespace qsv::catalog_detail {

inline int tri(int n) { return n * (n + 1) / 2; }
inline int sgn(long e) { return e % 2 == 0 ? 1 : -1; }

// f (x - y q^k)
inline QSeries times_diff(const QSeries& f, const QSeries& x, const QSeries& y, int k) {
  if (k > f.order()) return f * x;
  return f * x - (f * y).shifted(k);
}
// f / prod_{j<n} (1 - x q^(shift+j)); n < 0 means the infinite product.
QSeries over_poch(QSeries f, const QSeries& x, int shift, int n = -1);
// f prod_{j<n} (1 - x q^(shift+j)); n < 0 means the infinite product.
QSeries times_poch(QSeries f, const QSeries& x, int shift, int n = -1);

using SeriesWeight = std::function<TruncatedPolynomial(const Partition&, const PartitionStats&)>;
// sum_{n>=first} (sum over the class of w) q^n
QSeries enumerated(const SideArgs& a, PartitionClass c, const SeriesWeight& w, int first = 1);
// sum over the class of n = a.index() of w
TruncatedPolynomial class_sum(const SideArgs& a, PartitionClass c, const SeriesWeight& w);
// sum_{n>=1} f(n) q^n
QSeries coefficient_series(const SideArgs& a, const std::function<Rational(int)>& f);

// Sampling plans.
// Symbolic-mode parameters stay symbolic everywhere. The fully symbolic
// sample is added when it has at most `symbolic_limit` symbols; then come
// `config.samples` samples binding every other parameter and, when no
// parameter is forced symbolic, one sample per parameter keeping only that
// parameter symbolic.
SamplingPlan default_plan(std::size_t symbolic_limit = 2);
// Every non-symbolic parameter bound in every sample.
SamplingPlan bound_plan();
// Each group of parameters kept symbolic in turn while the rest are bound.
SamplingPlan group_plan(std::vector<std::vector<std::string>> groups);
// The plan repeated for each value of an integer slot.
SamplingPlan slot_plan(std::string slot, std::vector<long> values, SamplingPlan inner);

// The config's pool (or the parameter's own) without excluded values.
std::vector<Rational> pool_for(const ParamSpec& p, const VerificationConfig& config);
Rational rotated(const std::vector<Rational>& pool, unsigned seed, std::size_t i, std::size_t j);

ParamSpec either(std::string name, std::vector<Rational> excluded = {});
ParamSpec symbolic(std::string name);
ParamSpec sampled(std::string name, std::vector<Rational> excluded = {});

IdentityRecord analytic(std::string id, std::string reference, std::string statement, std::vector<ParamSpec> params,
                        SeriesBuilder lhs, SeriesBuilder rhs);
IdentityRecord combinatorial(std::string id, std::string reference, std::string statement,
                             std::vector<ParamSpec> params, ValueBuilder lhs, ValueBuilder rhs);
// Adds side `name` and the check `against = name`.
void add_side(IdentityRecord& r, std::string name, SeriesBuilder b, std::string against = "lhs");
void add_value_side(IdentityRecord& r, std::string name, ValueBuilder b, std::string against = "lhs");

// Side builders shared between entries.
QSeries dm_entry3_like_lhs(const SideArgs& a, const QSeries& c);
QSeries andrews_lhs(const SideArgs& a);
QSeries andrews_rhs(const SideArgs& a);

std::vector<IdentityRecord> ramanujan_entries();
std::vector<IdentityRecord> generalization_entries();
std::vector<IdentityRecord> preliminary_entries();
std::vector<IdentityRecord> partition_entries();
std::vector<IdentityRecord> specialization_entries();

}  // namespace qsv::catalog_detail
