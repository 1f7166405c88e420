#include "support.hpp"

#include <algorithm>
#include <set>

namespace qsv {

std::string_view to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::analytic: return "analytic";
    case IdentityKind::combinatorial: return "combinatorial";
    case IdentityKind::mixed: return "mixed";
  }
  return "?";
}

std::string_view to_string(VerificationStatus status) {
  switch (status) {
    case VerificationStatus::pass: return "pass";
    case VerificationStatus::fail: return "fail";
    case VerificationStatus::skipped: return "skipped";
  }
  return "?";
}

std::vector<std::string> IdentityRecord::free_params() const {
  std::vector<std::string> names;
  for (const auto& p : params) names.push_back(p.name);
  return ParamSet::canonical(names).symbols();
}

const ParamSpec* IdentityRecord::param(const std::string& name) const {
  for (const auto& p : params)
    if (p.name == name) return &p;
  return nullptr;
}

const Side& IdentityRecord::side(std::string_view name) const {
  for (const auto& s : sides)
    if (s.name == name) return s;
  std::string known;
  for (const auto& s : sides) known += (known.empty() ? "" : ", ") + s.name;
  throw Error(Errc::invalid_argument, id + " has no side '" + std::string(name) + "' (sides: " + known + ")");
}

std::vector<Rational> default_sample_pool() {
  return {Rational(2), Rational(1, 2), Rational(-1), Rational(3, 5), Rational(-3, 7)};
}

void VerificationConfig::validate() const {
  if (order < 0) throw Error(Errc::invalid_argument, "order must be nonnegative");
  if (max_degree < 0 || max_degree > Context::max_degree_limit)
    throw Error(Errc::invalid_argument, "parameter degree must lie in 0.." + std::to_string(Context::max_degree_limit));
  if (samples < 3) throw Error(Errc::invalid_argument, "at least 3 samples per parameter are required");
  if (pool.empty()) throw Error(Errc::invalid_argument, "empty sample pool");
  if (n_range && (n_range->first < 1 || n_range->last < n_range->first))
    throw Error(Errc::invalid_argument, "n range must be a nonempty range of positive integers");
  if (family_last && *family_last < 0) throw Error(Errc::invalid_argument, "family index bound must be nonnegative");
}

const std::vector<IdentityRecord>& catalog_entries() {
  static const std::vector<IdentityRecord> entries = [] {
    using namespace catalog_detail;
    std::vector<IdentityRecord> all;
    for (auto group : {ramanujan_entries(), generalization_entries(), preliminary_entries(), partition_entries(),
                       specialization_entries()})
      for (auto& r : group) all.push_back(std::move(r));
    std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
    return all;
  }();
  return entries;
}

const IdentityRecord& lookup(const std::vector<IdentityRecord>& catalog, std::string_view id) {
  for (const auto& r : catalog)
    if (r.id == id) return r;
  throw Error(Errc::unknown_identity, "no identity '" + std::string(id) + "'");
}

const IdentityRecord& lookup(std::string_view id) { return lookup(catalog_entries(), id); }

Sample make_sample(const IdentityRecord& record, const Bindings& bindings, const std::map<std::string, long>& slots) {
  Sample s;
  for (const auto& [name, value] : bindings) {
    const ParamSpec* p = record.param(name);
    if (!p) throw Error(Errc::unknown_symbol, record.id + " has no parameter '" + name + "'");
    if (p->mode == ParamMode::symbolic)
      throw Error(Errc::constraint_violation, "'" + name + "' must stay symbolic in " + record.id);
    if (std::find(p->excluded.begin(), p->excluded.end(), value) != p->excluded.end())
      throw Error(Errc::constraint_violation, name + " = " + value.to_string() + " is excluded in " + record.id);
    s.bound[name] = value;
  }
  for (const auto& p : record.params)
    if (p.mode == ParamMode::sampled && !s.bound.count(p.name))
      throw Error(Errc::constraint_violation, "'" + p.name + "' must be bound in " + record.id);
  for (const auto& [name, value] : slots) {
    if (std::find(record.slots.begin(), record.slots.end(), name) == record.slots.end())
      throw Error(Errc::unknown_symbol, record.id + " has no integer slot '" + name + "'");
    s.slots[name] = value;
  }
  for (const auto& name : record.slots)
    if (!s.slots.count(name)) throw Error(Errc::constraint_violation, "missing integer slot '" + name + "'");
  if (record.validate) record.validate(s);
  return s;
}

std::vector<Sample> sampling_plan(const IdentityRecord& record, const VerificationConfig& config) {
  config.validate();
  return record.plan ? record.plan(record, config) : catalog_detail::default_plan()(record, config);
}

std::vector<std::string> symbolic_params(const IdentityRecord& record, const Sample& sample) {
  std::vector<std::string> out;
  for (const auto& p : record.free_params())
    if (!sample.bound.count(p)) out.push_back(p);
  return out;
}

namespace {

SideArgs side_args(const IdentityRecord& record, const Sample& sample, int order, int max_degree, int index) {
  Sample checked = make_sample(record, sample.bound, sample.slots);
  ContextPtr ctx = make_context(ParamSet::canonical(symbolic_params(record, checked)), order, max_degree);
  return SideArgs(std::move(ctx), std::move(checked), index);
}

}  // namespace

QSeries evaluate_side(const IdentityRecord& record, std::string_view side, const Sample& sample, int order,
                      int max_degree, int index) {
  const Side& s = record.side(side);
  if (!s.series) throw Error(Errc::invalid_argument, record.id + " is combinatorial; its sides are values per n");
  if (order < 0) throw Error(Errc::invalid_argument, "order must be nonnegative");
  if (record.family && (index < record.family->first || index > record.family->last))
    throw Error(Errc::invalid_argument, record.id + " is a family indexed by " + std::to_string(record.family->first) +
                                            ".." + std::to_string(record.family->last));
  return s.series(side_args(record, sample, order, max_degree, index));
}

std::vector<TruncatedPolynomial> evaluate_values(const IdentityRecord& record, std::string_view side,
                                                 const Sample& sample, IndexRange range, int max_degree) {
  const Side& s = record.side(side);
  if (!s.value) throw Error(Errc::invalid_argument, record.id + " has series sides, not values per n");
  if (range.first < 1 || range.last < range.first) throw Error(Errc::invalid_argument, "bad n range");
  SideArgs base = side_args(record, sample, 0, max_degree, range.first);
  std::vector<TruncatedPolynomial> out;
  for (int n = range.first; n <= range.last; ++n) out.push_back(s.value(SideArgs(base.context(), base.sample(), n)));
  return out;
}

}  // namespace qsv
