#include "support.hpp"

#include <qsv/error.hpp>

#include <algorithm>
#include <set>

namespace qsv {

SideArgs::SideArgs(ContextPtr ctx, Sample sample, int index)
    : ctx_(std::move(ctx)), sample_(std::move(sample)), index_(index) {}

std::string SideArgs::resolve(const std::string& name) const {
  auto it = alias_.find(name);
  return it == alias_.end() ? name : it->second;
}

bool SideArgs::is_symbolic(const std::string& name) const {
  std::string r = resolve(name);
  return !sample_.bound.count(r) && ctx_->params().contains(r);
}

QSeries SideArgs::x(const std::string& name) const {
  std::string r = resolve(name);
  if (auto it = sample_.bound.find(r); it != sample_.bound.end()) return QSeries::constant(ctx_, it->second);
  return QSeries::symbol(ctx_, r);
}

TruncatedPolynomial SideArgs::poly(const std::string& name) const {
  std::string r = resolve(name);
  if (auto it = sample_.bound.find(r); it != sample_.bound.end())
    return TruncatedPolynomial::constant(ctx_, it->second);
  return TruncatedPolynomial::symbol(ctx_, r);
}

Rational SideArgs::value(const std::string& name) const {
  std::string r = resolve(name);
  auto it = sample_.bound.find(r);
  if (it == sample_.bound.end())
    throw Error(Errc::constraint_violation, "'" + name + "' must be bound to a rational");
  return it->second;
}

long SideArgs::slot(const std::string& name) const {
  auto it = sample_.slots.find(name);
  if (it == sample_.slots.end()) throw Error(Errc::constraint_violation, "missing integer slot '" + name + "'");
  return it->second;
}

SideArgs SideArgs::rebuilt(int order, int max_degree, const std::vector<std::string>& extra) const {
  std::vector<std::string> symbols = ctx_->params().symbols();
  Sample s = sample_;
  for (const auto& e : extra) {
    std::string r = resolve(e);
    s.bound.erase(r);
    if (std::find(symbols.begin(), symbols.end(), r) == symbols.end()) symbols.push_back(r);
  }
  SideArgs out(make_context(ParamSet::canonical(symbols), order, max_degree), std::move(s), index_);
  out.alias_ = alias_;
  return out;
}

SideArgs SideArgs::swapped(const std::string& x, const std::string& y) const {
  SideArgs out = *this;
  out.alias_[x] = resolve(y);
  out.alias_[y] = resolve(x);
  return out;
}

SideArgs SideArgs::bound(const std::string& name, const Rational& value) const {
  std::string r = resolve(name);
  Sample s = sample_;
  s.bound[r] = value;
  SideArgs out(make_context(ctx_->params().without({r}), order(), max_degree()), std::move(s), index_);
  out.alias_ = alias_;
  return out;
}

}  // namespace qsv

namespace qsv::catalog_detail {

QSeries over_poch(QSeries f, const QSeries& x, int shift, int n) {
  int last = n < 0 ? f.order() : std::min(shift + n - 1, f.order());
  for (int k = shift; k <= last; ++k) f = divide_one_minus(f, x, k);
  return f;
}

QSeries times_poch(QSeries f, const QSeries& x, int shift, int n) {
  int last = n < 0 ? f.order() : std::min(shift + n - 1, f.order());
  for (int k = shift; k <= last; ++k) f = times_one_minus(f, x, k);
  return f;
}

QSeries enumerated(const SideArgs& a, PartitionClass c, const SeriesWeight& w, int first) {
  QSeries s(a.context());
  for (int n = std::max(first, 0); n <= a.order(); ++n) {
    SideArgs an(a.context(), a.sample(), n);
    s += QSeries::from_polynomial(class_sum(an, c, w), n);
  }
  return s;
}

TruncatedPolynomial class_sum(const SideArgs& a, PartitionClass c, const SeriesWeight& w) {
  TruncatedPolynomial s(a.context());
  for_each_partition(a.index(), c, [&](const Partition& p) { s += w(p, stats(p)); });
  return s;
}

QSeries coefficient_series(const SideArgs& a, const std::function<Rational(int)>& f) {
  QSeries s(a.context());
  for (int n = 1; n <= a.order(); ++n) s += QSeries::monomial(a.context(), f(n), n);
  return s;
}

std::vector<Rational> pool_for(const ParamSpec& p, const VerificationConfig& config) {
  std::vector<Rational> out;
  for (const auto& v : p.pool.empty() ? config.pool : p.pool)
    if (std::find(p.excluded.begin(), p.excluded.end(), v) == p.excluded.end()) out.push_back(v);
  if (out.empty()) throw Error(Errc::constraint_violation, "no admissible sample values for '" + p.name + "'");
  return out;
}

Rational rotated(const std::vector<Rational>& pool, unsigned seed, std::size_t i, std::size_t j) {
  return pool[(seed + i + j) % pool.size()];
}

namespace {

// Binds every bindable parameter not in `keep`, rotating through the pools.
Sample bind_all_but(const IdentityRecord& r, const VerificationConfig& config, const std::set<std::string>& keep,
                    std::size_t i) {
  Sample s;
  for (std::size_t j = 0; j < r.params.size(); ++j) {
    const ParamSpec& p = r.params[j];
    if (p.mode == ParamMode::symbolic) continue;
    if (keep.count(p.name) && p.mode == ParamMode::either) continue;
    s.bound[p.name] = rotated(pool_for(p, config), config.seed, i, j);
  }
  return s;
}

void push_unique(std::vector<Sample>& out, Sample s) {
  if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
}

}  // namespace

SamplingPlan default_plan(std::size_t symbolic_limit) {
  return [symbolic_limit](const IdentityRecord& r, const VerificationConfig& config) {
    std::vector<Sample> out;
    std::size_t forced = 0, eithers = 0, sampled = 0;
    for (const auto& p : r.params) {
      if (p.mode == ParamMode::symbolic) ++forced;
      if (p.mode == ParamMode::either) ++eithers;
      if (p.mode == ParamMode::sampled) ++sampled;
    }
    if (eithers + sampled == 0) return std::vector<Sample>{Sample{}};
    std::set<std::string> all;
    for (const auto& p : r.params) all.insert(p.name);
    if (forced + eithers <= symbolic_limit) push_unique(out, bind_all_but(r, config, all, 0));
    for (int i = 0; i < config.samples; ++i) push_unique(out, bind_all_but(r, config, {}, i));
    if (forced == 0 && eithers > 1) {
      std::size_t t = 0;
      for (const auto& p : r.params)
        if (p.mode == ParamMode::either) push_unique(out, bind_all_but(r, config, {p.name}, config.samples + t++));
    }
    return out;
  };
}

SamplingPlan bound_plan() {
  return [](const IdentityRecord& r, const VerificationConfig& config) {
    std::vector<Sample> out;
    for (int i = 0; i < config.samples; ++i) push_unique(out, bind_all_but(r, config, {}, i));
    return out;
  };
}

SamplingPlan group_plan(std::vector<std::vector<std::string>> groups) {
  return [groups](const IdentityRecord& r, const VerificationConfig& config) {
    std::vector<Sample> out;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      std::set<std::string> keep(groups[g].begin(), groups[g].end());
      for (int i = 0; i < config.samples; ++i)
        push_unique(out, bind_all_but(r, config, keep, g * config.samples + i));
    }
    return out;
  };
}

SamplingPlan slot_plan(std::string slot, std::vector<long> values, SamplingPlan inner) {
  return [slot, values, inner](const IdentityRecord& r, const VerificationConfig& config) {
    std::vector<Sample> out;
    for (long v : values)
      for (Sample s : inner(r, config)) {
        s.slots[slot] = v;
        out.push_back(std::move(s));
      }
    return out;
  };
}

ParamSpec either(std::string name, std::vector<Rational> excluded) {
  return ParamSpec{std::move(name), ParamMode::either, std::move(excluded), {}};
}
ParamSpec symbolic(std::string name) { return ParamSpec{std::move(name), ParamMode::symbolic, {}, {}}; }
ParamSpec sampled(std::string name, std::vector<Rational> excluded) {
  return ParamSpec{std::move(name), ParamMode::sampled, std::move(excluded), {}};
}

IdentityRecord analytic(std::string id, std::string reference, std::string statement, std::vector<ParamSpec> params,
                        SeriesBuilder lhs, SeriesBuilder rhs) {
  IdentityRecord r;
  r.id = std::move(id);
  r.kind = IdentityKind::analytic;
  r.reference = std::move(reference);
  r.statement = std::move(statement);
  r.params = std::move(params);
  r.sides = {Side{"lhs", std::move(lhs), {}}, Side{"rhs", std::move(rhs), {}}};
  r.checks = {Check{"lhs", "rhs"}};
  r.plan = default_plan();
  return r;
}

IdentityRecord combinatorial(std::string id, std::string reference, std::string statement,
                             std::vector<ParamSpec> params, ValueBuilder lhs, ValueBuilder rhs) {
  IdentityRecord r;
  r.id = std::move(id);
  r.kind = IdentityKind::combinatorial;
  r.reference = std::move(reference);
  r.statement = std::move(statement);
  r.params = std::move(params);
  r.sides = {Side{"lhs", {}, std::move(lhs)}, Side{"rhs", {}, std::move(rhs)}};
  r.checks = {Check{"lhs", "rhs"}};
  r.plan = default_plan();
  return r;
}

void add_side(IdentityRecord& r, std::string name, SeriesBuilder b, std::string against) {
  r.checks.push_back(Check{against, name});
  r.sides.push_back(Side{std::move(name), std::move(b), {}});
}

void add_value_side(IdentityRecord& r, std::string name, ValueBuilder b, std::string against) {
  r.checks.push_back(Check{against, name});
  r.sides.push_back(Side{std::move(name), {}, std::move(b)});
}

}  // namespace qsv::catalog_detail
