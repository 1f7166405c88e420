#pragma once

#include <qsv/partitions.hpp>
#include <qsv/series.hpp>

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsv {

enum class IdentityKind { analytic, combinatorial, mixed };
std::string_view to_string(IdentityKind kind);

enum class ParamMode {
  symbolic,  // always kept as a symbol
  sampled,   // always bound to a rational (the built form needs its inverse)
  either,
};

struct ParamSpec {
  std::string name;
  ParamMode mode = ParamMode::either;
  std::vector<Rational> excluded;  // bindings that hit a pole
  std::vector<Rational> pool;      // replaces the configured pool when nonempty
};

// Rational bindings and integer slots for one evaluation. Free parameters
// that are not bound stay symbolic.
struct Sample {
  Bindings bound;
  std::map<std::string, long> slots;

  friend bool operator==(const Sample&, const Sample&) = default;
};

struct IndexRange {
  int first = 1;
  int last = 1;
};

// What a side builder sees: the truncation, parameter values as series and
// the family index (the partition size n for combinatorial sides).
class SideArgs {
 public:
  SideArgs(ContextPtr ctx, Sample sample, int index);

  const ContextPtr& context() const { return ctx_; }
  int order() const { return ctx_->order(); }
  int max_degree() const { return ctx_->max_degree(); }
  int index() const { return index_; }
  const Sample& sample() const { return sample_; }

  bool is_symbolic(const std::string& name) const;
  // The parameter's value: its symbol, or the bound rational as a constant.
  QSeries x(const std::string& name) const;
  TruncatedPolynomial poly(const std::string& name) const;
  // Bound value; throws constraint-violation when the parameter is symbolic.
  Rational value(const std::string& name) const;
  long slot(const std::string& name) const;

  QSeries one() const { return QSeries::one(ctx_); }
  QSeries q(int k = 1) const { return QSeries::q_power(ctx_, k); }
  QSeries constant(const Rational& r) const { return QSeries::constant(ctx_, r); }
  TruncatedPolynomial scalar(const Rational& r) const { return TruncatedPolynomial::constant(ctx_, r); }

  // Same bindings over another truncation of the same symbols plus `extra`.
  SideArgs rebuilt(int order, int max_degree, const std::vector<std::string>& extra = {}) const;
  // Exchanges the values of two parameters.
  SideArgs swapped(const std::string& x, const std::string& y) const;
  // Binds a parameter, removing it from the symbols.
  SideArgs bound(const std::string& name, const Rational& value) const;

 private:
  std::string resolve(const std::string& name) const;

  ContextPtr ctx_;
  Sample sample_;
  int index_;
  std::map<std::string, std::string> alias_;
};

using SeriesBuilder = std::function<QSeries(const SideArgs&)>;
using ValueBuilder = std::function<TruncatedPolynomial(const SideArgs&)>;

struct Side {
  std::string name;
  SeriesBuilder series;  // analytic and mixed entries
  ValueBuilder value;    // combinatorial entries, one value per n
};

struct Check {
  std::string lhs;
  std::string rhs;
};

struct VerificationConfig;
struct IdentityRecord;

using SamplingPlan = std::function<std::vector<Sample>(const IdentityRecord&, const VerificationConfig&)>;

struct IdentityRecord {
  std::string id;
  IdentityKind kind = IdentityKind::analytic;
  std::string reference;  // the classical name of the identity
  std::string statement;  // the form actually built, in plain text
  std::vector<ParamSpec> params;
  std::vector<std::string> slots;
  std::vector<Side> sides;
  std::vector<Check> checks;         // the first one is lhs = rhs
  std::optional<IndexRange> family;  // analytic families
  IndexRange n_range{1, 30};         // combinatorial entries
  SamplingPlan plan;
  // Optional overrides of the truncation: exact-degree families choose their
  // own q-order, polynomial identities in a parameter their own degree.
  std::function<int(int order, int index)> order_for;
  std::function<int(int max_degree, int n_last)> degree_for;
  // Extra constraints on a sample; throws constraint-violation.
  std::function<void(const Sample&)> validate;

  std::vector<std::string> free_params() const;
  const ParamSpec* param(const std::string& name) const;
  const Side& side(std::string_view name) const;
  bool is_family() const { return family.has_value(); }
};

std::vector<Rational> default_sample_pool();

struct VerificationConfig {
  int order = 30;
  int max_degree = 12;
  int samples = 3;
  unsigned seed = 0;
  std::optional<IndexRange> n_range;    // combinatorial entries
  std::optional<int> family_last;       // caps family indices
  std::vector<Rational> pool = default_sample_pool();
  unsigned jobs = 0;                    // 0: hardware concurrency

  void validate() const;
};

const std::vector<IdentityRecord>& catalog_entries();
const IdentityRecord& lookup(std::string_view id);
const IdentityRecord& lookup(const std::vector<IdentityRecord>& catalog, std::string_view id);

// Checks bindings against the record: known parameters only, modes and
// excluded values respected, sampled-only parameters bound.
Sample make_sample(const IdentityRecord& record, const Bindings& bindings,
                   const std::map<std::string, long>& slots = {});
std::vector<Sample> sampling_plan(const IdentityRecord& record, const VerificationConfig& config);
std::vector<std::string> symbolic_params(const IdentityRecord& record, const Sample& sample);

QSeries evaluate_side(const IdentityRecord& record, std::string_view side, const Sample& sample, int order,
                      int max_degree, int index = 0);
std::vector<TruncatedPolynomial> evaluate_values(const IdentityRecord& record, std::string_view side,
                                                 const Sample& sample, IndexRange range, int max_degree);

enum class VerificationStatus { pass, fail, skipped };
std::string_view to_string(VerificationStatus status);

struct SampleResult {
  Sample sample;
  std::vector<std::string> symbolic;
  std::optional<int> index;  // family index
  bool pass = true;
};

struct Witness {
  std::string check;  // "lhs=rhs"
  std::size_t sample = 0;
  std::optional<int> index;  // family index
  std::optional<int> n;      // combinatorial entries
  std::optional<int> q_exp;  // analytic entries
  std::string monomial;
  Rational lhs;
  Rational rhs;
};

struct VerificationReport {
  std::string id;
  IdentityKind kind = IdentityKind::analytic;
  VerificationStatus status = VerificationStatus::pass;
  int order = 0;       // effective truncation
  int max_degree = 0;
  std::vector<SampleResult> samples;
  std::optional<Witness> witness;
  std::optional<std::string> error;
  long long millis = 0;
};

VerificationReport verify(const IdentityRecord& record, const VerificationConfig& config);
VerificationReport verify(std::string_view id, const VerificationConfig& config);
// Reports in ascending id order, independent of the number of jobs.
std::vector<VerificationReport> verify_all(const std::vector<IdentityRecord>& catalog,
                                           const VerificationConfig& config);
std::vector<VerificationReport> verify_all(const VerificationConfig& config);

// Specializations that link entries: one entry with a parameter fixed equals
// a scalar multiple of another.
struct CoherenceResult {
  std::string name;
  std::string description;
  bool pass = false;
  std::optional<Divergence> witness;
  std::optional<std::string> error;
};
std::vector<CoherenceResult> check_specializations(int order, int max_degree);

}  // namespace qsv
