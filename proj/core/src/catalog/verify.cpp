#include "support.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <thread>

namespace qsv {

namespace {

Witness make_witness(const Check& check, std::size_t sample, const Divergence& d) {
  Witness w;
  w.check = check.lhs + "=" + check.rhs;
  w.sample = sample;
  w.q_exp = d.q_exp;
  w.monomial = d.monomial;
  w.lhs = d.lhs;
  w.rhs = d.rhs;
  return w;
}

void verify_series(const IdentityRecord& record, const VerificationConfig& config, VerificationReport& report) {
  std::vector<Sample> samples = sampling_plan(record, config);
  std::vector<int> indices{0};
  if (record.family) {
    indices.clear();
    int last = std::min(record.family->last, config.family_last.value_or(record.family->last));
    for (int i = record.family->first; i <= last; ++i) indices.push_back(i);
  }
  report.order = config.order;
  report.max_degree = config.max_degree;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (int index : indices) {
      int order = record.order_for ? record.order_for(config.order, index) : config.order;
      int degree = record.degree_for ? record.degree_for(config.max_degree, index) : config.max_degree;
      std::map<std::string, QSeries> cache;
      auto side = [&](const std::string& name) -> const QSeries& {
        auto it = cache.find(name);
        if (it == cache.end())
          it = cache.emplace(name, evaluate_side(record, name, samples[i], order, degree, index)).first;
        return it->second;
      };
      SampleResult result{samples[i], symbolic_params(record, samples[i]), {}, true};
      if (record.family) result.index = index;
      for (const auto& check : record.checks) {
        SeriesComparison cmp = compare(side(check.lhs), side(check.rhs));
        if (cmp.equal) continue;
        result.pass = false;
        if (!report.witness) {
          report.witness = make_witness(check, i, *cmp.witness);
          if (record.family) report.witness->index = index;
        }
      }
      if (!result.pass) report.status = VerificationStatus::fail;
      report.samples.push_back(std::move(result));
    }
  }
}

void verify_values(const IdentityRecord& record, const VerificationConfig& config, VerificationReport& report) {
  std::vector<Sample> samples = sampling_plan(record, config);
  IndexRange range = config.n_range.value_or(record.n_range);
  int degree = record.degree_for ? record.degree_for(config.max_degree, range.last) : config.max_degree;
  report.order = range.last;
  report.max_degree = degree;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    std::map<std::string, std::vector<TruncatedPolynomial>> cache;
    auto side = [&](const std::string& name) -> const std::vector<TruncatedPolynomial>& {
      auto it = cache.find(name);
      if (it == cache.end()) it = cache.emplace(name, evaluate_values(record, name, samples[i], range, degree)).first;
      return it->second;
    };
    SampleResult result{samples[i], symbolic_params(record, samples[i]), {}, true};
    for (const auto& check : record.checks) {
      const auto& l = side(check.lhs);
      const auto& r = side(check.rhs);
      for (std::size_t k = 0; k < l.size(); ++k) {
        SeriesComparison cmp = compare(QSeries::from_polynomial(l[k]), QSeries::from_polynomial(r[k]));
        if (cmp.equal) continue;
        result.pass = false;
        if (!report.witness) {
          report.witness = make_witness(check, i, *cmp.witness);
          report.witness->q_exp.reset();
          report.witness->n = range.first + static_cast<int>(k);
        }
        break;
      }
    }
    if (!result.pass) report.status = VerificationStatus::fail;
    report.samples.push_back(std::move(result));
  }
}

}  // namespace

VerificationReport verify(const IdentityRecord& record, const VerificationConfig& config) {
  VerificationReport report;
  report.id = record.id;
  report.kind = record.kind;
  auto start = std::chrono::steady_clock::now();
  try {
    config.validate();
    if (record.kind == IdentityKind::combinatorial)
      verify_values(record, config, report);
    else
      verify_series(record, config, report);
  } catch (const Error& e) {
    // Enumeration caps bound the window an entry can be checked in; past
    // them the entry is skipped rather than failed.
    report.status = e.code() == Errc::cap_exceeded ? VerificationStatus::skipped : VerificationStatus::fail;
    report.error = e.what();
    report.witness.reset();
  } catch (const std::exception& e) {
    report.status = VerificationStatus::fail;
    report.error = e.what();
    report.witness.reset();
  }
  report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify(std::string_view id, const VerificationConfig& config) { return verify(lookup(id), config); }

std::vector<VerificationReport> verify_all(const std::vector<IdentityRecord>& catalog,
                                           const VerificationConfig& config) {
  std::vector<const IdentityRecord*> order;
  for (const auto& r : catalog) order.push_back(&r);
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return x->id < y->id; });
  std::vector<VerificationReport> reports(order.size());
  unsigned jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(order.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < order.size();) reports[i] = verify(*order[i], config);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return reports;
}

std::vector<VerificationReport> verify_all(const VerificationConfig& config) {
  return verify_all(catalog_entries(), config);
}

namespace {

struct Pair {
  QSeries got;
  QSeries expected;
};

CoherenceResult coherence(std::string name, std::string description, const std::function<std::vector<Pair>()>& build) {
  CoherenceResult r{std::move(name), std::move(description), true, {}, {}};
  try {
    for (const auto& p : build()) {
      SeriesComparison cmp = compare(p.got, p.expected);
      if (!cmp.equal) {
        r.pass = false;
        r.witness = cmp.witness;
        break;
      }
    }
  } catch (const std::exception& e) {
    r.pass = false;
    r.error = e.what();
  }
  return r;
}

QSeries side(const char* id, const char* s, const Bindings& b, int order, int degree) {
  const IdentityRecord& r = lookup(id);
  return evaluate_side(r, s, make_sample(r, b), order, degree);
}

}  // namespace

std::vector<CoherenceResult> check_specializations(int order, int degree) {
  std::vector<CoherenceResult> out;
  const Rational one(1);
  for (Rational c : {Rational(2), Rational(3, 5)}) {
    out.push_back(coherence(
        "main-theorem(d=1) = (1-c) dixit-maji-1", "at c = " + c.to_string() + ", a and b symbolic", [&] {
          std::vector<Pair> v;
          for (const char* s : {"lhs", "rhs"})
            v.push_back({side("main-theorem", s, {{"c", c}, {"d", one}}, order, degree),
                         side("dixit-maji-1", s, {{"c", c}}, order, degree) * (one - c)});
          return v;
        }));
  }
  out.push_back(coherence("two-var-agl(z=d=1) = -(1-c) ffw-gf", "c symbolic", [&] {
    std::vector<Pair> v;
    for (const char* s : {"lhs", "rhs"}) {
      QSeries f = side("ffw-gf", s, {}, order, degree);
      QSeries c = QSeries::symbol(f.context(), "c");
      v.push_back({side("two-var-agl", s, {{"z", one}, {"d", one}}, order, degree), (c - QSeries::one(f.context())) * f});
    }
    return v;
  }));
  out.push_back(coherence("two-var-agl(d=0) = andrews-symmetric", "z and c symbolic", [&] {
    std::vector<Pair> v;
    for (const char* s : {"lhs", "rhs"})
      v.push_back({side("two-var-agl", s, {{"d", Rational(0)}}, order, degree),
                   side("andrews-symmetric", s, {}, order, degree)});
    return v;
  }));
  out.push_back(coherence("entry4(a=1) = kluyver", "no symbols", [&] {
    std::vector<Pair> v;
    for (const char* s : {"lhs", "rhs"})
      v.push_back({side("entry4", s, {{"a", one}}, order, degree), side("kluyver", s, {}, order, degree)});
    return v;
  }));
  out.push_back(coherence("two-var-agl(d=-1) = z(1+c) wpi-d-neg1", "z and c symbolic", [&] {
    std::vector<Pair> v;
    for (const char* s : {"lhs", "rhs"}) {
      QSeries w = side("wpi-d-neg1", s, {}, order, degree);
      auto ctx = w.context();
      QSeries factor = QSeries::symbol(ctx, "z") * (QSeries::one(ctx) + QSeries::symbol(ctx, "c"));
      v.push_back({side("two-var-agl", s, {{"d", Rational(-1)}}, order, degree), factor * w});
    }
    return v;
  }));
  out.push_back(coherence("dixit-maji-2(c=1) = entry3", "a and b symbolic", [&] {
    std::vector<Pair> v;
    for (const char* s : {"lhs", "rhs"})
      v.push_back({side("dixit-maji-2", s, {{"c", one}}, order, degree), side("entry3", s, {}, order, degree)});
    return v;
  }));
  out.push_back(coherence("dixit-maji-1(c=0) = c0-dm", "a and b symbolic", [&] {
    std::vector<Pair> v;
    for (const char* s : {"lhs", "rhs"})
      v.push_back({side("dixit-maji-1", s, {{"c", Rational(0)}}, order, degree), side("c0-dm", s, {}, order, degree)});
    return v;
  }));
  return out;
}

}  // namespace qsv
