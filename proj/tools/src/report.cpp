#include "report.hpp"

#ifndef QSV_VERSION
#define QSV_VERSION "0.0.0"
#endif

namespace qsv::cli {

Json bindings_json(const Sample& s) {
  Json b = Json::object();
  for (const auto& [name, value] : s.bound) b[name] = value.to_string();
  for (const auto& [name, value] : s.slots) b[name] = value;
  return b;
}

Json to_json(const Witness& w) {
  Json j;
  j["check"] = w.check;
  j["sample"] = w.sample;
  if (w.index) j["index"] = *w.index;
  if (w.n) j["n"] = *w.n;
  if (w.q_exp) j["q_exp"] = *w.q_exp;
  j["monomial"] = w.monomial;
  j["lhs"] = w.lhs.to_string();
  j["rhs"] = w.rhs.to_string();
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["id"] = r.id;
  j["kind"] = std::string(to_string(r.kind));
  j["status"] = std::string(to_string(r.status));
  j["order"] = r.order;
  j["max_degree"] = r.max_degree;
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json e;
    e["bindings"] = bindings_json(s.sample);
    e["symbolic"] = s.symbolic;
    if (s.index) e["index"] = *s.index;
    e["pass"] = s.pass;
    samples.push_back(std::move(e));
  }
  j["samples"] = std::move(samples);
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (r.error) j["error"] = *r.error;
  j["millis"] = r.millis;
  return j;
}

Json to_json(const CoherenceResult& c) {
  Json j;
  j["name"] = c.name;
  j["description"] = c.description;
  j["pass"] = c.pass;
  if (c.witness) {
    j["witness"] = {{"q_exp", c.witness->q_exp},
                    {"monomial", c.witness->monomial},
                    {"lhs", c.witness->lhs.to_string()},
                    {"rhs", c.witness->rhs.to_string()}};
  }
  if (c.error) j["error"] = *c.error;
  return j;
}

Json run_report(const VerificationConfig& config, const std::vector<VerificationReport>& reports,
                const std::vector<CoherenceResult>& specializations) {
  Json j;
  j["version"] = QSV_VERSION;
  j["config"] = {{"N", config.order}, {"M", config.max_degree}, {"samples", config.samples}, {"seed", config.seed}};
  Json results = Json::array();
  long pass = 0, fail = 0, skipped = 0;
  for (const auto& r : reports) {
    results.push_back(to_json(r));
    (r.status == VerificationStatus::pass ? pass : r.status == VerificationStatus::fail ? fail : skipped)++;
  }
  j["results"] = std::move(results);
  if (!specializations.empty()) {
    Json s = Json::array();
    for (const auto& c : specializations) {
      s.push_back(to_json(c));
    }
    j["specializations"] = std::move(s);
  }
  j["summary"] = {{"pass", pass}, {"fail", fail}, {"skipped", skipped}};
  return j;
}

Json without_timing(Json report) {
  if (report.contains("results"))
    for (auto& r : report["results"]) r.erase("millis");
  return report;
}

}  // namespace qsv::cli
