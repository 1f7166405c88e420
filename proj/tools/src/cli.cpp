#include "cli.hpp"

#include "report.hpp"
#include "tables.hpp"

#include <qsv/catalog.hpp>
#include <qsv/error.hpp>
#include <qsv/oeis.hpp>
#include <qsv/partitions.hpp>
#include <qsv/weights.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#ifndef QSV_DATA_DIR
#define QSV_DATA_DIR "data"
#endif

namespace qsv::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int write_json(const Json& j, const std::string& target, std::ostream& out) {
  if (target == "-") {
    out << j.dump(2) << "\n";
    return exit_pass;
  }
  std::ofstream f(target);
  if (!f) throw UsageError("cannot write " + target);
  f << j.dump(2) << "\n";
  return exit_pass;
}

std::pair<std::string, std::string> split_assignment(const std::string& s) {
  auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == s.size())
    throw UsageError("expected name=value, got '" + s + "'");
  return {s.substr(0, eq), s.substr(eq + 1)};
}

Bindings parse_bindings(const std::vector<std::string>& items) {
  Bindings b;
  for (const auto& item : items) {
    auto [name, value] = split_assignment(item);
    try {
      b[name] = Rational::parse(value);
    } catch (const Error& e) {
      throw UsageError("bad value in --bind " + item + ": " + e.what());
    }
  }
  return b;
}

std::map<std::string, long> parse_slots(const std::vector<std::string>& items) {
  std::map<std::string, long> slots;
  for (const auto& item : items) {
    auto [name, value] = split_assignment(item);
    try {
      std::size_t used = 0;
      slots[name] = std::stol(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw UsageError("bad integer in --slot " + item);
    }
  }
  return slots;
}

std::string status_word(VerificationStatus s) {
  switch (s) {
    case VerificationStatus::pass: return "pass";
    case VerificationStatus::fail: return "FAIL";
    case VerificationStatus::skipped: return "skip";
  }
  return "?";
}

std::string describe(const Sample& s) {
  std::string out;
  for (const auto& [name, value] : s.bound) out += (out.empty() ? "" : ", ") + name + "=" + value.to_string();
  for (const auto& [name, value] : s.slots) out += (out.empty() ? "" : ", ") + name + "=" + std::to_string(value);
  return "{" + out + "}";
}

std::string describe(const VerificationReport& r) {
  std::ostringstream s;
  s << status_word(r.status) << "  " << std::left << std::setw(20) << r.id << std::right << std::setw(4)
    << r.samples.size() << " samples " << std::setw(7) << r.millis << " ms";
  if (r.witness) {
    const Witness& w = *r.witness;
    s << "\n      " << w.check << " differs";
    if (w.q_exp) s << " at q^" << *w.q_exp;
    if (w.n) s << " at n=" << *w.n;
    if (w.index) s << ", index " << *w.index;
    s << ", monomial " << w.monomial << ", sample " << describe(r.samples.at(w.sample).sample) << ": "
      << w.lhs.to_string() << " vs " << w.rhs.to_string();
  }
  if (r.error) s << "\n      " << *r.error;
  return s.str();
}

struct VerifyOptions {
  std::string identity;
  VerificationConfig config;
  std::optional<int> n_last;
  std::optional<int> family_last;
  bool specializations = false;
  std::string perturb;
  std::string json;
};

// Negative control: adds q^k (or 1 at n = k for per-n identities) to a side.
IdentityRecord perturbed(IdentityRecord r, const std::string& spec) {
  auto colon = spec.find(':');
  std::string side = spec.substr(0, colon);
  int k = -1;
  try {
    if (colon != std::string::npos) k = std::stoi(spec.substr(colon + 1));
  } catch (const std::exception&) {
  }
  if (k < 0) throw UsageError("--perturb expects side:k with k >= 0, got '" + spec + "'");
  r.side(side);
  for (auto& s : r.sides) {
    if (s.name != side) continue;
    if (s.series)
      s.series = [f = s.series, k](const SideArgs& a) { return f(a) + a.q(k); };
    else
      s.value = [f = s.value, k](const SideArgs& a) { return a.index() == k ? f(a) + a.scalar(1) : f(a); };
  }
  return r;
}

int cmd_verify(VerifyOptions& o, std::ostream& out) {
  VerificationConfig& c = o.config;
  if (o.n_last) c.n_range = IndexRange{1, *o.n_last};
  c.family_last = o.family_last;
  try {
    c.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  std::vector<IdentityRecord> selected;
  if (o.identity == "all") {
    selected = catalog_entries();
  } else {
    std::stringstream ids(o.identity);
    for (std::string id; std::getline(ids, id, ',');) selected.push_back(lookup(id));
  }
  if (!o.perturb.empty())
    for (auto& r : selected) r = perturbed(std::move(r), o.perturb);
  auto start = std::chrono::steady_clock::now();
  std::vector<VerificationReport> reports = verify_all(selected, c);
  std::vector<CoherenceResult> coherence;
  if (o.specializations) coherence = check_specializations(c.order, c.max_degree);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool ok = true;
  for (const auto& r : reports) ok &= r.status == VerificationStatus::pass;
  for (const auto& r : coherence) ok &= r.pass;
  if (o.json != "-") {
    long pass = 0, fail = 0, skipped = 0;
    for (const auto& r : reports) {
      out << describe(r) << "\n";
      (r.status == VerificationStatus::pass ? pass : r.status == VerificationStatus::fail ? fail : skipped)++;
    }
    for (const auto& r : coherence) {
      out << (r.pass ? "pass" : "FAIL") << "  " << r.name << " (" << r.description << ")\n";
      if (r.witness) out << "      differs at q^" << r.witness->q_exp << ", monomial " << r.witness->monomial << "\n";
      if (r.error) out << "      " << *r.error << "\n";
    }
    out << "summary: " << pass << " pass, " << fail << " fail, " << skipped << " skipped in " << std::fixed
        << std::setprecision(2) << seconds << " s (N=" << c.order << ", M=" << c.max_degree << ")\n";
  }
  if (!o.json.empty()) write_json(run_report(c, reports, coherence), o.json, out);
  return ok ? exit_pass : exit_fail;
}

struct ExpandOptions {
  std::string identity;
  std::string side = "lhs";
  int order = 10;
  int degree = 12;
  std::vector<std::string> binds;
  std::vector<std::string> slots;
  std::optional<int> index;
  bool json = false;
};

int cmd_expand(const ExpandOptions& o, std::ostream& out) {
  const IdentityRecord& r = lookup(o.identity);
  r.side(o.side);
  Sample s;
  try {
    s = make_sample(r, parse_bindings(o.binds), parse_slots(o.slots));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (o.order < (r.kind == IdentityKind::combinatorial ? 1 : 0) || o.degree < 0)
    throw UsageError("--order and --pdeg must be nonnegative (and --order >= 1 for per-n values)");
  Json j;
  j["id"] = r.id;
  j["side"] = o.side;
  j["bindings"] = bindings_json(s);
  if (r.kind == IdentityKind::combinatorial) {
    auto values = evaluate_values(r, o.side, s, {1, o.order}, o.degree);
    Json list = Json::array();
    for (std::size_t k = 0; k < values.size(); ++k) {
      list.push_back(values[k].to_string());
      if (!o.json) out << "n=" << k + 1 << ": " << values[k].to_string() << "\n";
    }
    j["values"] = std::move(list);
  } else {
    int index = o.index.value_or(r.family ? r.family->first : 0);
    if (r.family && (index < r.family->first || index > r.family->last))
      throw UsageError("--index must lie in " + std::to_string(r.family->first) + ".." +
                       std::to_string(r.family->last));
    QSeries f = evaluate_side(r, o.side, s, o.order, o.degree, index);
    Json coefficients = Json::array();
    for (int k = 0; k <= f.order(); ++k) coefficients.push_back(f.coefficient(k).to_string());
    j["order"] = o.order;
    j["max_degree"] = o.degree;
    if (r.family) j["index"] = index;
    j["coefficients"] = std::move(coefficients);
    if (!o.json) out << f.to_string() << "\n";
  }
  if (o.json) out << j.dump(2) << "\n";
  return exit_pass;
}

struct PartitionOptions {
  int n = 0;
  std::string cls = "all";
  bool stats = false;
  bool json = false;
};

int cmd_partitions(const PartitionOptions& o, std::ostream& out) {
  auto cls = parse_partition_class(o.cls);
  if (!cls) throw UsageError("unknown partition class '" + o.cls + "'");
  if (o.n < 0) throw UsageError("--n must be nonnegative");
  const bool omega = *cls == PartitionClass::pstar;
  std::vector<std::string> header{"partition", "s", "l", "#", "rank", "nu_d"};
  if (omega) {
    header.push_back("omega");
    header.push_back("2*omega");
  }
  std::vector<std::vector<std::string>> rows;
  Json list = Json::array();
  for_each_partition(o.n, *cls, [&](const Partition& p) {
    PartitionStats st = stats(p);
    std::vector<std::string> row{p.to_string(),        std::to_string(st.smallest), std::to_string(st.largest),
                                 std::to_string(st.count), std::to_string(st.rank),
                                 std::to_string(st.distinct_count)};
    Json e{{"partition", p.to_string()}};
    if (o.stats) {
      e.update({{"s", st.smallest}, {"l", st.largest}, {"count", st.count}, {"rank", st.rank},
                {"nu_d", st.distinct_count}});
      if (omega) {
        long w = omega_weight(p);
        row.push_back(std::to_string(w));
        row.push_back(std::to_string(2 * w));
        e["omega"] = w;
      }
    }
    rows.push_back(std::move(row));
    list.push_back(std::move(e));
  });
  if (o.json) {
    out << Json{{"n", o.n}, {"class", std::string(to_string(*cls))}, {"count", rows.size()}, {"partitions", list}}
               .dump(2)
        << "\n";
    return exit_pass;
  }
  if (!o.stats) {
    for (const auto& r : rows) out << r[0] << "\n";
    return exit_pass;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s += cells[c];
      if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << s << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return exit_pass;
}

int cmd_tables(const std::string& which, bool json, std::ostream& out) {
  std::vector<std::string> ids = which == "all" ? documented_tables() : std::vector<std::string>{which};
  bool holds = true;
  Json list = Json::array();
  for (const auto& id : ids) {
    Table t;
    try {
      t = make_table(id);
    } catch (const Error& e) {
      if (e.code() == Errc::invalid_argument) throw UsageError(e.what());
      throw;
    }
    holds &= t.holds;
    if (json)
      list.push_back({{"id", t.id}, {"header", t.header}, {"rows", t.rows}, {"weights", t.weights},
                      {"check", t.check}, {"holds", t.holds}});
    else
      out << render(t) << (ids.size() > 1 ? "\n" : "");
  }
  if (json) out << list.dump(2) << "\n";
  return holds ? exit_pass : exit_fail;
}

struct OeisOptions {
  std::string id;
  long upto = 200;
  std::string bfile;
  bool fetch = false;
  std::string save;
  bool json = false;
};

int cmd_oeis(const OeisOptions& o, std::ostream& out) {
  const oeis::KnownSequence& seq = oeis::known_sequence(o.id);
  std::string text, source;
  if (o.fetch) {
    text = oeis::fetch_bfile(seq.id);
    source = "https://oeis.org/" + seq.id + "/" + oeis::bfile_name(seq.id);
    if (!o.save.empty()) {
      std::ofstream f(o.save);
      if (!f) throw UsageError("cannot write " + o.save);
      f << text;
    }
  }
  oeis::BFile b;
  if (o.fetch) {
    b = oeis::parse_bfile(text, seq.id);
  } else {
    source = o.bfile.empty() ? std::string(QSV_DATA_DIR) + "/oeis/" + oeis::bfile_name(seq.id) : o.bfile;
    b = oeis::load_bfile(source, seq.id);
  }
  oeis::Comparison c = oeis::check(seq, b, o.upto);
  if (o.json) {
    Json j{{"id", seq.id}, {"description", seq.description}, {"source", source}, {"first", c.first},
           {"upto", c.upto}, {"agree", c.agree()}};
    if (c.mismatch)
      j["mismatch"] = {{"n", c.mismatch->index}, {"local", c.mismatch->local.get_str()},
                       {"bfile", c.mismatch->remote.get_str()}};
    out << j.dump(2) << "\n";
  } else if (c.agree()) {
    out << seq.id << " (" << seq.description << "): agrees with " << source << " for n = " << c.first << ".."
        << c.upto << "\n";
  } else {
    out << seq.id << " (" << seq.description << "): first mismatch at n = " << c.mismatch->index << ": local "
        << c.mismatch->local.get_str() << ", b-file " << c.mismatch->remote.get_str() << "\n";
  }
  return c.agree() ? exit_pass : exit_fail;
}

int cmd_list(bool json, std::ostream& out) {
  Json list = Json::array();
  for (const auto& r : catalog_entries()) {
    if (json) {
      list.push_back({{"id", r.id}, {"kind", std::string(to_string(r.kind))}, {"reference", r.reference},
                      {"statement", r.statement}, {"params", r.free_params()}});
      continue;
    }
    std::string params;
    for (const auto& p : r.free_params()) params += (params.empty() ? "" : ",") + p;
    out << std::left << std::setw(20) << r.id << std::setw(14) << to_string(r.kind) << std::setw(10)
        << (params.empty() ? "-" : params) << r.reference << "\n";
  }
  if (json) out << list.dump(2) << "\n";
  return exit_pass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of q-series and weighted partition identities", "qsv"};
  app.require_subcommand(1);
  app.set_version_flag("--version", QSV_VERSION);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Verify catalog identities coefficient by coefficient");
  verify->add_option("--identity", vo.identity, "Identity id, comma-separated ids, or 'all'")->required();
  verify->add_option("--order", vo.config.order, "q-order N")->capture_default_str();
  verify->add_option("--pdeg", vo.config.max_degree, "Parameter degree M")->capture_default_str();
  verify->add_option("--samples", vo.config.samples, "Rational samples per plan (at least 3)")->capture_default_str();
  verify->add_option("--seed", vo.config.seed, "Rotation of the sample pool")->capture_default_str();
  verify->add_option("--jobs", vo.config.jobs, "Worker threads (0: available parallelism)")->capture_default_str();
  verify->add_option("--n-last", vo.n_last, "Upper end of the n range for per-n identities");
  verify->add_option("--family-last", vo.family_last, "Cap on the index of identity families");
  verify->add_flag("--specializations", vo.specializations, "Also run the specialization coherence checks");
  verify->add_option("--perturb", vo.perturb, "Negative control: add q^k to a side, as side:k");
  verify->add_option("--json", vo.json, "Write the JSON report to a path, or '-' for standard output");

  ExpandOptions eo;
  auto* expand = app.add_subcommand("expand", "Expand one side of an identity");
  expand->add_option("--identity", eo.identity, "Identity id")->required();
  expand->add_option("--side", eo.side, "Side name (lhs, rhs, or an auxiliary side)")->capture_default_str();
  expand->add_option("--order", eo.order, "q-order N, or the last n for per-n identities")->capture_default_str();
  expand->add_option("--pdeg", eo.degree, "Parameter degree M")->capture_default_str();
  expand->add_option("--bind", eo.binds, "Bind a parameter: sym=rational (repeatable)");
  expand->add_option("--slot", eo.slots, "Set an integer slot: name=int (repeatable)");
  expand->add_option("--index", eo.index, "Family index");
  expand->add_flag("--json", eo.json, "JSON output");

  PartitionOptions po;
  auto* partitions = app.add_subcommand("partitions", "List partitions of n in a class");
  partitions->add_option("--n", po.n, "The integer being partitioned")->required();
  partitions->add_option("--class", po.cls, "all, distinct, overp, pstar, p1star, d1 or dstar")->capture_default_str();
  partitions->add_flag("--stats", po.stats, "One row per partition with its statistics");
  partitions->add_flag("--json", po.json, "JSON output");

  std::string which;
  bool tables_json = false;
  auto* tables = app.add_subcommand("tables", "Reproduce the worked example tables");
  tables->add_option("--which", which, "thm-d24-n6, prop-overp-n4, thm-dstar-n9, thm-dstar-n15 or all")->required();
  tables->add_flag("--json", tables_json, "JSON output");

  OeisOptions oo;
  auto* oeis_cmd = app.add_subcommand("oeis", "Compare a local sequence with an OEIS b-file");
  oeis_cmd->add_option("--check", oo.id, "Sequence id: A228441, A000005 or A015128")->required();
  oeis_cmd->add_option("--upto", oo.upto, "Last index compared")->capture_default_str();
  oeis_cmd->add_option("--bfile", oo.bfile, "b-file path (default: the bundled fixture)");
  oeis_cmd->add_flag("--fetch", oo.fetch, "Download the b-file from oeis.org instead");
  oeis_cmd->add_option("--save", oo.save, "With --fetch, also write the download here");
  oeis_cmd->add_flag("--json", oo.json, "JSON output");

  bool list_json = false;
  auto* list = app.add_subcommand("list", "List catalog identities");
  list->add_flag("--json", list_json, "JSON output");

  std::vector<std::string> argv_store{"qsv"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_pass : exit_usage;
  }

  try {
    if (verify->parsed()) return cmd_verify(vo, out);
    if (expand->parsed()) return cmd_expand(eo, out);
    if (partitions->parsed()) return cmd_partitions(po, out);
    if (tables->parsed()) return cmd_tables(which, tables_json, out);
    if (oeis_cmd->parsed()) return cmd_oeis(oo, out);
    if (list->parsed()) return cmd_list(list_json, out);
  } catch (const UsageError& e) {
    err << "qsv: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "qsv: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::nontermination:
      case Errc::not_a_unit:
        return exit_fail;
      default:
        return exit_usage;
    }
  } catch (const std::exception& e) {
    err << "qsv: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace qsv::cli
