#include "tables.hpp"

#include <qsv/arithmetic.hpp>
#include <qsv/error.hpp>
#include <qsv/partitions.hpp>
#include <qsv/weights.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace qsv::cli {

namespace {

int sign(int e) { return e % 2 == 0 ? 1 : -1; }

// "1-6+7-6"; terms after the first carry their sign.
std::string signed_terms(const std::vector<long>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && w[i] >= 0) out += "+";
    out += std::to_string(w[i]);
  }
  return out.empty() ? "0" : out;
}

long total(const std::vector<long>& w) {
  long s = 0;
  for (long x : w) s += x;
  return s;
}

const char* relation(bool holds) { return holds ? " = " : " != "; }

Table thm_d24(int n) {
  Table t{"thm-d24-n" + std::to_string(n), "signed omega weights over P*(" + std::to_string(n) + ")",
          {"partition", "#", "nu(l)", "omega", "(-1)^(#-1)*omega"}, {}, {}, {}, true};
  for_each_partition(n, PartitionClass::pstar, [&](const Partition& p) {
    PartitionStats st = stats(p);
    long w = omega_weight(p);
    long signed_w = sign(st.count - 1) * w;
    t.rows.push_back({p.to_string(), std::to_string(st.count), std::to_string(st.nu(st.largest)), std::to_string(w),
                      std::to_string(signed_w)});
    t.weights.push_back(signed_w);
  });
  long s = total(t.weights);
  long expect = divisor_count(n) - 4 * divisor_count_2mod4(n);
  t.holds = s == expect;
  t.check = signed_terms(t.weights) + " = " + std::to_string(s) + relation(t.holds) + "d(" + std::to_string(n) +
            ") - 4*d_{2,4}(" + std::to_string(n) + ")";
  return t;
}

Table prop_overp(int n) {
  Table t{"prop-overp-n" + std::to_string(n), "twice the omega weights over P*(" + std::to_string(n) + ")",
          {"partition", "l", "nu(l)", "prod (2nu(i)-1)", "2*omega"}, {}, {}, {}, true};
  for_each_partition(n, PartitionClass::pstar, [&](const Partition& p) {
    PartitionStats st = stats(p);
    long prod = 1;
    for (int i = 1; i < st.largest; ++i) prod *= 2 * st.nu(i) - 1;
    long w = 2 * omega_weight(p);
    t.rows.push_back({p.to_string(), std::to_string(st.largest), std::to_string(st.nu(st.largest)),
                      std::to_string(prod), std::to_string(w)});
    t.weights.push_back(w);
  });
  long s = total(t.weights);
  t.holds = s == overpartition_count(n);
  t.check = signed_terms(t.weights) + " = " + std::to_string(s) + relation(t.holds) + "pbar(" + std::to_string(n) + ")";
  return t;
}

Table thm_dstar(int n) {
  Table t{"thm-dstar-n" + std::to_string(n), "second-smallest gaps over D*(" + std::to_string(n) + ")",
          {"partition", "#", "s2-s", "(-1)^(#-1)*(s2-s)"}, {}, {}, {}, true};
  for_each_partition(n, PartitionClass::dstar, [&](const Partition& p) {
    PartitionStats st = stats(p);
    long gap = st.second_smallest.value() - st.smallest;
    long w = sign(st.count - 1) * gap;
    t.rows.push_back({p.to_string(), std::to_string(st.count), std::to_string(gap), std::to_string(w)});
    t.weights.push_back(w);
  });
  long s = total(t.weights);
  long rhs = 1 + n / 2 - s;
  t.holds = rhs == divisor_count(n);
  std::string sub = s < 0 ? "(" + std::to_string(s) + ")" : std::to_string(s);
  t.check = "1+" + std::to_string(n / 2) + "-" + sub + " = " + std::to_string(rhs) + relation(t.holds) + "d(" +
            std::to_string(n) + ")";
  return t;
}

}  // namespace

const std::vector<std::string>& documented_tables() {
  static const std::vector<std::string> ids{"thm-d24-n6", "prop-overp-n4", "thm-dstar-n9", "thm-dstar-n15"};
  return ids;
}

Table make_table(std::string_view which) {
  auto cut = which.rfind("-n");
  int n = 0;
  if (cut != std::string_view::npos) {
    auto digits = which.substr(cut + 2);
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || end != digits.data() + digits.size() || n < 1) cut = std::string_view::npos;
  }
  std::string family(cut == std::string_view::npos ? which : which.substr(0, cut));
  if (cut != std::string_view::npos) {
    if (family == "thm-d24") return thm_d24(n);
    if (family == "prop-overp") return prop_overp(n);
    if (family == "thm-dstar") return thm_dstar(n);
  }
  std::string known;
  for (const auto& id : documented_tables()) known += " " + id;
  throw Error(Errc::invalid_argument, "unknown table '" + std::string(which) + "'; known:" + known);
}

std::string render(const Table& t) {
  std::vector<std::size_t> width(t.header.size());
  for (std::size_t c = 0; c < t.header.size(); ++c) {
    width[c] = t.header[c].size();
    for (const auto& r : t.rows) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s += cells[c];
      if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << s << "\n";
  };
  out << t.id << ": " << t.title << "\n";
  line(t.header);
  for (const auto& r : t.rows) line(r);
  out << t.check << "\n";
  return out.str();
}

}  // namespace qsv::cli
