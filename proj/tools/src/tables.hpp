#pragma once

// Worked tables of the weighted partition identities, computed from the
// enumeration rather than stored.

#include <string>
#include <string_view>
#include <vector>

namespace qsv::cli {

struct Table {
  std::string id;  // "thm-d24-n6"
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<long> weights;  // the last column
  std::string check;          // closing line, e.g. "1-6+7-6 = -4 = d(6) - 4*d_{2,4}(6)"
  bool holds = true;
};

// `which` is <thm-d24|prop-overp|thm-dstar>-n<k>; the documented tables
// are thm-d24-n6, prop-overp-n4, thm-dstar-n9 and thm-dstar-n15.
Table make_table(std::string_view which);
const std::vector<std::string>& documented_tables();
std::string render(const Table& t);

}  // namespace qsv::cli
