#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsv {

enum class PartitionClass {
  all,             // P(n)
  distinct,        // D(n)
  overpartitions,  // first occurrence of each part size may be overlined
  pstar,           // every integer 1..largest occurs
  p1star,          // consecutive distinct parts, smallest part arbitrary
  d1,              // only the largest part may repeat
  dstar,           // d1 with the largest part exactly twice and at least 3 parts
};

std::string_view to_string(PartitionClass c);
std::optional<PartitionClass> parse_partition_class(std::string_view name);
const std::vector<PartitionClass>& all_partition_classes();

// Weakly decreasing parts; overlined part sizes are kept separately, since an
// overpartition marks at most the first occurrence of each size.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts, std::vector<int> overlined = {});

  const std::vector<int>& parts() const { return parts_; }
  const std::vector<int>& overlined() const { return overlined_; }
  bool is_overpartition() const { return !overlined_.empty(); }
  bool is_overlined(int part) const;
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }

  // "4+4+1"; an overlined part is written with a trailing apostrophe, "3'+1".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  friend class PartitionWalker;
  std::vector<int> parts_;
  std::vector<int> overlined_;  // descending
};

struct PartitionStats {
  int total = 0;
  int smallest = 0;   // s
  int largest = 0;    // l
  int count = 0;      // #
  int rank = 0;       // l - #
  int distinct_count = 0;
  std::optional<int> second_smallest;  // second smallest distinct part size
  std::vector<int> multiplicity;       // multiplicity[j] = nu(j), j <= l

  int nu(int j) const { return j >= 0 && j < static_cast<int>(multiplicity.size()) ? multiplicity[j] : 0; }
};

PartitionStats stats(const Partition& p);
Partition conjugate(const Partition& p);
bool belongs_to(const Partition& p, PartitionClass c);

struct EnumerationCaps {
  int all = 60;
  int distinct = 120;
  int overpartitions = 40;
  int pstar = 120;
  int p1star = 60;
  int d1 = 120;
  int dstar = 120;

  int cap(PartitionClass c) const;
};

// Visits the class in reverse-lexicographic order of the parts. Overpartitions
// of one underlying partition follow it in the order of a binary counter over
// its distinct sizes, largest size as the low bit.
void for_each_partition(int n, PartitionClass c, const std::function<void(const Partition&)>& visit,
                        const EnumerationCaps& caps = {});
std::vector<Partition> enumerate(int n, PartitionClass c, const EnumerationCaps& caps = {});
long count_partitions(int n, PartitionClass c, const EnumerationCaps& caps = {});

}  // namespace qsv
