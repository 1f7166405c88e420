#include <qsv/error.hpp>
#include <qsv/partitions.hpp>

#include <algorithm>

namespace qsv {

namespace {

constexpr int triangular(int k) { return k * (k + 1) / 2; }

}  // namespace

std::string_view to_string(PartitionClass c) {
  switch (c) {
    case PartitionClass::all: return "all";
    case PartitionClass::distinct: return "distinct";
    case PartitionClass::overpartitions: return "overp";
    case PartitionClass::pstar: return "pstar";
    case PartitionClass::p1star: return "p1star";
    case PartitionClass::d1: return "d1";
    case PartitionClass::dstar: return "dstar";
  }
  return "unknown";
}

const std::vector<PartitionClass>& all_partition_classes() {
  static const std::vector<PartitionClass> v{PartitionClass::all,    PartitionClass::distinct,
                                             PartitionClass::overpartitions, PartitionClass::pstar,
                                             PartitionClass::p1star, PartitionClass::d1,
                                             PartitionClass::dstar};
  return v;
}

std::optional<PartitionClass> parse_partition_class(std::string_view name) {
  for (auto c : all_partition_classes())
    if (to_string(c) == name) return c;
  return std::nullopt;
}

Partition::Partition(std::vector<int> parts, std::vector<int> overlined)
    : parts_(std::move(parts)), overlined_(std::move(overlined)) {
  for (int p : parts_)
    if (p <= 0) throw Error(Errc::invalid_argument, "partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  std::sort(overlined_.begin(), overlined_.end(), std::greater<>());
  if (std::adjacent_find(overlined_.begin(), overlined_.end()) != overlined_.end())
    throw Error(Errc::invalid_argument, "a part size can be overlined at most once");
  for (int o : overlined_)
    if (std::find(parts_.begin(), parts_.end(), o) == parts_.end())
      throw Error(Errc::invalid_argument, "overlined size " + std::to_string(o) + " is not a part");
}

bool Partition::is_overlined(int part) const {
  return std::find(overlined_.begin(), overlined_.end(), part) != overlined_.end();
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(parts_[i]);
    bool first_of_size = i == 0 || parts_[i - 1] != parts_[i];
    if (first_of_size && is_overlined(parts_[i])) s += '\'';
  }
  return s;
}

PartitionStats stats(const Partition& p) {
  PartitionStats st;
  const auto& parts = p.parts();
  st.count = static_cast<int>(parts.size());
  if (parts.empty()) {
    st.multiplicity.assign(1, 0);
    return st;
  }
  st.largest = parts.front();
  st.smallest = parts.back();
  st.rank = st.largest - st.count;
  st.multiplicity.assign(st.largest + 1, 0);
  for (int x : parts) {
    st.total += x;
    if (st.multiplicity[x]++ == 0) ++st.distinct_count;
  }
  for (int j = st.smallest + 1; j <= st.largest; ++j)
    if (st.multiplicity[j]) {
      st.second_smallest = j;
      break;
    }
  return st;
}

Partition conjugate(const Partition& p) {
  if (p.is_overpartition()) throw Error(Errc::overlined_input, "conjugate of an overpartition");
  std::vector<int> out;
  const auto& parts = p.parts();
  int largest = parts.empty() ? 0 : parts.front();
  for (int i = 1; i <= largest; ++i)
    out.push_back(static_cast<int>(std::count_if(parts.begin(), parts.end(), [i](int x) { return x >= i; })));
  return Partition(std::move(out));
}

bool belongs_to(const Partition& p, PartitionClass c) {
  if (c == PartitionClass::overpartitions) return true;
  if (p.is_overpartition()) return false;
  const auto& parts = p.parts();
  const std::size_t n = parts.size();
  auto distinct_from = [&](std::size_t i) {
    for (std::size_t k = i + 1; k < n; ++k)
      if (parts[k] == parts[k - 1]) return false;
    return true;
  };
  auto consecutive = [&] {
    for (std::size_t k = 1; k < n; ++k)
      if (parts[k - 1] - parts[k] > 1) return false;
    return true;
  };
  std::size_t top = 0;
  while (top < n && parts[top] == parts.front()) ++top;
  switch (c) {
    case PartitionClass::all: return true;
    case PartitionClass::distinct: return distinct_from(0);
    case PartitionClass::pstar: return consecutive() && (n == 0 || parts.back() == 1);
    case PartitionClass::p1star: return consecutive();
    case PartitionClass::d1: return n == 0 || distinct_from(top - 1);
    case PartitionClass::dstar: return n >= 3 && top == 2 && distinct_from(top - 1);
    case PartitionClass::overpartitions: return true;
  }
  return false;
}

int EnumerationCaps::cap(PartitionClass c) const {
  switch (c) {
    case PartitionClass::all: return all;
    case PartitionClass::distinct: return distinct;
    case PartitionClass::overpartitions: return overpartitions;
    case PartitionClass::pstar: return pstar;
    case PartitionClass::p1star: return p1star;
    case PartitionClass::d1: return d1;
    case PartitionClass::dstar: return dstar;
  }
  return 0;
}

// Depth-first generation, largest admissible part first, which yields
// reverse-lexicographic order.
class PartitionWalker {
 public:
  PartitionWalker(const std::function<void(const Partition&)>& visit) : visit_(visit) {}

  void run(int n, PartitionClass c) {
    auto& parts = current_.parts_;
    switch (c) {
      case PartitionClass::all: unrestricted(n, n); break;
      case PartitionClass::overpartitions: overlined_ = true; unrestricted(n, n); break;
      case PartitionClass::distinct: distinct(n, n); break;
      case PartitionClass::pstar:
        if (n == 0) emit();
        for (int l = n; l >= 1; --l) {
          if (n - l < triangular(l - 1)) continue;
          parts.push_back(l);
          consecutive(n - l, l, true);
          parts.pop_back();
        }
        break;
      case PartitionClass::p1star:
        if (n == 0) emit();
        for (int l = n; l >= 1; --l) {
          parts.push_back(l);
          consecutive(n - l, l, false);
          parts.pop_back();
        }
        break;
      case PartitionClass::d1:
        if (n == 0) emit();
        for (int l = n; l >= 1; --l)
          for (int k = n / l; k >= 1; --k) {
            parts.assign(k, l);
            distinct(n - k * l, l - 1);
          }
        parts.clear();
        break;
      case PartitionClass::dstar:
        for (int l = (n - 1) / 2; l >= 2; --l) {
          parts.assign(2, l);
          distinct(n - 2 * l, l - 1, true);
        }
        parts.clear();
        break;
    }
  }

 private:
  void emit() {
    if (!overlined_) {
      visit_(current_);
      return;
    }
    std::vector<int> sizes;
    for (int p : current_.parts_)
      if (sizes.empty() || sizes.back() != p) sizes.push_back(p);
    const unsigned long masks = 1UL << sizes.size();
    for (unsigned long mask = 0; mask < masks; ++mask) {
      current_.overlined_.clear();
      for (std::size_t i = 0; i < sizes.size(); ++i)
        if (mask >> i & 1) current_.overlined_.push_back(sizes[i]);
      visit_(current_);
    }
    current_.overlined_.clear();
  }

  void unrestricted(int remaining, int max_part) {
    if (remaining == 0) return emit();
    auto& parts = current_.parts_;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      unrestricted(remaining - p, p);
      parts.pop_back();
    }
  }

  void distinct(int remaining, int max_part, bool nonempty = false) {
    if (remaining == 0) {
      if (!nonempty) emit();
      return;
    }
    auto& parts = current_.parts_;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      if (triangular(p) < remaining) break;
      parts.push_back(p);
      distinct(remaining - p, p - 1);
      parts.pop_back();
    }
  }

  // Each next part equals the previous one or is one smaller.
  void consecutive(int remaining, int last, bool down_to_one) {
    if (remaining == 0) {
      if (!down_to_one || last == 1) emit();
      return;
    }
    if (down_to_one && remaining < triangular(last - 1)) return;
    auto& parts = current_.parts_;
    for (int p : {last, last - 1}) {
      if (p < 1 || p > remaining) continue;
      parts.push_back(p);
      consecutive(remaining - p, p, down_to_one);
      parts.pop_back();
    }
  }

  const std::function<void(const Partition&)>& visit_;
  Partition current_;
  bool overlined_ = false;
};

void for_each_partition(int n, PartitionClass c, const std::function<void(const Partition&)>& visit,
                        const EnumerationCaps& caps) {
  if (n < 0) throw Error(Errc::invalid_argument, "negative partition size");
  if (n > caps.cap(c))
    throw Error(Errc::cap_exceeded, std::string(to_string(c)) + " enumeration is capped at n = " +
                                        std::to_string(caps.cap(c)));
  PartitionWalker(visit).run(n, c);
}

std::vector<Partition> enumerate(int n, PartitionClass c, const EnumerationCaps& caps) {
  std::vector<Partition> out;
  for_each_partition(n, c, [&](const Partition& p) { out.push_back(p); }, caps);
  return out;
}

long count_partitions(int n, PartitionClass c, const EnumerationCaps& caps) {
  long k = 0;
  for_each_partition(n, c, [&](const Partition&) { ++k; }, caps);
  return k;
}

}  // namespace qsv
