#pragma once

#include <qsv/polynomial.hpp>

#include <unordered_map>

namespace qsv::detail {

TermList add(const TermList& a, const TermList& b);
TermList sub(const TermList& a, const TermList& b);
void negate_in_place(TermList& a);
void scale_in_place(TermList& a, const Rational& r);
TermList mul(const TermList& a, const TermList& b, int max_degree);
// Inverse modulo degree > max_degree; requires a nonzero constant term.
TermList inverse(const TermList& a, int max_degree);
const Rational* find(const TermList& a, Key k);

// Collects sums of terms and products keyed by monomial.
class Accumulator {
 public:
  void add(const TermList& a);
  void sub(const TermList& a);
  void add_product(const TermList& a, const TermList& b, int max_degree);
  void sub_product(const TermList& a, const TermList& b, int max_degree);
  bool empty() const { return terms_.empty(); }
  TermList take();

 private:
  Rational& slot(Key k);

  TermList terms_;
  std::unordered_map<Key, std::size_t> index_;
};

}  // namespace qsv::detail
