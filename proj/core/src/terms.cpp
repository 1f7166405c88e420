#include "terms.hpp"

#include <qsv/error.hpp>

#include <algorithm>

namespace qsv::detail {

namespace {

template <bool Subtract>
TermList merge(const TermList& a, const TermList& b) {
  TermList out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].key < b[j].key)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].key < a[i].key) {
      out.push_back(Subtract ? Term{b[j].key, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Rational c = Subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back(Term{a[i].key, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

TermList add(const TermList& a, const TermList& b) {
  if (b.empty()) return a;
  if (a.empty()) return b;
  return merge<false>(a, b);
}

TermList sub(const TermList& a, const TermList& b) {
  if (b.empty()) return a;
  return merge<true>(a, b);
}

void negate_in_place(TermList& a) {
  for (auto& t : a) t.coeff = -t.coeff;
}

void scale_in_place(TermList& a, const Rational& r) {
  if (r.is_zero()) {
    a.clear();
    return;
  }
  if (r.is_one()) return;
  for (auto& t : a) t.coeff *= r;
}

const Rational* find(const TermList& a, Key k) {
  auto it = std::lower_bound(a.begin(), a.end(), k, [](const Term& t, Key key) { return t.key < key; });
  return it != a.end() && it->key == k ? &it->coeff : nullptr;
}

TermList mul(const TermList& a, const TermList& b, int max_degree) {
  if (a.empty() || b.empty()) return {};
  const TermList& small = a.size() <= b.size() ? a : b;
  const TermList& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) {
    // Adding a fixed key preserves the order, so no sort is needed.
    const Term& m = small.front();
    TermList out;
    out.reserve(large.size());
    for (const auto& t : large) {
      if (key_degree(t.key) + key_degree(m.key) > max_degree) break;
      out.push_back(Term{t.key + m.key, t.coeff * m.coeff});
    }
    return out;
  }
  Accumulator acc;
  acc.add_product(a, b, max_degree);
  return acc.take();
}

TermList inverse(const TermList& a, int max_degree) {
  if (a.empty() || a.front().key != 0)
    throw Error(Errc::not_a_unit, "polynomial has no constant term");
  Rational u_inv = a.front().coeff.inverse();
  if (a.size() == 1) return {Term{0, u_inv}};
  // a = u (1 - e); 1/a = u^{-1} sum_j e^j, and e^j vanishes for j > M.
  TermList e(a.begin() + 1, a.end());
  scale_in_place(e, -u_inv);
  TermList one{Term{0, Rational(1)}};
  TermList s = one;
  for (int j = 0; j < max_degree; ++j) s = add(one, mul(e, s, max_degree));
  scale_in_place(s, u_inv);
  return s;
}

Rational& Accumulator::slot(Key k) {
  auto [it, inserted] = index_.try_emplace(k, terms_.size());
  if (inserted) terms_.push_back(Term{k, Rational()});
  return terms_[it->second].coeff;
}

void Accumulator::add(const TermList& a) {
  for (const auto& t : a) slot(t.key) += t.coeff;
}

void Accumulator::sub(const TermList& a) {
  for (const auto& t : a) slot(t.key) -= t.coeff;
}

void Accumulator::add_product(const TermList& a, const TermList& b, int max_degree) {
  for (const auto& x : a) {
    int dx = key_degree(x.key);
    if (dx > max_degree) break;
    for (const auto& y : b) {
      if (dx + key_degree(y.key) > max_degree) break;
      slot(x.key + y.key).add_mul(x.coeff, y.coeff);
    }
  }
}

void Accumulator::sub_product(const TermList& a, const TermList& b, int max_degree) {
  for (const auto& x : a) {
    int dx = key_degree(x.key);
    if (dx > max_degree) break;
    for (const auto& y : b) {
      if (dx + key_degree(y.key) > max_degree) break;
      slot(x.key + y.key).sub_mul(x.coeff, y.coeff);
    }
  }
}

TermList Accumulator::take() {
  TermList out;
  out.reserve(terms_.size());
  for (auto& t : terms_)
    if (!t.coeff.is_zero()) out.push_back(std::move(t));
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.key < y.key; });
  terms_.clear();
  index_.clear();
  return out;
}

}  // namespace qsv::detail
