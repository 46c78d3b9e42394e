#include "bchcalc/nilpoly.hpp"

#include <utility>

namespace bchcalc {

NilPoly::NilPoly(int arity) : arity_(arity) {
  if (arity < 1 || arity > kMaxArity) throw std::invalid_argument("NilPoly: arity out of range");
}

NilPoly::NilPoly(int arity, TermMap terms) : NilPoly(arity) {
  for (const auto& [m, c] : terms) {
    if (m.max_index() > arity_) throw std::invalid_argument("NilPoly: monomial index exceeds arity");
    if (c.is_zero()) throw std::invalid_argument("NilPoly: stored zero coefficient");
  }
  terms_ = std::move(terms);
}

NilPoly NilPoly::constant(int arity, const Rational& c) {
  NilPoly p(arity);
  if (!c.is_zero()) p.terms_.emplace(Monomial::unit(), c);
  return p;
}

NilPoly NilPoly::monomial(int arity, const Monomial& m, const Rational& c) {
  NilPoly p(arity);
  if (m.max_index() > arity) throw std::invalid_argument("NilPoly: monomial index exceeds arity");
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

NilPoly NilPoly::sum_d(int arity) {
  NilPoly p(arity);
  for (int i = 1; i <= arity; ++i) p.terms_.emplace(Monomial::d(i), Rational(1));
  return p;
}

Rational NilPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int NilPoly::min_degree() const {
  if (terms_.empty()) return kMaxArity + 1;
  return terms_.begin()->first.degree();  // map order is degree-first
}

bool NilPoly::depends_on(int index) const {
  check_index_in_arity(index);
  for (const auto& [m, c] : terms_)
    if (m.contains(index)) return true;
  return false;
}

void NilPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NilPoly::check_same_arity(const NilPoly& a, const NilPoly& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("NilPoly: arity mismatch");
}

void NilPoly::check_index_in_arity(int index) const {
  if (index < 1 || index > arity_) throw std::invalid_argument("NilPoly: index out of range");
}

NilPoly operator+(const NilPoly& a, const NilPoly& b) {
  NilPoly::check_same_arity(a, b);
  NilPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

NilPoly operator-(const NilPoly& a, const NilPoly& b) {
  NilPoly::check_same_arity(a, b);
  NilPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

NilPoly operator*(const NilPoly& a, const NilPoly& b) {
  NilPoly::check_same_arity(a, b);
  NilPoly out(a.arity_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      if (!ma.disjoint(mb)) continue;  // shared index => d_i^2 = 0
      out.add_term(ma.merged(mb), ca * cb);
    }
  return out;
}

NilPoly NilPoly::operator-() const {
  NilPoly out(arity_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

NilPoly NilPoly::scaled(const Rational& c) const {
  NilPoly out(arity_);
  if (c.is_zero()) return out;
  for (const auto& [m, w] : terms_) out.terms_.emplace(m, w * c);
  return out;
}

NilPoly NilPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("NilPoly: negative power");
  NilPoly out = unit(arity_);
  for (int i = 0; i < k; ++i) {
    out = out * *this;
    if (out.is_zero()) break;
  }
  return out;
}

std::pair<NilPoly, NilPoly> NilPoly::split_by_cover(const Monomial& s) const {
  if (s.max_index() > arity_) throw std::invalid_argument("NilPoly: cover set exceeds arity");
  NilPoly covered(arity_), rest(arity_);
  for (const auto& [m, c] : terms_) (m.covers(s) ? covered : rest).terms_.emplace(m, c);
  return {covered, rest};
}

NilPoly NilPoly::set_zero(int index) const {
  check_index_in_arity(index);
  NilPoly out(arity_);
  for (const auto& [m, c] : terms_)
    if (!m.contains(index)) out.terms_.emplace(m, c);
  return out;
}

NilPoly NilPoly::widened(int new_arity) const {
  if (new_arity < arity_) throw std::invalid_argument("NilPoly: widening must not shrink arity");
  NilPoly out(new_arity);
  out.terms_ = terms_;
  return out;
}

NilPoly NilPoly::narrowed(int new_arity) const {
  if (new_arity > arity_) throw std::invalid_argument("NilPoly: narrowing must not grow arity");
  NilPoly out(new_arity);
  for (const auto& [m, c] : terms_) {
    if (m.max_index() > new_arity)
      throw std::invalid_argument("NilPoly: term depends on an index beyond the narrowed arity");
    out.terms_.emplace(m, c);
  }
  return out;
}

NilPoly NilPoly::permuted(const std::vector<int>& sigma) const {
  if (static_cast<int>(sigma.size()) != arity_)
    throw std::invalid_argument("NilPoly: permutation size must equal arity");
  std::vector<bool> seen(arity_, false);
  for (int v : sigma) {
    if (v < 1 || v > arity_ || seen[v - 1]) throw std::invalid_argument("NilPoly: not a permutation");
    seen[v - 1] = true;
  }
  NilPoly out(arity_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m.permuted(sigma), c);
  return out;
}

}  // namespace bchcalc
