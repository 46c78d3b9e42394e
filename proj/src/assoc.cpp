#include "bchcalc/assoc.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace bchcalc {

namespace {

void check_word(const std::string& w) {
  for (char ch : w)
    if (ch != 'X' && ch != 'Y') throw std::invalid_argument("AssocSeries: word must be over {X,Y}");
}

}  // namespace

AssocSeries::AssocSeries(int arity, TermMap terms) : AssocSeries(arity) {
  for (const auto& [w, c] : terms) add_term(w, c);
}

AssocSeries AssocSeries::term(int arity, const std::string& word, const NilPoly& coeff) {
  AssocSeries s(arity);
  s.add_term(word, coeff);
  return s;
}

NilPoly AssocSeries::coefficient(const std::string& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? NilPoly(arity_) : it->second;
}

void AssocSeries::add_term(const std::string& word, const NilPoly& c) {
  if (c.arity() != arity_) throw std::invalid_argument("AssocSeries: coefficient arity mismatch");
  if (c.is_zero()) return;
  check_word(word);
  if (static_cast<int>(word.size()) > arity_ + 1)
    throw std::logic_error("AssocSeries: nonzero word of length " + std::to_string(word.size()) +
                           " exceeds cap at arity " + std::to_string(arity_));
  auto [it, inserted] = terms_.emplace(word, c);
  if (!inserted) {
    NilPoly sum = it->second + c;
    if (sum.is_zero())
      terms_.erase(it);
    else
      it->second = std::move(sum);
  }
}

AssocSeries operator+(const AssocSeries& a, const AssocSeries& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("AssocSeries: arity mismatch");
  AssocSeries out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, c);
  return out;
}

AssocSeries operator-(const AssocSeries& a, const AssocSeries& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("AssocSeries: arity mismatch");
  AssocSeries out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, -c);
  return out;
}

AssocSeries AssocSeries::operator-() const {
  AssocSeries out(arity_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

AssocSeries AssocSeries::scaled(const Rational& c) const {
  AssocSeries out(arity_);
  if (c.is_zero()) return out;
  for (const auto& [w, coeff] : terms_) out.terms_.emplace(w, coeff.scaled(c));
  return out;
}

AssocSeries AssocSeries::homogeneous_part(int length) const {
  AssocSeries out(arity_);
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) == length) out.terms_.emplace(w, c);
  return out;
}

AssocSeries as_mul(const AssocSeries& a, const AssocSeries& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("as_mul: arity mismatch");
  AssocSeries out(a.arity());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      NilPoly c = ca * cb;
      if (c.is_zero()) continue;
      out.add_term(wa + wb, c);
    }
  return out;
}

namespace {

using RationalWords = std::map<std::string, Rational, WordLess>;

void rw_add(RationalWords& acc, const std::string& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

RationalWords commutator_expansion(const BracketTree& t) {
  RationalWords out;
  if (t.is_leaf()) {
    out.emplace(std::string(1, static_cast<char>(t.letter())), Rational(1));
    return out;
  }
  RationalWords l = commutator_expansion(t.left());
  RationalWords r = commutator_expansion(t.right());
  for (const auto& [wl, cl] : l)
    for (const auto& [wr, cr] : r) {
      Rational c = cl * cr;
      rw_add(out, wl + wr, c);
      rw_add(out, wr + wl, -c);
    }
  return out;
}

}  // namespace

AssocSeries embed(const LieSeries& a) {
  AssocSeries out(a.arity());
  for (const auto& [word, coeff] : a.terms())
    for (const auto& [w, r] : commutator_expansion(standard_bracketing(word)))
      out.add_term(w, coeff.scaled(r));
  return out;
}

AssocSeries as_exp(const AssocSeries& a) {
  for (const auto& [w, c] : a.terms())
    if (c.has_constant_term())
      throw std::invalid_argument("as_exp: argument has a degree-0 coefficient (constant term present)");
  const int arity = a.arity();
  AssocSeries acc = AssocSeries::unit(arity);
  AssocSeries power = AssocSeries::unit(arity);
  for (int k = 1; k <= arity; ++k) {
    power = as_mul(power, a);
    if (power.is_zero()) break;
    acc = acc + power.scaled(Rational(1) / Rational::factorial(k));
  }
  return acc;
}

AssocSeries as_log(const AssocSeries& a) {
  if (a.coefficient("") != NilPoly::unit(a.arity()))
    throw std::invalid_argument("as_log: empty-word coefficient must be exactly 1");
  const int arity = a.arity();
  AssocSeries u = a - AssocSeries::unit(arity);
  AssocSeries acc(arity);
  AssocSeries power = AssocSeries::unit(arity);
  for (int k = 1; k <= arity; ++k) {
    power = as_mul(power, u);
    if (power.is_zero()) break;
    Rational c = Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
    acc = acc + power.scaled(c);
  }
  return acc;
}

VerifyReport verify_theorem(int n, const LieSeries& z) {
  if (z.arity() != n) throw std::invalid_argument("verify_theorem: arity mismatch");
  NilPoly s = NilPoly::sum_d(n);
  LieSeries sx = LieSeries::generator(n, Generator::X).scaled(s);
  LieSeries sy = LieSeries::generator(n, Generator::Y).scaled(s);
  AssocSeries lhs = as_mul(as_exp(embed(sx)), as_exp(embed(sy)));
  AssocSeries rhs = as_exp(embed(z));

  VerifyReport report;
  AssocSeries diff = lhs - rhs;
  report.ok = diff.is_zero();
  for (const auto& [w, c] : diff.terms())
    for (const auto& [m, r] : c.terms())
      report.mismatches.push_back(
          CoefficientMismatch{w, m, lhs.coefficient(w).coefficient(m), rhs.coefficient(w).coefficient(m)});
  return report;
}

LieSeries dynkin_project(const AssocSeries& h, int k) {
  if (k < 1) throw std::invalid_argument("dynkin_project: degree must be >= 1");
  LieSeries out(h.arity());
  for (const auto& [w, c] : h.terms()) {
    if (static_cast<int>(w.size()) != k)
      throw std::invalid_argument("dynkin_project: input is not homogeneous of the stated degree");
    BracketTree t = BracketTree::leaf(static_cast<Generator>(w[0]));
    for (size_t i = 1; i < w.size(); ++i)
      t = BracketTree::pair(t, BracketTree::leaf(static_cast<Generator>(w[i])));
    out = out + normalize(t, c.scaled(Rational(1, k)));
  }
  return out;
}

}  // namespace bchcalc
