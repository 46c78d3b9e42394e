#pragma once

#include <string>
#include <vector>

#include "bchcalc/freelie.hpp"

namespace bchcalc {

// NilPoly-weighted combination of associative words over {X,Y}. This is the
// verification side of the artifact: it shares the coefficient ring with the
// Lie side but none of the bracket rewriting. Nonzero terms may not exceed
// word length arity + 1; inserting one is a hard error.
class AssocSeries {
 public:
  using TermMap = std::map<std::string, NilPoly, WordLess>;

  explicit AssocSeries(int arity) : arity_(arity) {
    if (arity < 1 || arity > kMaxArity) throw std::invalid_argument("AssocSeries: arity out of range");
  }
  AssocSeries(int arity, TermMap terms);

  static AssocSeries unit(int arity) { return term(arity, "", NilPoly::unit(arity)); }
  static AssocSeries term(int arity, const std::string& word, const NilPoly& coeff);

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  NilPoly coefficient(const std::string& word) const;

  friend AssocSeries operator+(const AssocSeries& a, const AssocSeries& b);
  friend AssocSeries operator-(const AssocSeries& a, const AssocSeries& b);
  AssocSeries operator-() const;
  AssocSeries scaled(const Rational& c) const;

  // Restriction to words of one length.
  AssocSeries homogeneous_part(int length) const;

  friend bool operator==(const AssocSeries& a, const AssocSeries& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const AssocSeries& a, const AssocSeries& b) { return !(a == b); }

  void add_term(const std::string& word, const NilPoly& c);

 private:
  int arity_;
  TermMap terms_;
};

// Concatenation product.
AssocSeries as_mul(const AssocSeries& a, const AssocSeries& b);

// Brackets as commutators: every node [u,v] becomes uv - vu.
AssocSeries embed(const LieSeries& a);

// sum of a^k / k! for k = 0..arity. Requires every coefficient monomial of a
// to have degree >= 1, which makes the series terminate.
AssocSeries as_exp(const AssocSeries& a);

// sum of (-1)^{k+1} (a-1)^k / k for k = 1..arity. Requires the empty-word
// coefficient of a to be exactly 1.
AssocSeries as_log(const AssocSeries& a);

struct CoefficientMismatch {
  std::string word;
  Monomial monomial;
  Rational product_side;   // coefficient in exp(sX).exp(sY)
  Rational exponent_side;  // coefficient in exp(Z)
};

struct VerifyReport {
  bool ok = false;
  std::vector<CoefficientMismatch> mismatches;
};

// Checks exp(sX).exp(sY) = exp(Z) at arity n with s = d_1 + ... + d_n,
// entirely inside the associative algebra.
VerifyReport verify_theorem(int n, const LieSeries& z);

// Dynkin-Specht-Wever projection of a homogeneous series of word length k:
// (1/k) sum of coeff(w) times the left-to-right bracketing of w.
LieSeries dynkin_project(const AssocSeries& h, int k);

}  // namespace bchcalc
