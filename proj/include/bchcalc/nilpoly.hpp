#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "bchcalc/rational.hpp"

namespace bchcalc {

inline constexpr int kMaxArity = 64;

// Square-free product of the nilpotent generators d_i, stored as a bit set of
// 1-based indices. The empty set is the unit monomial 1. Repeats cannot occur:
// d_i^2 = 0 in the ring, so a product with a shared index is simply zero.
class Monomial {
 public:
  Monomial() : bits_(0) {}

  static Monomial unit() { return Monomial(); }

  static Monomial d(int index) {
    check_index(index);
    return Monomial(std::uint64_t{1} << (index - 1));
  }

  // {1, 2, ..., k}
  static Monomial full(int k) {
    if (k < 0 || k > kMaxArity) throw std::invalid_argument("Monomial: bad prefix size");
    return Monomial(k == 0 ? 0 : ~std::uint64_t{0} >> (kMaxArity - k));
  }

  static Monomial from_indices(const std::vector<int>& indices) {
    Monomial m;
    for (int i : indices) {
      check_index(i);
      std::uint64_t bit = std::uint64_t{1} << (i - 1);
      if (m.bits_ & bit) throw std::invalid_argument("Monomial: repeated index");
      m.bits_ |= bit;
    }
    return m;
  }

  bool is_unit() const { return bits_ == 0; }
  int degree() const { return std::popcount(bits_); }
  bool contains(int index) const {
    check_index(index);
    return (bits_ >> (index - 1)) & 1;
  }
  bool covers(const Monomial& s) const { return (bits_ & s.bits_) == s.bits_; }
  bool disjoint(const Monomial& o) const { return (bits_ & o.bits_) == 0; }

  // Disjoint union; callers must have checked disjointness (else the product is 0).
  Monomial merged(const Monomial& o) const { return Monomial(bits_ | o.bits_); }
  Monomial without(int index) const {
    check_index(index);
    return Monomial(bits_ & ~(std::uint64_t{1} << (index - 1)));
  }

  int max_index() const { return bits_ == 0 ? 0 : kMaxArity - std::countl_zero(bits_); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  Monomial permuted(const std::vector<int>& sigma) const {
    Monomial out;
    for (std::uint64_t b = bits_; b; b &= b - 1) {
      int i = std::countr_zero(b) + 1;
      if (i > static_cast<int>(sigma.size())) throw std::invalid_argument("Monomial: permutation too short");
      out = out.merged(d(sigma[i - 1]));
    }
    return out;
  }

  // Total order: degree first, then lexicographic on the increasing index sequence.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    std::uint64_t x = a.bits_, y = b.bits_;
    while (x && y) {
      int ix = std::countr_zero(x), iy = std::countr_zero(y);
      if (ix != iy) return ix <=> iy;
      x &= x - 1;
      y &= y - 1;
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.bits_ == b.bits_; }

 private:
  explicit Monomial(std::uint64_t bits) : bits_(bits) {}
  static void check_index(int index) {
    if (index < 1 || index > kMaxArity) throw std::invalid_argument("Monomial: index out of range");
  }
  std::uint64_t bits_;
};

// Element of Q[d_1..d_n]/(d_1^2, ..., d_n^2): a finite sum of square-free
// monomials with exact rational weights. The arity n is fixed per value and
// operations on mixed arities are rejected.
class NilPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit NilPoly(int arity);
  NilPoly(int arity, TermMap terms);  // validates: indices <= arity, no zero weights

  static NilPoly constant(int arity, const Rational& c);
  static NilPoly unit(int arity) { return constant(arity, 1); }
  static NilPoly monomial(int arity, const Monomial& m, const Rational& c);
  // d_1 + d_2 + ... + d_n
  static NilPoly sum_d(int arity);

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const;
  // Smallest monomial degree present; kMaxArity + 1 when zero.
  int min_degree() const;
  // True if some monomial contains the index.
  bool depends_on(int index) const;
  bool has_constant_term() const { return terms_.count(Monomial::unit()) != 0; }

  friend NilPoly operator+(const NilPoly& a, const NilPoly& b);
  friend NilPoly operator-(const NilPoly& a, const NilPoly& b);
  friend NilPoly operator*(const NilPoly& a, const NilPoly& b);
  NilPoly operator-() const;
  NilPoly scaled(const Rational& c) const;
  NilPoly pow(int k) const;

  // (covered, rest): covered holds exactly the monomials whose index set
  // contains all of s; covered + rest == *this.
  std::pair<NilPoly, NilPoly> split_by_cover(const Monomial& s) const;
  // Substitutes d_index := 0, deleting every monomial that contains it.
  NilPoly set_zero(int index) const;

  NilPoly widened(int new_arity) const;
  NilPoly narrowed(int new_arity) const;
  // sigma[i-1] is the image of index i; must be a permutation of 1..arity.
  NilPoly permuted(const std::vector<int>& sigma) const;

  friend bool operator==(const NilPoly& a, const NilPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const NilPoly& a, const NilPoly& b) { return !(a == b); }

 private:
  void add_term(const Monomial& m, const Rational& c);
  static void check_same_arity(const NilPoly& a, const NilPoly& b);
  void check_index_in_arity(int index) const;

  int arity_;
  TermMap terms_;
};

}  // namespace bchcalc
