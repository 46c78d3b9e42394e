#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bchcalc/nilpoly.hpp"

namespace bchcalc {

enum class Generator : char { X = 'X', Y = 'Y' };

// Raw, unnormalized Lie bracket expression over the generators: a binary tree
// whose leaves are X or Y. Immutable; copies share structure.
class BracketTree {
 public:
  static BracketTree leaf(Generator g);
  static BracketTree pair(const BracketTree& left, const BracketTree& right);

  bool is_leaf() const { return node_->left == nullptr; }
  Generator letter() const;
  BracketTree left() const;
  BracketTree right() const;

  int degree() const { return node_->degree; }
  // Leaf letters, left to right.
  std::string foliage() const;
  // "[X,[X,Y]]"
  std::string bracket_string() const;

 private:
  struct Node {
    std::shared_ptr<const Node> left, right;  // both null for a leaf
    Generator gen = Generator::X;
    int degree = 1;
  };
  explicit BracketTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// (length, lexicographic) order on words over {X,Y}; within one degree this is
// plain lexicographic order with X < Y.
struct WordLess {
  bool operator()(const std::string& a, const std::string& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

bool is_lyndon(std::string_view w);

// Standard factorization bracketing: a letter maps to a leaf; otherwise the
// word splits as u.v with v its longest proper Lyndon suffix.
BracketTree standard_bracketing(std::string_view lyndon_word);

struct BasisWord {
  std::string word;
  BracketTree bracketing;
};

// All Lyndon words over {X,Y} of degree <= max_degree with their standard
// bracketings, ordered by (degree, lex).
std::vector<BasisWord> lyndon_basis(int max_degree);

// Rational span of Lyndon words; the coefficient-field-level normal form used
// by the rewriting engine.
using WordCombo = std::map<std::string, Rational, WordLess>;

// [basis(u), basis(v)] rewritten into the Lyndon basis via antisymmetry and
// Jacobi on standard factorizations.
WordCombo lyndon_bracket(const std::string& u, const std::string& v);

// NilPoly-weighted combination of Lyndon basis words. Nonzero terms may not
// exceed bracket degree arity + 1; inserting one is an error.
class LieSeries {
 public:
  using TermMap = std::map<std::string, NilPoly, WordLess>;

  explicit LieSeries(int arity) : arity_(arity) {
    if (arity < 1 || arity > kMaxArity) throw std::invalid_argument("LieSeries: arity out of range");
  }
  LieSeries(int arity, TermMap terms);  // validates words, arities, degree cap

  static LieSeries generator(int arity, Generator g);

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  NilPoly coefficient(const std::string& word) const;
  int max_word_degree() const { return terms_.empty() ? 0 : static_cast<int>(terms_.rbegin()->first.size()); }
  // Smallest coefficient-monomial degree over all terms; kMaxArity + 1 when zero.
  int min_coeff_degree() const;
  bool depends_on(int index) const;

  friend LieSeries operator+(const LieSeries& a, const LieSeries& b);
  friend LieSeries operator-(const LieSeries& a, const LieSeries& b);
  LieSeries operator-() const;
  LieSeries scaled(const NilPoly& c) const;
  LieSeries scaled(const Rational& c) const;

  std::pair<LieSeries, LieSeries> split_full(const Monomial& s) const;
  LieSeries set_zero(int index) const;
  LieSeries widened(int new_arity) const;
  LieSeries narrowed(int new_arity) const;
  LieSeries permuted(const std::vector<int>& sigma) const;

  friend bool operator==(const LieSeries& a, const LieSeries& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LieSeries& a, const LieSeries& b) { return !(a == b); }

  void add_term(const std::string& word, const NilPoly& c);  // checks word/degree/arity

 private:
  static void check_same_arity(const LieSeries& a, const LieSeries& b);
  int arity_;
  TermMap terms_;
};

// coeff * t rewritten into the Lyndon basis.
LieSeries normalize(const BracketTree& t, const NilPoly& coeff);

// Bilinear bracket; coefficient products use the nilpotent ring, so cross
// terms with shared d-indices vanish before any tree rewriting happens.
LieSeries bracket(const LieSeries& a, const LieSeries& b);

}  // namespace bchcalc
