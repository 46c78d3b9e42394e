#include "bchcalc/freelie.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace bchcalc {

BracketTree BracketTree::leaf(Generator g) {
  auto n = std::make_shared<Node>();
  n->gen = g;
  return BracketTree(std::move(n));
}

BracketTree BracketTree::pair(const BracketTree& left, const BracketTree& right) {
  auto n = std::make_shared<Node>();
  n->left = left.node_;
  n->right = right.node_;
  n->degree = left.degree() + right.degree();
  return BracketTree(std::move(n));
}

Generator BracketTree::letter() const {
  if (!is_leaf()) throw std::logic_error("BracketTree: letter() on interior node");
  return node_->gen;
}

BracketTree BracketTree::left() const {
  if (is_leaf()) throw std::logic_error("BracketTree: left() on leaf");
  return BracketTree(node_->left);
}

BracketTree BracketTree::right() const {
  if (is_leaf()) throw std::logic_error("BracketTree: right() on leaf");
  return BracketTree(node_->right);
}

std::string BracketTree::foliage() const {
  if (is_leaf()) return std::string(1, static_cast<char>(node_->gen));
  return BracketTree(node_->left).foliage() + BracketTree(node_->right).foliage();
}

std::string BracketTree::bracket_string() const {
  if (is_leaf()) return std::string(1, static_cast<char>(node_->gen));
  return "[" + BracketTree(node_->left).bracket_string() + "," +
         BracketTree(node_->right).bracket_string() + "]";
}

bool is_lyndon(std::string_view w) {
  if (w.empty()) return false;
  const size_t n = w.size();
  for (size_t r = 1; r < n; ++r) {
    // compare w with its rotation starting at r
    for (size_t i = 0; i < n; ++i) {
      char a = w[i], b = w[(r + i) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // equal rotation
    }
  }
  return true;
}

BracketTree standard_bracketing(std::string_view w) {
  if (!is_lyndon(w)) throw std::invalid_argument("standard_bracketing: not a Lyndon word");
  if (w.size() == 1) return BracketTree::leaf(static_cast<Generator>(w[0]));
  // longest proper suffix that is Lyndon
  for (size_t i = 1; i < w.size(); ++i) {
    std::string_view suffix = w.substr(i);
    if (is_lyndon(suffix)) return BracketTree::pair(standard_bracketing(w.substr(0, i)), standard_bracketing(suffix));
  }
  throw std::logic_error("standard_bracketing: no Lyndon suffix found");
}

std::vector<BasisWord> lyndon_basis(int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("lyndon_basis: max_degree must be >= 1");
  std::vector<BasisWord> out;
  for (int len = 1; len <= max_degree; ++len) {
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      std::string w(len, 'X');
      for (int i = 0; i < len; ++i)
        if (mask & (1u << (len - 1 - i))) w[i] = 'Y';
      if (is_lyndon(w)) out.push_back(BasisWord{w, standard_bracketing(w)});
    }
  }
  // mask enumeration is already lexicographic within each length
  return out;
}

namespace {

void combo_add(WordCombo& acc, const std::string& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

void combo_add_scaled(WordCombo& acc, const WordCombo& src, const Rational& c) {
  for (const auto& [w, r] : src) combo_add(acc, w, r * c);
}

// Splits a Lyndon word at its standard factorization.
std::pair<std::string, std::string> standard_split(const std::string& w) {
  for (size_t i = 1; i < w.size(); ++i)
    if (is_lyndon(std::string_view(w).substr(i))) return {w.substr(0, i), w.substr(i)};
  throw std::logic_error("standard_split: no Lyndon suffix");
}

struct PairLess {
  bool operator()(const std::pair<std::string, std::string>& a,
                  const std::pair<std::string, std::string>& b) const {
    WordLess wl;
    if (a.first != b.first) return wl(a.first, b.first);
    return wl(a.second, b.second);
  }
};

class BracketRewriter {
 public:
  const WordCombo& run(const std::string& u, const std::string& v) { return rewrite(u, v); }

 private:
  // Cached results; nullopt marks a pair currently being rewritten, which
  // would mean the rewriting recursed into itself.
  std::map<std::pair<std::string, std::string>, std::optional<WordCombo>, PairLess> cache_;
  WordCombo empty_;

  const WordCombo& rewrite(const std::string& u, const std::string& v) {
    if (u == v) return empty_;
    if (v < u) {
      const WordCombo& flipped = rewrite(v, u);
      auto key = std::make_pair(u, v);
      auto it = cache_.find(key);
      if (it == cache_.end() || !it->second) {
        WordCombo neg;
        combo_add_scaled(neg, flipped, Rational(-1));
        it = cache_.insert_or_assign(key, std::move(neg)).first;
      }
      return *it->second;
    }
    // u < v lexicographically from here on; both Lyndon, so uv is Lyndon.
    auto key = std::make_pair(u, v);
    if (auto it = cache_.find(key); it != cache_.end()) {
      if (!it->second) throw std::logic_error("lyndon_bracket: rewriting cycle");
      return *it->second;
    }
    cache_.emplace(key, std::nullopt);

    WordCombo result;
    if (u.size() == 1) {
      result.emplace(u + v, Rational(1));
    } else {
      auto [u1, u2] = standard_split(u);
      if (!(u2 < v)) {
        // (u, v) is itself a standard factorization
        result.emplace(u + v, Rational(1));
      } else {
        // [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]
        for (const auto& [w, r] : WordCombo(rewrite(u2, v))) combo_add_scaled(result, rewrite_pair(u1, w), r);
        for (const auto& [w, r] : WordCombo(rewrite(u1, v))) combo_add_scaled(result, rewrite_pair(u2, w), -r);
      }
    }
    auto it = cache_.insert_or_assign(std::move(key), std::move(result)).first;
    return *it->second;
  }

  // rewrite() returning by reference invalidates under reentrancy; this copy
  // wrapper keeps the loop bodies above safe.
  WordCombo rewrite_pair(const std::string& a, const std::string& b) { return rewrite(a, b); }
};

WordCombo expand_tree(const BracketTree& t, BracketRewriter& rw) {
  if (t.is_leaf()) {
    WordCombo c;
    c.emplace(std::string(1, static_cast<char>(t.letter())), Rational(1));
    return c;
  }
  WordCombo l = expand_tree(t.left(), rw);
  WordCombo r = expand_tree(t.right(), rw);
  WordCombo out;
  for (const auto& [wl, cl] : l)
    for (const auto& [wr, cr] : r) combo_add_scaled(out, rw.run(wl, wr), cl * cr);
  return out;
}

}  // namespace

WordCombo lyndon_bracket(const std::string& u, const std::string& v) {
  if (!is_lyndon(u) || !is_lyndon(v)) throw std::invalid_argument("lyndon_bracket: arguments must be Lyndon words");
  BracketRewriter rw;
  return rw.run(u, v);
}

LieSeries::LieSeries(int arity, TermMap terms) : LieSeries(arity) {
  for (const auto& [w, c] : terms) add_term(w, c);
}

LieSeries LieSeries::generator(int arity, Generator g) {
  LieSeries s(arity);
  s.terms_.emplace(std::string(1, static_cast<char>(g)), NilPoly::unit(arity));
  return s;
}

NilPoly LieSeries::coefficient(const std::string& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? NilPoly(arity_) : it->second;
}

int LieSeries::min_coeff_degree() const {
  int best = kMaxArity + 1;
  for (const auto& [w, c] : terms_) best = std::min(best, c.min_degree());
  return best;
}

bool LieSeries::depends_on(int index) const {
  for (const auto& [w, c] : terms_)
    if (c.depends_on(index)) return true;
  return false;
}

void LieSeries::add_term(const std::string& word, const NilPoly& c) {
  if (c.arity() != arity_) throw std::invalid_argument("LieSeries: coefficient arity mismatch");
  if (c.is_zero()) return;
  if (!is_lyndon(word)) throw std::invalid_argument("LieSeries: word '" + word + "' is not a Lyndon word");
  if (static_cast<int>(word.size()) > arity_ + 1)
    throw std::logic_error("LieSeries: nonzero term of bracket degree " + std::to_string(word.size()) +
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

void LieSeries::check_same_arity(const LieSeries& a, const LieSeries& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("LieSeries: arity mismatch");
}

LieSeries operator+(const LieSeries& a, const LieSeries& b) {
  LieSeries::check_same_arity(a, b);
  LieSeries out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, c);
  return out;
}

LieSeries operator-(const LieSeries& a, const LieSeries& b) {
  LieSeries::check_same_arity(a, b);
  LieSeries out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, -c);
  return out;
}

LieSeries LieSeries::operator-() const {
  LieSeries out(arity_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

LieSeries LieSeries::scaled(const NilPoly& c) const {
  if (c.arity() != arity_) throw std::invalid_argument("LieSeries: scale arity mismatch");
  LieSeries out(arity_);
  for (const auto& [w, coeff] : terms_) out.add_term(w, coeff * c);
  return out;
}

LieSeries LieSeries::scaled(const Rational& c) const {
  LieSeries out(arity_);
  if (c.is_zero()) return out;
  for (const auto& [w, coeff] : terms_) out.terms_.emplace(w, coeff.scaled(c));
  return out;
}

std::pair<LieSeries, LieSeries> LieSeries::split_full(const Monomial& s) const {
  LieSeries covered(arity_), rest(arity_);
  for (const auto& [w, c] : terms_) {
    auto [cov, rem] = c.split_by_cover(s);
    if (!cov.is_zero()) covered.terms_.emplace(w, cov);
    if (!rem.is_zero()) rest.terms_.emplace(w, rem);
  }
  return {covered, rest};
}

LieSeries LieSeries::set_zero(int index) const {
  LieSeries out(arity_);
  for (const auto& [w, c] : terms_) {
    NilPoly nc = c.set_zero(index);
    if (!nc.is_zero()) out.terms_.emplace(w, nc);
  }
  return out;
}

LieSeries LieSeries::widened(int new_arity) const {
  LieSeries out(new_arity);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, c.widened(new_arity));
  return out;
}

LieSeries LieSeries::narrowed(int new_arity) const {
  LieSeries out(new_arity);
  for (const auto& [w, c] : terms_) out.add_term(w, c.narrowed(new_arity));
  return out;
}

LieSeries LieSeries::permuted(const std::vector<int>& sigma) const {
  LieSeries out(arity_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, c.permuted(sigma));
  return out;
}

LieSeries normalize(const BracketTree& t, const NilPoly& coeff) {
  LieSeries out(coeff.arity());
  if (coeff.is_zero()) return out;
  BracketRewriter rw;
  for (const auto& [w, r] : expand_tree(t, rw)) out.add_term(w, coeff.scaled(r));
  return out;
}

LieSeries bracket(const LieSeries& a, const LieSeries& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("bracket: arity mismatch");
  LieSeries out(a.arity());
  BracketRewriter rw;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      NilPoly c = ca * cb;
      if (c.is_zero()) continue;
      for (const auto& [w, r] : rw.run(wa, wb)) out.add_term(w, c.scaled(r));
    }
  return out;
}

}  // namespace bchcalc
