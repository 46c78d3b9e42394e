#include "bchcalc/parse.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include <json.hpp>

namespace bchcalc {

namespace {

enum class Tok { Int, DVar, Gen, LBracket, RBracket, LParen, RParen, Comma, Plus, Minus, Slash, Caret, End };

struct Token {
  Tok kind;
  size_t pos;
  std::string text;  // digits for Int / DVar index, "X"/"Y" for Gen
};

// A parsed value is either a pure scalar or a pure Lie element.
struct Value {
  bool scalar;
  NilPoly np;
  LieSeries ls;

  static Value make_scalar(NilPoly p) { return Value{true, std::move(p), LieSeries(1)}; }
  static Value make_lie(LieSeries s) { return Value{false, NilPoly(1), std::move(s)}; }
};

class Parser {
 public:
  Parser(const std::string& src, int arity) : src_(src), arity_(arity) { advance(); }

  LieSeries run() {
    Value v = parse_expr();
    expect_end();
    if (!v.scalar) return v.ls;
    if (v.np.is_zero()) return LieSeries(arity_);
    throw ParseError("expression is scalar-only; expected a Lie element", 0);
  }

 private:
  // --- token plumbing; a \frac{p}{q} surfaces as the three tokens p / q ---
  void advance() { current_ = lex_one(); }

  Token lex_one() {
    if (frac_pending_) {
      frac_pending_ = false;
      return frac_den_;
    }
    if (slash_pending_) {
      slash_pending_ = false;
      frac_pending_ = true;
      return Token{Tok::Slash, frac_den_.pos, ""};
    }
    return raw_lexer_take();
  }

  Token raw_lexer_take();

  Token take() {
    Token t = current_;
    advance();
    return t;
  }
  bool at(Tok k) const { return current_.kind == k; }

  void expect_end() {
    if (!at(Tok::End)) throw ParseError("unexpected trailing input", current_.pos);
  }

  static long small_int(const Token& t, const char* what) {
    try {
      return std::stol(t.text);
    } catch (const std::out_of_range&) {
      throw ParseError(std::string(what) + " '" + t.text + "' is too large", t.pos);
    }
  }

  // --- grammar ---
  Value parse_expr() {
    bool negate = false;
    if (at(Tok::Minus)) {
      take();
      negate = true;
    } else if (at(Tok::Plus)) {
      take();
    }
    Value acc = parse_term();
    if (negate) acc = negated(acc);
    while (at(Tok::Plus) || at(Tok::Minus)) {
      bool minus = take().kind == Tok::Minus;
      Value rhs = parse_term();
      if (minus) rhs = negated(rhs);
      acc = add(acc, rhs);
    }
    return acc;
  }

  Value parse_term() {
    Value acc = parse_factor();
    while (starts_factor()) acc = multiply(acc, parse_factor());
    return acc;
  }

  bool starts_factor() const {
    switch (current_.kind) {
      case Tok::Int:
      case Tok::DVar:
      case Tok::Gen:
      case Tok::LBracket:
      case Tok::LParen:
        return true;
      default:
        return false;
    }
  }

  Value parse_factor() {
    Token t = take();
    switch (t.kind) {
      case Tok::Int: {
        Rational r = Rational::from_strings(t.text, "1");
        if (at(Tok::Slash)) {
          take();
          if (!at(Tok::Int)) throw ParseError("expected an integer denominator", current_.pos);
          Token d = take();
          if (Rational::from_strings(d.text, "1").is_zero())
            throw ParseError("zero denominator", d.pos);
          r = Rational::from_strings(t.text, d.text);
        }
        return Value::make_scalar(NilPoly::constant(arity_, r));
      }
      case Tok::DVar: {
        long idx = small_int(t, "index");
        if (idx < 1 || idx > arity_)
          throw ParseError("index d" + t.text + " out of range for arity " + std::to_string(arity_), t.pos);
        return Value::make_scalar(NilPoly::monomial(arity_, Monomial::d(static_cast<int>(idx)), 1));
      }
      case Tok::Gen:
        return Value::make_lie(
            LieSeries::generator(arity_, t.text == "X" ? Generator::X : Generator::Y));
      case Tok::LBracket: {
        Value a = parse_expr();
        if (!at(Tok::Comma)) throw ParseError("expected ',' in bracket", current_.pos);
        take();
        Value b = parse_expr();
        if (!at(Tok::RBracket)) throw ParseError("expected ']'", current_.pos);
        take();
        if (a.scalar || b.scalar) throw ParseError("bracket applied to a scalar-only operand", t.pos);
        return Value::make_lie(bracket(a.ls, b.ls));
      }
      case Tok::LParen: {
        Value v = parse_expr();
        if (!at(Tok::RParen)) throw ParseError("expected ')'", current_.pos);
        take();
        if (at(Tok::Caret)) {
          Token caret = take();
          if (!at(Tok::Int)) throw ParseError("expected an integer exponent", current_.pos);
          Token k = take();
          long e = small_int(k, "exponent");
          if (e > 256) throw ParseError("exponent too large", k.pos);
          if (!v.scalar) throw ParseError("power applied to a Lie element", caret.pos);
          v.np = v.np.pow(static_cast<int>(e));
        }
        return v;
      }
      default:
        throw ParseError("expected a factor", t.pos);
    }
  }

  // --- value algebra ---
  static Value negated(Value v) {
    if (v.scalar)
      v.np = -v.np;
    else
      v.ls = -v.ls;
    return v;
  }

  Value add(const Value& a, const Value& b) {
    if (a.scalar != b.scalar) {
      // adding 0 to either side is fine; anything else mixes sorts
      if (a.scalar && a.np.is_zero()) return b;
      if (b.scalar && b.np.is_zero()) return a;
      if (!a.scalar && a.ls.is_zero()) return b;
      if (!b.scalar && b.ls.is_zero()) return a;
      throw ParseError("cannot add a scalar and a Lie element", current_.pos);
    }
    if (a.scalar) return Value::make_scalar(a.np + b.np);
    return Value::make_lie(a.ls + b.ls);
  }

  Value multiply(const Value& a, const Value& b) {
    if (a.scalar && b.scalar) return Value::make_scalar(a.np * b.np);
    if (a.scalar) return Value::make_lie(b.ls.scaled(a.np));
    if (b.scalar) return Value::make_lie(a.ls.scaled(b.np));
    throw ParseError("cannot multiply two Lie elements; use a bracket", current_.pos);
  }

  const std::string& src_;
  int arity_;
  Token current_{Tok::End, 0, ""};
  bool slash_pending_ = false;
  bool frac_pending_ = false;
  Token frac_den_{Tok::Int, 0, ""};

  // raw lexer cursor
  size_t i_ = 0;
};

// Out-of-class so the token-level \frac splicing can live near the lexing.
Token Parser::raw_lexer_take() {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}'; };
  while (i_ < src_.size() && is_space(src_[i_])) ++i_;
  size_t pos = i_;
  if (i_ >= src_.size()) return {Tok::End, pos, ""};
  char ch = src_[i_];
  auto read_digits = [&]() {
    size_t start = i_;
    while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
    return src_.substr(start, i_ - start);
  };
  if (std::isdigit(static_cast<unsigned char>(ch))) return {Tok::Int, pos, read_digits()};
  if (ch == 'd') {
    ++i_;
    if (i_ < src_.size() && src_[i_] == '_') ++i_;
    while (i_ < src_.size() && is_space(src_[i_])) ++i_;
    if (i_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[i_])))
      throw ParseError("expected an index after 'd'", pos);
    return {Tok::DVar, pos, read_digits()};
  }
  if (ch == 'X' || ch == 'Y') {
    ++i_;
    return {Tok::Gen, pos, std::string(1, ch)};
  }
  if (ch == '\\') {
    ++i_;
    size_t start = i_;
    while (i_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[i_]))) ++i_;
    std::string name = src_.substr(start, i_ - start);
    if (name == "left" || name == "right" || name == "cdot") return raw_lexer_take();
    if (name == "frac") {
      auto brace_digits = [&]() -> std::string {
        while (i_ < src_.size() && is_space(src_[i_]) && src_[i_] != '{') ++i_;
        if (i_ >= src_.size() || src_[i_] != '{') throw ParseError("expected '{' in \\frac", pos);
        ++i_;
        std::string digits = read_digits();
        if (digits.empty()) throw ParseError("expected digits in \\frac", pos);
        if (i_ >= src_.size() || src_[i_] != '}') throw ParseError("expected '}' in \\frac", pos);
        ++i_;
        return digits;
      };
      std::string num = brace_digits();
      std::string den = brace_digits();
      frac_den_ = Token{Tok::Int, pos, den};
      slash_pending_ = true;
      return {Tok::Int, pos, num};
    }
    throw ParseError("unknown command '\\" + name + "'", pos);
  }
  ++i_;
  switch (ch) {
    case '[': return {Tok::LBracket, pos, ""};
    case ']': return {Tok::RBracket, pos, ""};
    case '(': return {Tok::LParen, pos, ""};
    case ')': return {Tok::RParen, pos, ""};
    case ',': return {Tok::Comma, pos, ""};
    case '+': return {Tok::Plus, pos, ""};
    case '-': return {Tok::Minus, pos, ""};
    case '/': return {Tok::Slash, pos, ""};
    case '^': return {Tok::Caret, pos, ""};
    default: throw ParseError(std::string("unexpected character '") + ch + "'", pos);
  }
}

LieSeries parse_json_series(const std::string& text, int arity) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), static_cast<size_t>(e.byte));
  }
  if (!j.is_object() || !j.contains("arity") || !j.contains("terms"))
    throw ParseError("JSON series must have 'arity' and 'terms'", 0);
  try {
    if (j["arity"].get<int>() != arity)
      throw ParseError("JSON arity " + j["arity"].dump() + " does not match requested arity " +
                           std::to_string(arity),
                       0);
    LieSeries out(arity);
    for (const auto& term : j["terms"]) {
      std::string word = term.at("word").get<std::string>();
      if (!is_lyndon(word)) throw ParseError("JSON term word '" + word + "' is not a Lyndon word", 0);
      if (term.contains("bracketing") &&
          term["bracketing"].get<std::string>() != standard_bracketing(word).bracket_string())
        throw ParseError("JSON bracketing does not match the standard factorization of '" + word + "'", 0);
      NilPoly::TermMap coeff;
      for (const auto& mono : term.at("coeff")) {
        std::vector<int> indices;
        for (const auto& ix : mono.at("monomial")) indices.push_back(ix.get<int>());
        Rational r =
            Rational::from_strings(mono.at("num").get<std::string>(), mono.at("den").get<std::string>());
        if (!coeff.emplace(Monomial::from_indices(indices), r).second)
          throw ParseError("JSON coefficient lists a monomial twice", 0);
      }
      out.add_term(word, NilPoly(arity, std::move(coeff)));
    }
    return out;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON series: ") + e.what(), 0);
  }
}

}  // namespace

LieSeries parse_lie_expr(const std::string& text, int arity) {
  if (arity < 1 || arity > kMaxArity) throw std::invalid_argument("parse_lie_expr: arity out of range");
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json_series(text, arity);
  return Parser(text, arity).run();
}

}  // namespace bchcalc
