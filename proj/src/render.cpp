#include "bchcalc/render.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bchcalc {

namespace {

std::string rational_text(const Rational& r) { return r.str(); }

std::string rational_latex(const Rational& r) {
  if (r.is_integer()) return r.numerator_str();
  std::string num = r.numerator_str();
  std::string sign;
  if (!num.empty() && num[0] == '-') {
    sign = "-";
    num = num.substr(1);
  }
  return sign + "\\frac{" + num + "}{" + r.denominator_str() + "}";
}

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (int i : m.indices()) {
    if (!out.empty()) out += " ";
    out += "d" + std::to_string(i);
  }
  return out;
}

std::string monomial_latex(const Monomial& m) {
  std::string out;
  for (int i : m.indices()) {
    if (!out.empty()) out += " ";
    out += "d_{" + std::to_string(i) + "}";
  }
  return out;
}

// "(1/2 d1 d2 - d3)" / "\left( \frac{1}{2} d_{1} d_{2} - d_{3} \right)"
std::string coefficient_body(const NilPoly& p, bool latex) {
  std::string out;
  bool first = true;
  for (const auto& [m, r] : p.terms()) {
    Rational mag = r.sign() < 0 ? -r : r;
    if (first) {
      if (r.sign() < 0) out += "-";
      first = false;
    } else {
      out += r.sign() < 0 ? " - " : " + ";
    }
    std::string mono = latex ? monomial_latex(m) : monomial_text(m);
    if (mono.empty()) {
      out += latex ? rational_latex(mag) : rational_text(mag);
    } else {
      if (!mag.is_one()) out += (latex ? rational_latex(mag) : rational_text(mag)) + " ";
      out += mono;
    }
  }
  return out;
}

std::string word_form(const std::string& word, bool latex) {
  BracketTree t = standard_bracketing(word);
  if (!latex) return t.bracket_string();
  std::string plain = t.bracket_string();
  std::string out;
  for (char ch : plain) {
    switch (ch) {
      case '[': out += "\\left[ "; break;
      case ']': out += " \\right]"; break;
      case ',': out += ", "; break;
      default: out += ch; break;
    }
  }
  return out;
}

std::string series_infix(const LieSeries& s, bool latex) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [word, coeff] : s.terms()) {
    if (!out.empty()) out += " + ";
    if (latex)
      out += "\\left( " + coefficient_body(coeff, true) + " \\right) " + word_form(word, true);
    else
      out += "(" + coefficient_body(coeff, false) + ") " + word_form(word, false);
  }
  return out;
}

nlohmann::json series_json(const LieSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [word, coeff] : s.terms()) {
    nlohmann::json monos = nlohmann::json::array();
    for (const auto& [m, r] : coeff.terms()) {
      monos.push_back({{"monomial", m.indices()},
                       {"num", r.numerator_str()},
                       {"den", r.denominator_str()}});
    }
    terms.push_back({{"word", word},
                     {"bracketing", standard_bracketing(word).bracket_string()},
                     {"coeff", monos}});
  }
  return nlohmann::json{{"arity", s.arity()}, {"terms", terms}};
}

std::string sum_d_text(int arity, bool latex) {
  std::string out;
  for (int i = 1; i <= arity; ++i) {
    if (i > 1) out += " + ";
    out += latex ? "d_{" + std::to_string(i) + "}" : "d" + std::to_string(i);
  }
  return out;
}

}  // namespace

RenderMode render_mode_from_string(const std::string& name) {
  if (name == "text") return RenderMode::Text;
  if (name == "latex") return RenderMode::Latex;
  if (name == "json") return RenderMode::Json;
  throw std::invalid_argument("unknown format '" + name + "' (expected text|latex|json)");
}

std::string format(const LieSeries& s, RenderMode mode) {
  switch (mode) {
    case RenderMode::Text: return series_infix(s, false);
    case RenderMode::Latex: return series_infix(s, true);
    case RenderMode::Json: return series_json(s).dump(2);
  }
  throw std::logic_error("format: bad mode");
}

std::string format_symmetric(const std::vector<SymmetricPart>& parts, int arity, RenderMode mode) {
  std::ostringstream out;
  if (mode == RenderMode::Json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : parts) j.push_back({{"degree", p.degree}, {"series", series_json(p.part)}});
    return nlohmann::json{{"arity", arity}, {"blocks", j}}.dump(2);
  }
  const bool latex = mode == RenderMode::Latex;
  for (const auto& p : parts) {
    if (latex)
      out << "\\left( " << sum_d_text(arity, true) << " \\right)^{" << p.degree << "} \\cdot \\left( "
          << series_infix(p.part, true) << " \\right)\n";
    else
      out << "(" << sum_d_text(arity, false) << ")^" << p.degree << " * (" << series_infix(p.part, false)
          << ")\n";
  }
  return out.str();
}

std::string verify_report_json(const VerifyReport& report) {
  nlohmann::json mism = nlohmann::json::array();
  for (const auto& m : report.mismatches) {
    mism.push_back({{"word", m.word},
                    {"monomial", m.monomial.indices()},
                    {"product_side", m.product_side.str()},
                    {"exponent_side", m.exponent_side.str()}});
  }
  return nlohmann::json{{"ok", report.ok}, {"mismatches", mism}}.dump(2);
}

}  // namespace bchcalc
