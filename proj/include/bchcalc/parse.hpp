#pragma once

#include <stdexcept>
#include <string>

#include "bchcalc/freelie.hpp"

namespace bchcalc {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

// Evaluates an expression over rationals, d-variables, the generators X and Y,
// +, -, juxtaposition products, integer powers of parenthesized scalars and
// bracket pairs [a,b], into the Lyndon-basis normal form. Also accepts the
// artifact's LaTeX rendering (\frac, \left[, d_{i}, ^{k}) and, when the text
// starts with '{', the JSON serialization.
LieSeries parse_lie_expr(const std::string& text, int arity);

}  // namespace bchcalc
