#include "bchcalc/logderiv.hpp"

#include <stdexcept>
#include <string>

namespace bchcalc {

namespace {

void check_arities(const LieSeries& z, const LieSeries& v) {
  if (z.arity() != v.arity()) throw std::invalid_argument("logderiv: arity mismatch");
}

// The stand-in for "(ad z)^{n+1} vanishes": every coefficient monomial of z
// has degree >= 1, so each application of ad z raises the minimal degree.
void check_nilpotent(const LieSeries& z) {
  for (const auto& [w, c] : z.terms())
    if (c.has_constant_term())
      throw std::invalid_argument("logderiv: argument has a degree-0 coefficient on '" + w +
                                  "'; ad is not nilpotent");
}

LieSeries delta_series(const LieSeries& z, const LieSeries& v, bool alternating) {
  check_arities(z, v);
  check_nilpotent(z);
  const int arity = z.arity();
  LieSeries acc(arity);
  LieSeries term = v;
  for (int p = 0; !term.is_zero(); ++p) {
    if (p > arity + 1)
      throw std::logic_error("logderiv: ad-power series still nonzero at p = " + std::to_string(p));
    Rational c = Rational(1) / Rational::factorial(p + 1);
    if (alternating && (p % 2 == 1)) c = -c;
    acc = acc + term.scaled(c);
    term = bracket(z, term);
  }
  return acc;
}

}  // namespace

LieSeries ad_pow_apply(const LieSeries& z, const LieSeries& v, int p) {
  check_arities(z, v);
  if (p < 0) throw std::invalid_argument("ad_pow_apply: negative power");
  LieSeries out = v;
  for (int i = 0; i < p && !out.is_zero(); ++i) out = bracket(z, out);
  return out;
}

LieSeries delta_left(const LieSeries& z, const LieSeries& v) { return delta_series(z, v, true); }

LieSeries delta_right(const LieSeries& z, const LieSeries& v) { return delta_series(z, v, false); }

}  // namespace bchcalc
