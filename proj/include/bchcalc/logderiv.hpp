#pragma once

#include "bchcalc/freelie.hpp"

namespace bchcalc {

// (ad z)^p v, i.e. p-fold left bracketing by z; p = 0 returns v.
LieSeries ad_pow_apply(const LieSeries& z, const LieSeries& v, int p);

// Truncated series for the left logarithmic derivative of exp at z, applied
// to v: sum over p >= 0 of (-1)^p / (p+1)! (ad z)^p v. Requires every term of
// z to carry a coefficient monomial of degree >= 1, which makes ad z
// nilpotent; the sum stops as soon as a power vanishes.
LieSeries delta_left(const LieSeries& z, const LieSeries& v);

// Mirror series with coefficients +1/(p+1)!.
LieSeries delta_right(const LieSeries& z, const LieSeries& v);

}  // namespace bchcalc
