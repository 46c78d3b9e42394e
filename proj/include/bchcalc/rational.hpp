#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace bchcalc {

// Arbitrary-precision rational scalar, always in lowest terms with a
// positive denominator; zero is canonically 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design (r + 1, 2 * r, ...)
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  // Decimal strings, e.g. ("-5", "6"). Denominator must be positive.
  static Rational from_strings(const std::string& num, const std::string& den) {
    mpz_class n, d;
    if (n.set_str(num, 10) != 0) throw std::invalid_argument("Rational: bad numerator '" + num + "'");
    if (d.set_str(den, 10) != 0) throw std::invalid_argument("Rational: bad denominator '" + den + "'");
    if (d <= 0) throw std::invalid_argument("Rational: denominator must be positive");
    mpq_class q(n);
    q /= mpq_class(d);
    return Rational(std::move(q));
  }

  static Rational factorial(int k) {
    if (k < 0) throw std::invalid_argument("Rational: factorial of negative");
    mpz_class f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return Rational(mpq_class(f));
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  // "3", "-1/2", "0"
  std::string str() const {
    std::string s = numerator_str();
    if (!is_integer()) s += "/" + denominator_str();
    return s;
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace bchcalc
