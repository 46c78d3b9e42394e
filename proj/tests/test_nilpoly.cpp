#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bchcalc/nilpoly.hpp"
#include "testutil.hpp"

using namespace bchcalc;
namespace tu = bchcalc::testutil;

namespace {

NilPoly d(int arity, int i) { return NilPoly::monomial(arity, Monomial::d(i), 1); }

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(6, 8) == Rational(3, 4));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(0, 5).is_zero());
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational::factorial(5) == Rational(120));
  CHECK(Rational::from_strings("-5", "6") == Rational(-5, 6));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_strings("1", "0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_strings("x", "1"), std::invalid_argument);
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
  CHECK((Rational(1, 2) / Rational(2)) == Rational(1, 4));
}

TEST_CASE("monomial order and operations") {
  Monomial u = Monomial::unit();
  CHECK(u.is_unit());
  CHECK(u.degree() == 0);
  CHECK(Monomial::d(3).indices() == std::vector<int>{3});
  CHECK(Monomial::full(3).indices() == std::vector<int>{1, 2, 3});
  CHECK(Monomial::from_indices({1, 4}).merged(Monomial::d(2)).indices() == std::vector<int>{1, 2, 4});
  CHECK(Monomial::from_indices({1, 2}).covers(Monomial::d(1)));
  CHECK_FALSE(Monomial::d(1).covers(Monomial::from_indices({1, 2})));
  CHECK(Monomial::d(1).disjoint(Monomial::d(2)));
  CHECK_FALSE(Monomial::from_indices({1, 3}).disjoint(Monomial::d(3)));
  CHECK_THROWS_AS(Monomial::from_indices({2, 2}), std::invalid_argument);

  // degree first, then lexicographic: {1,4} < {2,3}
  CHECK(Monomial::from_indices({1, 4}) < Monomial::from_indices({2, 3}));
  CHECK(Monomial::d(2) < Monomial::from_indices({1, 2}));
  CHECK(Monomial::from_indices({1, 2}) < Monomial::from_indices({1, 3}));
}

TEST_CASE("addition") {
  int n = 3;
  CHECK(d(n, 1) + d(n, 1) == NilPoly::monomial(n, Monomial::d(1), 2));
  tu::Rng rng(1);
  NilPoly p = tu::random_nilpoly(rng, n);
  CHECK(p + NilPoly(n) == p);
  CHECK((d(n, 1).scaled(Rational(1, 2)) + d(n, 1).scaled(Rational(-1, 2))).is_zero());
  CHECK_THROWS_AS(d(2, 1) + d(3, 1), std::invalid_argument);
}

TEST_CASE("multiplication kills repeated indices") {
  int n = 3;
  CHECK((d(n, 1) * d(n, 1)).is_zero());
  CHECK(d(n, 1) * d(n, 2) == NilPoly::monomial(n, Monomial::from_indices({1, 2}), 1));
  NilPoly s2 = d(2, 1) + d(2, 2);
  CHECK(s2 * s2 == NilPoly::monomial(2, Monomial::from_indices({1, 2}), 2));
}

TEST_CASE("powers of the sum of infinitesimals") {
  CHECK(NilPoly::sum_d(1) == d(1, 1));
  CHECK(NilPoly::sum_d(3) == d(3, 1) + d(3, 2) + d(3, 3));
  CHECK(NilPoly::sum_d(3).pow(3) == NilPoly::monomial(3, Monomial::full(3), 6));
  CHECK(NilPoly::sum_d(3).pow(3).scaled(Rational(1, 12)) ==
        NilPoly::monomial(3, Monomial::full(3), Rational(1, 2)));
  CHECK(NilPoly::sum_d(2).pow(3).is_zero());
  CHECK(NilPoly::sum_d(4).pow(4) == NilPoly::monomial(4, Monomial::full(4), 24));
  CHECK(NilPoly::sum_d(3).pow(0) == NilPoly::unit(3));
  CHECK_THROWS_AS(NilPoly::sum_d(0), std::invalid_argument);
}

TEST_CASE("split by cover") {
  int n = 3;
  NilPoly p = d(n, 1).scaled(Rational(1, 2)) +
              NilPoly::monomial(n, Monomial::full(3), Rational(1, 4));
  auto [covered, rest] = p.split_by_cover(Monomial::full(3));
  CHECK(covered == NilPoly::monomial(n, Monomial::full(3), Rational(1, 4)));
  CHECK(rest == d(n, 1).scaled(Rational(1, 2)));

  auto [all, nothing] = p.split_by_cover(Monomial::unit());
  CHECK(all == p);
  CHECK(nothing.is_zero());

  auto [zc, zr] = NilPoly(n).split_by_cover(Monomial::d(2));
  CHECK(zc.is_zero());
  CHECK(zr.is_zero());
}

TEST_CASE("set zero") {
  int n = 2;
  NilPoly p = d(n, 1) + NilPoly::monomial(n, Monomial::from_indices({1, 2}), 1);
  CHECK(p.set_zero(2) == d(n, 1));
  CHECK(p.set_zero(1).is_zero());
  CHECK(d(n, 1).set_zero(2) == d(n, 1));
  CHECK_THROWS_AS(p.set_zero(3), std::invalid_argument);
  CHECK_THROWS_AS(p.set_zero(0), std::invalid_argument);
}

TEST_CASE("widen narrow permute") {
  NilPoly p = d(2, 1) + NilPoly::monomial(2, Monomial::from_indices({1, 2}), 3);
  NilPoly w = p.widened(4);
  CHECK(w.arity() == 4);
  CHECK(w.narrowed(2) == p);
  CHECK_THROWS_AS(w.narrowed(1), std::invalid_argument);
  CHECK(p.permuted({2, 1}) == d(2, 2) + NilPoly::monomial(2, Monomial::from_indices({1, 2}), 3));
  CHECK_THROWS_AS(p.permuted({1, 1}), std::invalid_argument);
}

TEST_CASE("ring axioms on randomized inputs") {
  tu::Rng rng(20240817);
  const int cases = 1000;
  for (int i = 0; i < cases; ++i) {
    int arity = 1 + static_cast<int>(rng() % 5);
    NilPoly a = tu::random_nilpoly(rng, arity);
    NilPoly b = tu::random_nilpoly(rng, arity);
    NilPoly c = tu::random_nilpoly(rng, arity);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * NilPoly::unit(arity) == a);

    // d_i p * d_i q = 0
    int idx = 1 + static_cast<int>(rng() % arity);
    NilPoly di = d(arity, idx);
    CHECK(((di * a) * (di * b)).is_zero());

    // split parts sum to the input with disjoint supports
    Monomial s = tu::random_monomial(rng, arity);
    auto [covered, rest] = a.split_by_cover(s);
    CHECK(covered + rest == a);
    for (const auto& [m, r] : covered.terms()) CHECK(m.covers(s));
    for (const auto& [m, r] : rest.terms()) CHECK_FALSE(m.covers(s));
  }
}

TEST_CASE("power of sum_d counts k-subsets") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      NilPoly expect(n);
      if (k <= n) {
        // k! * sum of all k-subsets
        std::vector<int> subset(k);
        // iterate over k-subsets of 1..n
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i + 1;
        while (true) {
          expect = expect + NilPoly::monomial(n, Monomial::from_indices(idx), Rational::factorial(k));
          if (k == 0) break;
          int pos = k - 1;
          while (pos >= 0 && idx[pos] == n - (k - 1 - pos)) --pos;
          if (pos < 0) break;
          ++idx[pos];
          for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
      }
      CHECK(NilPoly::sum_d(n).pow(k) == expect);
    }
  }
}
