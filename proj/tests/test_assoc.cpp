#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bchcalc/assoc.hpp"
#include "bchcalc/derive.hpp"
#include "testutil.hpp"

using namespace bchcalc;
namespace tu = bchcalc::testutil;

namespace {

AssocSeries dword(int arity, int index, const std::string& w) {
  return AssocSeries::term(arity, w, NilPoly::monomial(arity, Monomial::d(index), 1));
}

}  // namespace

TEST_CASE("concatenation product") {
  int n = 2;
  CHECK(as_mul(dword(n, 1, "X"), dword(n, 2, "Y")) ==
        AssocSeries::term(n, "XY", NilPoly::monomial(n, Monomial::from_indices({1, 2}), 1)));
  CHECK(as_mul(dword(n, 1, "X"), dword(n, 1, "Y")).is_zero());
  AssocSeries a = dword(n, 1, "XY") + dword(n, 2, "");
  CHECK(as_mul(AssocSeries::unit(n), a) == a);
  CHECK(as_mul(a, AssocSeries::unit(n)) == a);
  CHECK_THROWS_AS(as_mul(AssocSeries::unit(2), AssocSeries::unit(3)), std::invalid_argument);
}

TEST_CASE("as_mul associativity randomized") {
  tu::Rng rng(31337);
  for (int i = 0; i < 1000; ++i) {
    int arity = 3;
    auto random_assoc = [&](int max_len) {
      AssocSeries s(arity);
      for (int t = 0; t < 3; ++t) {
        int len = static_cast<int>(rng() % (max_len + 1));
        std::string w;
        for (int j = 0; j < len; ++j) w += (rng() % 2) ? 'Y' : 'X';
        Monomial m = tu::random_monomial(rng, arity);
        if (m.degree() < len) continue;  // respect the word-length cap under products
        s.add_term(w, NilPoly::monomial(arity, m, tu::random_rational(rng)));
      }
      return s;
    };
    AssocSeries a = random_assoc(1), b = random_assoc(1), c = random_assoc(2);
    CHECK(as_mul(as_mul(a, b), c) == as_mul(a, as_mul(b, c)));
  }
}

TEST_CASE("embed expands brackets to commutators") {
  int n = 3;
  LieSeries xy(n);
  xy.add_term("XY", NilPoly::unit(n));
  AssocSeries e = embed(xy);
  CHECK(e.coefficient("XY") == NilPoly::unit(n));
  CHECK(e.coefficient("YX") == NilPoly::constant(n, -1));

  CHECK(embed(LieSeries::generator(n, Generator::X)) == AssocSeries::term(n, "X", NilPoly::unit(n)));

  LieSeries xxy(n);
  xxy.add_term("XXY", NilPoly::unit(n));
  AssocSeries e2 = embed(xxy);
  CHECK(e2.coefficient("XXY") == NilPoly::unit(n));
  CHECK(e2.coefficient("XYX") == NilPoly::constant(n, -2));
  CHECK(e2.coefficient("YXX") == NilPoly::unit(n));
}

TEST_CASE("embed is a Lie homomorphism") {
  tu::Rng rng(2718);
  for (int i = 0; i < 1000; ++i) {
    int arity = 4;
    LieSeries a = tu::random_graded_series(rng, arity, 2);
    LieSeries b = tu::random_graded_series(rng, arity, 2);
    AssocSeries ea = embed(a), eb = embed(b);
    CHECK(embed(bracket(a, b)) == as_mul(ea, eb) - as_mul(eb, ea));
  }
}

TEST_CASE("exp and log") {
  int n = 2;
  CHECK(as_exp(AssocSeries(n)) == AssocSeries::unit(n));

  AssocSeries d1x = dword(n, 1, "X");
  AssocSeries e = as_exp(d1x);
  CHECK(e == AssocSeries::unit(n) + d1x);

  CHECK(as_log(AssocSeries::unit(n)).is_zero());

  AssocSeries a = dword(n, 1, "X") + dword(n, 2, "Y");
  CHECK(as_log(as_exp(a)) == a);

  CHECK_THROWS_AS(as_exp(AssocSeries::term(n, "X", NilPoly::unit(n))), std::invalid_argument);
  CHECK_THROWS_AS(as_log(AssocSeries(n)), std::invalid_argument);
}

TEST_CASE("exp log roundtrip randomized") {
  tu::Rng rng(1618);
  for (int i = 0; i < 500; ++i) {
    int arity = 3 + static_cast<int>(rng() % 2);
    AssocSeries a(arity);
    for (int t = 0; t < 4; ++t) {
      int len = 1 + static_cast<int>(rng() % 2);
      std::string w;
      for (int j = 0; j < len; ++j) w += (rng() % 2) ? 'Y' : 'X';
      Monomial m = tu::random_monomial(rng, arity);
      if (m.degree() < std::max(len, 1)) continue;
      a.add_term(w, NilPoly::monomial(arity, m, tu::random_rational(rng)));
    }
    CHECK(as_log(as_exp(a)) == a);
    AssocSeries u = AssocSeries::unit(arity) + a;
    CHECK(as_exp(as_log(u)) == u);
  }
}

TEST_CASE("log of the exponential product recovers the derived exponent") {
  for (int n = 1; n <= 4; ++n) {
    NilPoly s = NilPoly::sum_d(n);
    AssocSeries ex = as_exp(embed(LieSeries::generator(n, Generator::X).scaled(s)));
    AssocSeries ey = as_exp(embed(LieSeries::generator(n, Generator::Y).scaled(s)));
    CHECK(as_log(as_mul(ex, ey)) == embed(derive_bch(n).exponent));
  }
}

TEST_CASE("verify_theorem") {
  LieSeries z1(1);
  z1.add_term("X", NilPoly::sum_d(1));
  z1.add_term("Y", NilPoly::sum_d(1));
  CHECK(verify_theorem(1, z1).ok);

  // wrong exponent yields a nonempty report
  LieSeries bad = z1;
  bad.add_term("X", NilPoly::sum_d(1));  // doubles the X coefficient
  VerifyReport r = verify_theorem(1, bad);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.mismatches.empty());
}

TEST_CASE("word length cap") {
  AssocSeries s(2);
  CHECK_THROWS_AS(s.add_term("XXXX", NilPoly::unit(2)), std::logic_error);
  CHECK_NOTHROW(s.add_term("XXX", NilPoly::unit(2)));
}

TEST_CASE("dynkin projection") {
  int n = 3;
  AssocSeries h(n);
  h.add_term("XY", NilPoly::unit(n));
  h.add_term("YX", NilPoly::constant(n, -1));
  LieSeries p = dynkin_project(h, 2);
  LieSeries::TermMap expect;
  expect.emplace("XY", NilPoly::unit(n));
  CHECK(p == LieSeries(n, expect));

  LieSeries xxy(n);
  xxy.add_term("XXY", NilPoly::unit(n));
  CHECK(dynkin_project(embed(xxy), 3) == xxy);

  CHECK_THROWS_AS(dynkin_project(h, 3), std::invalid_argument);
}

TEST_CASE("dynkin is the identity on homogeneous Lie elements") {
  tu::Rng rng(524287);
  auto basis = lyndon_basis(5);
  for (int i = 0; i < 300; ++i) {
    int arity = 5;
    int k = 1 + static_cast<int>(rng() % 5);
    LieSeries elt(arity);
    for (const auto& bw : basis) {
      if (static_cast<int>(bw.word.size()) != k) continue;
      if (rng() % 2) elt.add_term(bw.word, NilPoly::constant(arity, tu::random_rational(rng)));
    }
    if (elt.is_zero()) continue;
    CHECK(dynkin_project(embed(elt), k) == elt);
  }
}
