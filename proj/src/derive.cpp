#include "bchcalc/derive.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "bchcalc/logderiv.hpp"

namespace bchcalc {

namespace {

// Shared body of the right and left phases. delta is delta_left with the
// generator Y for the right phase, delta_right with X for the left one.
// Everything appended to the residual is taken mod d_n: the residual only
// ever occurs multiplied by d_n, and this matches the recorded intermediates.
std::vector<PhaseStep> run_phase(LieSeries& z, LieSeries& residual, int n, Generator gen,
                                 LieSeries (*delta)(const LieSeries&, const LieSeries&)) {
  const Monomial below_n = Monomial::full(n - 1);
  const NilPoly dn = NilPoly::monomial(n, Monomial::d(n), 1);
  std::vector<PhaseStep> steps;

  LieSeries g = LieSeries::generator(n, gen);
  LieSeries first = (delta(z, g) - g).set_zero(n);
  steps.push_back(PhaseStep{g, first});
  z = z + g.scaled(dn);
  residual = first;

  int prev_min_degree = -1;
  while (true) {
    LieSeries c = -residual.split_full(below_n).second;
    if (c.is_zero()) break;
    int min_degree = c.min_coeff_degree();
    if (min_degree <= prev_min_degree)
      throw std::logic_error("derive_step: correction degree did not increase (" +
                             std::to_string(min_degree) + " after " + std::to_string(prev_min_degree) + ")");
    prev_min_degree = min_degree;
    LieSeries w = delta(z, c).set_zero(n);
    steps.push_back(PhaseStep{c, w});
    z = z + c.scaled(dn);
    residual = residual + w;
  }
  return steps;
}

}  // namespace

BchResult derive_step(const LieSeries& z_prev, int n) {
  if (n < 2) throw std::invalid_argument("derive_step: arity must be >= 2");
  if (z_prev.arity() != n) throw std::invalid_argument("derive_step: exponent must be widened to the target arity");
  if (z_prev.depends_on(n)) throw std::invalid_argument("derive_step: widened exponent must not use d_n");

  const NilPoly dn = NilPoly::monomial(n, Monomial::d(n), 1);
  LieSeries z = z_prev;

  LieSeries right_residual(n), left_residual(n);
  BchResult out;
  out.trace.arity = n;
  out.trace.right_steps = run_phase(z, right_residual, n, Generator::Y, &delta_left);
  out.trace.left_steps = run_phase(z, left_residual, n, Generator::X, &delta_right);

  // Both leftovers now cover {1..n-1}, so after the d_n scaling they are
  // central and the three exponentials merge into one.
  const Monomial below_n = Monomial::full(n - 1);
  if (!right_residual.split_full(below_n).second.is_zero() ||
      !left_residual.split_full(below_n).second.is_zero())
    throw std::logic_error("derive_step: leftover residual has a non-full coefficient");

  out.trace.final_central = -(left_residual + right_residual).scaled(dn);
  out.exponent = z + out.trace.final_central;
  return out;
}

BchResult derive_bch(int n, int arity_limit) {
  if (n < 1) throw std::invalid_argument("derive_bch: arity must be >= 1");
  if (n > arity_limit) throw std::invalid_argument("derive_bch: arity exceeds the configured limit");

  BchResult result;
  LieSeries z1(1);
  z1.add_term("X", NilPoly::sum_d(1));
  z1.add_term("Y", NilPoly::sum_d(1));
  result.exponent = z1;
  result.trace.arity = 1;
  result.trace.final_central = LieSeries(1);

  for (int m = 2; m <= n; ++m) result = derive_step(result.exponent.widened(m), m);
  return result;
}

std::vector<SymmetricPart> extract_symmetric_form(const BchResult& z) {
  const LieSeries& exponent = z.exponent;
  const int n = exponent.arity();

  // Adjacent transpositions generate the whole symmetric group.
  for (int i = 1; i < n; ++i) {
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    std::swap(sigma[i - 1], sigma[i]);
    if (exponent.permuted(sigma) != exponent)
      throw std::invalid_argument("extract_symmetric_form: exponent is not symmetric in the d-indices");
  }

  std::vector<SymmetricPart> parts;
  LieSeries reconstruction(n);
  for (int k = 1; k <= n; ++k) {
    const Monomial prefix = Monomial::full(k);
    const Rational scale = Rational(1) / Rational::factorial(k);
    LieSeries q(n);
    for (const auto& [word, coeff] : exponent.terms())
      q.add_term(word, NilPoly::constant(n, coeff.coefficient(prefix) * scale));
    if (q.is_zero()) continue;
    parts.push_back(SymmetricPart{k, q});
    reconstruction = reconstruction + q.scaled(NilPoly::sum_d(n).pow(k));
  }
  if (reconstruction != exponent)
    throw std::logic_error("extract_symmetric_form: reconstruction mismatch");
  return parts;
}

}  // namespace bchcalc
