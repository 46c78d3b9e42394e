#pragma once

#include <vector>

#include "bchcalc/freelie.hpp"

namespace bchcalc {

inline constexpr int kDefaultArityLimit = 8;

// One absorption of the two-phase loop. The correction is what gets folded
// into the exponent (scaled by d_n); the residual increment is what the
// logarithmic derivative of that absorption adds to the phase's leftover
// exponential. Step 0 of each phase absorbs the bare generator.
struct PhaseStep {
  LieSeries correction;
  LieSeries residual_increment;
};

struct DerivationTrace {
  int arity = 0;
  std::vector<PhaseStep> right_steps;
  std::vector<PhaseStep> left_steps;
  // The merged leftovers -d_n (L + R); every coefficient monomial covers
  // {1..n}, which is what lets the final merge collapse the three factors.
  LieSeries final_central{1};
};

struct BchResult {
  LieSeries exponent{1};
  DerivationTrace trace;
};

// One arity-raising pass: given the exponent at arity n-1 widened to arity n
// (with d_n unused), absorbs exp(d_n X) . exp(Z) . exp(d_n Y) into a single
// exponential and records every intermediate.
BchResult derive_step(const LieSeries& z_prev, int n);

// Iterates derive_step from Z_1 = d_1 (X + Y). Returns Z_n and the trace of
// the last step. The limit only bounds runtime; the algorithm is uniform in n.
BchResult derive_bch(int n, int arity_limit = kDefaultArityLimit);

// One homogeneous block of the closed form: exponent = sum over k of
// (d_1+...+d_n)^k q_k with q_k a rational Lie polynomial (constant
// NilPoly coefficients at the same arity).
struct SymmetricPart {
  int degree = 0;
  LieSeries part{1};
};

// Requires the exponent to be symmetric under permutations of the d-indices;
// verifies the reconstruction before returning.
std::vector<SymmetricPart> extract_symmetric_form(const BchResult& z);

}  // namespace bchcalc
