#pragma once

// Internals shared between the generic evaluator and the stencil-table
// builder (which recomputes only the Euler-Maclaurin tail while laddering
// the truncated sum across a sigma grid).

#include "zp/zeta.hpp"

namespace zp::detail {

// Truncation cutoff N = ceil(em_terms_factor * max(|t|/2pi, 10)).
int em_cutoff(double abs_t, const EvalConfig& cfg);

struct EmTail {
  Complex value;     // N^{1-s}/(s-1) + N^{-s}/2 + Bernoulli corrections
  double err_est;    // first-omitted-term bound (same scale as value)
};

// Tail of the Euler-Maclaurin formula for zeta at s with cutoff N.
// Throws AccuracyNotMet if the remainder cannot be certified
// (sigma + 2*depth + 1 <= 0).
EmTail em_tail_value(Complex s, int N, const EvalConfig& cfg);

}  // namespace zp::detail
