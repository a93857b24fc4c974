#pragma once

#include <complex>

#include "zp/errors.hpp"

namespace zp {

using Complex = std::complex<double>;

// Knobs for the Euler-Maclaurin evaluator.  Defaults meet the 1e-10 target
// across sigma in [-5, 6] for ordinates up to ~1e5 (relative to the value
// where |zeta| is large).
struct EvalConfig {
  // Cutoff multiplier: the truncated sum runs to N = ceil of
  // em_terms_factor * max(|t|/2pi, 10).
  double em_terms_factor = 2.5;
  // Number of Bernoulli correction terms kept after the trapezoid piece.
  int bernoulli_depth = 16;
  // At or above this sigma the plain Dirichlet series is used instead.
  double dirichlet_sigma_min = 6.0;
  // Accuracy contract: the tail estimate must not exceed
  // target_abs_error * max(1, |value|).
  double target_abs_error = 1e-10;

  void validate() const;  // throws DomainError when a field is out of range
};

// ---- zeta and its derivative ------------------------------------------------

// Riemann zeta on sigma >= -5 (use reflect_zeta below the strip).
// Throws PoleAtOne within 1e-8 of s = 1, AccuracyNotMet when the tail
// estimate misses the configured target.
Complex zeta(Complex s, const EvalConfig& cfg = {});

// zeta'(s) by the term-by-term differentiated Euler-Maclaurin formula
// (same region and error contract as zeta()).
Complex zeta_deriv(Complex s, const EvalConfig& cfg = {});

// Independent route for zeta' from the Dirichlet series
// -sum_{n>=2} log(n) n^{-s}, valid for sigma >= 2.  `leading` is the n = 2
// term -log(2) 2^{-s}; `tail` is everything after it.  The sigma = 4
// dominance certificate consumes the split.
struct DirichletDerivSplit {
  Complex leading;
  Complex tail;
  Complex value() const { return leading + tail; }
};

DirichletDerivSplit zeta_deriv_dirichlet_split(Complex s,
                                               double target_abs_error = 1e-10);
Complex zeta_deriv_dirichlet(Complex s, double target_abs_error = 1e-10);

// ---- functional equation ----------------------------------------------------

// chi(s) = pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2), the factor in
// zeta(s) = chi(s) zeta(1-s).  Throws SingularChi at the exact poles/zeros
// of the Gamma quotient (s a nonpositive even integer, or 1-s one).
Complex chi(Complex s);

// zeta(s) for sigma < 1/2 via the functional equation.  Exact zero at the
// trivial zeros s = -2, -4, ...  Requires sigma < 1/2.
Complex reflect_zeta(Complex s, const EvalConfig& cfg = {});

// ---- Hardy-function machinery ----------------------------------------------

// Riemann-Siegel theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi on the
// continuous branch with theta(t) ~ (t/2)log(t/2pi) - t/2 - pi/8.
// Requires t > 1; error below ~1e-10 for 10 <= t <= 1e5.
struct ThetaValue {
  double t;
  double theta;
};

ThetaValue theta(double t);

// Hardy Z(t) = exp(i theta(t)) zeta(1/2 + it), real for real t.  The
// discarded imaginary residue must stay below 10 * cfg.target_abs_error.
double hardy_Z(double t, const EvalConfig& cfg = {});

// Smoothed zero-counting function A(t) = (t/2pi) log(t/2pi) - t/2pi and its
// derivative A'(u) = (1/2pi) log(u/2pi).  Require t > 0.
double A_of_t(double t);
double A_prime(double u);

}  // namespace zp
