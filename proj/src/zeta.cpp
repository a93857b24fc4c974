#include "zp/zeta.hpp"

#include <cmath>
#include <cstdint>

#include "em_internal.hpp"
#include "tables.hpp"
#include "zp/loggamma.hpp"

namespace zp {

namespace {

using detail::kBernoulliOverFactorial;
using detail::kLn2;
using detail::kLogPi;
using detail::kPi;
using detail::kTwoPi;

constexpr double kSigmaFloor = -5.0;
constexpr double kPoleRadius = 1e-8;

// Largest Dirichlet-series length the fallback route will sum directly.
constexpr std::int64_t kPlainSeriesLimit = 2'000'000;

inline void require_finite(Complex s, const char* who) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw DomainError(std::string(who) + ": non-finite argument");
}

// n^{-s} for real n > 0.
inline Complex npow(double n, Complex s) {
  const double ln = std::log(n);
  return std::polar(std::exp(-s.real() * ln), -s.imag() * ln);
}

// Euler-Maclaurin evaluation of zeta (Deriv=false) or zeta' (Deriv=true):
//
//   zeta(s) = sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
//           + sum_{k>=1} B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
//
// differentiated term by term for the derivative.  The Pochhammer factors
// and their s-derivatives advance jointly:
//   P_{k+1} = P_k (s+2k-1)(s+2k),  P'_{k+1} = P'_k (s+2k-1)(s+2k)
//                                            + P_k (2s+4k-1).
template <bool Deriv>
Complex em_eval(Complex s, const EvalConfig& cfg) {
  const int n_cut = detail::em_cutoff(std::abs(s.imag()), cfg);

  Complex acc = 0.0;
  for (int n = 1; n < n_cut; ++n) {
    const double ln = std::log(double(n));
    const Complex term = std::polar(std::exp(-s.real() * ln), -s.imag() * ln);
    if constexpr (Deriv)
      acc -= ln * term;
    else
      acc += term;
  }

  const double lnN = std::log(double(n_cut));
  const Complex n_ms = npow(double(n_cut), s);  // N^{-s}
  const Complex sm1 = s - 1.0;

  if constexpr (Deriv) {
    // d/ds [N^{1-s}/(s-1)] and d/ds [N^{-s}/2]
    acc -= n_ms * double(n_cut) * (lnN / sm1 + 1.0 / (sm1 * sm1));
    acc -= 0.5 * lnN * n_ms;
  } else {
    acc += n_ms * double(n_cut) / sm1;
    acc += 0.5 * n_ms;
  }

  Complex P = s;        // s(s+1)...(s+2k-2), k = 1
  Complex Pp = 1.0;     // dP/ds
  Complex w = n_ms / double(n_cut);  // N^{-s-2k+1}, k = 1
  const double inv_n2 = 1.0 / (double(n_cut) * double(n_cut));
  const int depth = cfg.bernoulli_depth;
  for (int k = 1; k <= depth; ++k) {
    const double b = kBernoulliOverFactorial[k - 1];
    if constexpr (Deriv)
      acc += b * (Pp - P * lnN) * w;
    else
      acc += b * P * w;
    const Complex f1 = s + double(2 * k - 1);
    const Complex f2 = s + double(2 * k);
    Pp = Pp * (f1 * f2) + P * (f1 + f2);
    P *= f1 * f2;
    w *= inv_n2;
  }

  // Remainder bound: |first omitted term| * |s+2K+1| / (sigma+2K+1),
  // valid while the denominator is positive.
  const double denom = s.real() + double(2 * depth + 1);
  if (denom <= 0.0)
    throw AccuracyNotMet("euler-maclaurin remainder not certifiable here");
  const double b_next = std::abs(kBernoulliOverFactorial[depth]);
  const double ratio = std::abs(s + double(2 * depth + 1)) / denom;
  double est;
  if constexpr (Deriv)
    est = b_next * (std::abs(Pp) + std::abs(P) * lnN) * std::abs(w) * ratio;
  else
    est = b_next * std::abs(P) * std::abs(w) * ratio;

  if (est > cfg.target_abs_error * std::max(1.0, std::abs(acc)))
    throw AccuracyNotMet("euler-maclaurin tail estimate above target");
  if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag()))
    throw AccuracyNotMet("non-finite intermediate");
  return acc;
}

// Plain Dirichlet series, used at sigma >= cfg.dirichlet_sigma_min where a
// few dozen terms reach the target.
Complex dirichlet_eval(Complex s, const EvalConfig& cfg, bool deriv) {
  const double sig = s.real();
  std::int64_t m = 8;
  auto tail_bound = [&](double x) {
    // integral bound for sum_{n>x} (log n) n^{-sigma} resp. n^{-sigma}
    const double base = std::pow(x, 1.0 - sig);
    if (deriv)
      return base * (std::log(x) / (sig - 1.0) +
                     1.0 / ((sig - 1.0) * (sig - 1.0)));
    return base / (sig - 1.0);
  };
  while (tail_bound(double(m)) > cfg.target_abs_error && m < (1 << 24)) m *= 2;

  Complex acc = 0.0;
  for (std::int64_t n = 1; n <= m; ++n) {
    const double ln = std::log(double(n));
    const Complex term = std::polar(std::exp(-sig * ln), -s.imag() * ln);
    acc += deriv ? -ln * term : term;
  }
  if (tail_bound(double(m)) > cfg.target_abs_error)
    throw AccuracyNotMet("dirichlet tail above target");
  return acc;
}

inline bool is_exact_integer(double x) { return x == std::floor(x); }

inline bool is_nonpositive_even_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && is_exact_integer(s.real()) &&
         std::fmod(s.real(), 2.0) == 0.0;
}

void check_eval_domain(Complex s, const EvalConfig& cfg, const char* who) {
  require_finite(s, who);
  cfg.validate();
  if (s.real() < kSigmaFloor)
    throw DomainError(std::string(who) +
                      ": sigma below -5; use reflect_zeta");
  if (std::abs(s - Complex(1.0, 0.0)) < kPoleRadius)
    throw PoleAtOne(std::string(who) + ": pole at s = 1 (within 1e-8)");
}

}  // namespace

namespace detail {

int em_cutoff(double abs_t, const EvalConfig& cfg) {
  return int(std::ceil(cfg.em_terms_factor * std::max(abs_t / kTwoPi, 10.0)));
}

EmTail em_tail_value(Complex s, int n_cut, const EvalConfig& cfg) {
  const Complex n_ms = npow(double(n_cut), s);
  Complex acc = n_ms * double(n_cut) / (s - 1.0) + 0.5 * n_ms;

  Complex P = s;
  Complex w = n_ms / double(n_cut);
  const double inv_n2 = 1.0 / (double(n_cut) * double(n_cut));
  for (int k = 1; k <= cfg.bernoulli_depth; ++k) {
    acc += kBernoulliOverFactorial[k - 1] * P * w;
    P *= (s + double(2 * k - 1)) * (s + double(2 * k));
    w *= inv_n2;
  }
  const double denom = s.real() + double(2 * cfg.bernoulli_depth + 1);
  if (denom <= 0.0)
    throw AccuracyNotMet("euler-maclaurin remainder not certifiable here");
  const double est = std::abs(kBernoulliOverFactorial[cfg.bernoulli_depth]) *
                     std::abs(P) * std::abs(w) *
                     (std::abs(s + double(2 * cfg.bernoulli_depth + 1)) / denom);
  return {acc, est};
}

}  // namespace detail

void EvalConfig::validate() const {
  if (!(em_terms_factor >= 1.2 && em_terms_factor <= 1000.0))
    throw DomainError("EvalConfig: em_terms_factor outside [1.2, 1000]");
  if (bernoulli_depth < 1 || bernoulli_depth > 29)
    throw DomainError("EvalConfig: bernoulli_depth outside [1, 29]");
  if (!(dirichlet_sigma_min >= 2.0 && dirichlet_sigma_min <= 50.0))
    throw DomainError("EvalConfig: dirichlet_sigma_min outside [2, 50]");
  if (!(target_abs_error >= 1e-14 && target_abs_error <= 1e-2))
    throw DomainError("EvalConfig: target_abs_error outside [1e-14, 1e-2]");
}

Complex zeta(Complex s, const EvalConfig& cfg) {
  check_eval_domain(s, cfg, "zeta");
  if (s.real() >= cfg.dirichlet_sigma_min) return dirichlet_eval(s, cfg, false);
  return em_eval<false>(s, cfg);
}

Complex zeta_deriv(Complex s, const EvalConfig& cfg) {
  check_eval_domain(s, cfg, "zeta_deriv");
  if (s.real() >= cfg.dirichlet_sigma_min) return dirichlet_eval(s, cfg, true);
  return em_eval<true>(s, cfg);
}

DirichletDerivSplit zeta_deriv_dirichlet_split(Complex s,
                                               double target_abs_error) {
  require_finite(s, "zeta_deriv_dirichlet");
  if (s.real() < 2.0)
    throw DomainError("zeta_deriv_dirichlet: requires sigma >= 2");
  if (!(target_abs_error > 0.0))
    throw DomainError("zeta_deriv_dirichlet: target must be positive");

  const double sig = s.real();
  const double sm1 = sig - 1.0;
  auto tail_bound = [&](double x) {
    return std::pow(x, -sm1) * (std::log(x) / sm1 + 1.0 / (sm1 * sm1));
  };
  std::int64_t m = 8;
  while (tail_bound(double(m)) > target_abs_error &&
         m <= kPlainSeriesLimit)
    m *= 2;

  DirichletDerivSplit out;
  out.leading = -kLn2 * npow(2.0, s);

  if (m <= kPlainSeriesLimit) {
    Complex acc = 0.0;
    for (std::int64_t n = 3; n <= m; ++n) {
      const double ln = std::log(double(n));
      acc -= ln * std::polar(std::exp(-sig * ln), -s.imag() * ln);
    }
    out.tail = acc;
    return out;
  }

  // Near sigma = 2 the plain cutoff is astronomically large; complete the
  // series with the Euler-Maclaurin expansion of f(x) = log(x) x^{-s}:
  //
  //   sum_{n>=M} f(n) = M^{1-s}(log M/(s-1) + 1/(s-1)^2) + f(M)/2
  //                   - sum_k B_{2k}/(2k)! (P_k' - P_k log M) M^{-s-2k+1}
  //
  // with P_k = s(s+1)...(s+2k-2).  Written out independently of the
  // differentiated evaluator in em_eval so the two stay cross-checks.
  const std::int64_t m_cut =
      std::max<std::int64_t>(1000, std::int64_t(std::ceil(std::abs(s.imag()) / 2.0)));
  Complex acc = 0.0;
  for (std::int64_t n = 3; n < m_cut; ++n) {
    const double ln = std::log(double(n));
    acc -= ln * std::polar(std::exp(-sig * ln), -s.imag() * ln);
  }

  const double lnM = std::log(double(m_cut));
  const Complex m_ms = npow(double(m_cut), s);
  const Complex s1 = s - 1.0;
  Complex tail_series =
      m_ms * double(m_cut) * (lnM / s1 + 1.0 / (s1 * s1)) + 0.5 * lnM * m_ms;

  Complex P = s, Pp = 1.0;
  Complex w = m_ms / double(m_cut);
  const double inv_m2 = 1.0 / (double(m_cut) * double(m_cut));
  const int depth = 18;
  for (int k = 1; k <= depth; ++k) {
    tail_series -= kBernoulliOverFactorial[k - 1] * (Pp - P * lnM) * w;
    const Complex f1 = s + double(2 * k - 1);
    const Complex f2 = s + double(2 * k);
    Pp = Pp * (f1 * f2) + P * (f1 + f2);
    P *= f1 * f2;
    w *= inv_m2;
  }
  const double est = std::abs(kBernoulliOverFactorial[depth]) *
                     (std::abs(Pp) + std::abs(P) * lnM) * std::abs(w);
  if (est > target_abs_error)
    throw AccuracyNotMet("dirichlet-route completion above target");

  out.tail = acc - tail_series;
  return out;
}

Complex zeta_deriv_dirichlet(Complex s, double target_abs_error) {
  return zeta_deriv_dirichlet_split(s, target_abs_error).value();
}

Complex chi(Complex s) {
  require_finite(s, "chi");
  if (is_nonpositive_even_integer(s))
    throw SingularChi("chi: Gamma(s/2) pole (s nonpositive even integer)");
  if (is_nonpositive_even_integer(1.0 - s))
    throw SingularChi("chi: Gamma((1-s)/2) pole (s odd integer >= 1)");
  const Complex lg =
      (s - 0.5) * kLogPi + log_gamma(0.5 * (1.0 - s)) - log_gamma(0.5 * s);
  return std::exp(lg);
}

Complex reflect_zeta(Complex s, const EvalConfig& cfg) {
  require_finite(s, "reflect_zeta");
  if (!(s.real() < 0.5))
    throw DomainError("reflect_zeta: requires sigma < 1/2");
  if (is_nonpositive_even_integer(s) && s.real() < 0.0)
    return 0.0;  // trivial zero, exactly
  return chi(s) * zeta(1.0 - s, cfg);
}

ThetaValue theta(double t) {
  if (!std::isfinite(t) || t <= 1.0)
    throw DomainError("theta: requires t > 1");
  const Complex lg = log_gamma(Complex(0.25, 0.5 * t));
  return {t, lg.imag() - 0.5 * t * kLogPi};
}

double hardy_Z(double t, const EvalConfig& cfg) {
  const double th = theta(t).theta;
  const Complex w = std::polar(1.0, th) * zeta(Complex(0.5, t), cfg);
  if (std::abs(w.imag()) > 10.0 * cfg.target_abs_error)
    throw AccuracyNotMet("hardy_Z: imaginary residue above 10x target");
  return w.real();
}

double A_of_t(double t) {
  if (!std::isfinite(t) || t <= 0.0) throw DomainError("A_of_t: requires t > 0");
  const double x = t / kTwoPi;
  return x * std::log(x) - x;
}

double A_prime(double u) {
  if (!std::isfinite(u) || u <= 0.0)
    throw DomainError("A_prime: requires u > 0");
  return std::log(u / kTwoPi) / kTwoPi;
}

}  // namespace zp
