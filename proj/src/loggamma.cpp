#include "zp/loggamma.hpp"

#include <cmath>

#include "tables.hpp"
#include "zp/errors.hpp"

namespace zp {

namespace {

// Stirling region: beyond this radius the asymptotic series converges to
// ~1e-19 with the 15-term table, provided z is not close to the cut.
constexpr double kStirlingRadius = 12.0;

std::complex<double> stirling(std::complex<double> z) {
  const std::complex<double> lz = std::log(z);
  std::complex<double> acc =
      (z - 0.5) * lz - z + 0.5 * detail::kLog2Pi;
  const std::complex<double> z2inv = 1.0 / (z * z);
  std::complex<double> zp = 1.0 / z;  // z^{-(2k-1)}
  for (int k = 0; k < detail::kStirlingTableSize; ++k) {
    acc += detail::kStirlingCoeff[k] * zp;
    zp *= z2inv;
  }
  return acc;
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("log_gamma: non-finite argument");
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw DomainError("log_gamma: pole at nonpositive integer");

  // Shift until Stirling applies with |arg| comfortably below pi/2.  For
  // |Im z| >= kStirlingRadius no shift is needed; the recurrence below sums
  // principal logs, which stay on the analytic branch because z + j never
  // crosses the negative real axis while Im z != 0 (and is positive real
  // when z is).
  std::complex<double> shift = 0.0;
  std::complex<double> w = z;
  if (std::abs(w.imag()) < kStirlingRadius) {
    while (w.real() < kStirlingRadius) {
      shift += std::log(w);
      w += 1.0;
    }
  }
  return stirling(w) - shift;
}

}  // namespace zp
