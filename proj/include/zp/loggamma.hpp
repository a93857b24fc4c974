#pragma once

#include <complex>

namespace zp {

// log Gamma(z) on the analytic branch that is real on the positive real axis
// and continuous on the plane cut along the negative reals.  Stirling series
// after an argument shift into |z| >= 12; accurate to ~1e-13 relative over
// the strip this library visits (Re z in [-3, 4], any imaginary part).
//
// Poles of Gamma (z = 0, -1, -2, ...) raise DomainError.
std::complex<double> log_gamma(std::complex<double> z);

}  // namespace zp
