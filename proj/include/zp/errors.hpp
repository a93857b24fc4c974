#pragma once

#include <stdexcept>
#include <string>

namespace zp {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input outside a documented precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation requested within 1e-8 of the pole at s = 1.
class PoleAtOne : public Error {
 public:
  using Error::Error;
};

// A truncation-error estimate exceeded the configured target.
class AccuracyNotMet : public Error {
 public:
  using Error::Error;
};

// chi(s) evaluated at a pole or zero of the Gamma quotient.
class SingularChi : public Error {
 public:
  using Error::Error;
};

// The sigma=4 leading-term dominance bound failed; the closed-form
// vertical-leg argument would be unreliable.
class CertificateViolation : public Error {
 public:
  using Error::Error;
};

// phase_at_zero was handed an ordinate where zeta is not small.
class NotAZero : public Error {
 public:
  using Error::Error;
};

// Phase tracking could not resolve a step below the slip threshold even at
// the maximum refinement depth.
class PhaseSlip : public Error {
 public:
  using Error::Error;
};

// Zero finding/counting mismatch that refinement could not resolve.
class MissedZeroSuspected : public Error {
 public:
  using Error::Error;
};

// Malformed input line; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(long long line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  long long line() const { return line_; }

 private:
  long long line_;
};

// Ordinates (or indices) in an imported table fail to increase strictly.
class MonotonicityError : public Error {
 public:
  using Error::Error;
};

// A gap scan asked for indices the zero table does not cover contiguously.
class RangeNotCovered : public Error {
 public:
  using Error::Error;
};

class TooFewSamples : public Error {
 public:
  using Error::Error;
};

// A winding-number contour passed within 1e-8 of a zeta zero.
class ZeroOnContour : public Error {
 public:
  using Error::Error;
};

// track_zeta_arg called at an ordinate where |zeta(1/2+it)| < 1e-8.
class EndpointAtZero : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace zp
