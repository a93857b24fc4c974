#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "zp/argtrack.hpp"

namespace zp {

enum class SampleKind {
  kArgPaper,       // (continuous_arg + pi - gamma log 2) / denom
  kArgConvention,  // (continuous_arg - pi + gamma log 2) / denom
  kLogmodHejhal,   // log|2pi zeta'(rho) / log(gamma/2pi)| / denom
  kZetaArgSelberg, // arg zeta(1/2+it) / sqrt(log log T / 2)
};

const char* sample_kind_name(SampleKind kind);

struct NormalizedSample {
  std::int64_t k;
  double value;
  SampleKind kind;
  bool excluded;  // source record carried flags
};

// sqrt(log log n_ref), or the theorem form sqrt(log log n_ref / 2).
// Figures and theorems in the source material disagree on the /2; both are
// provided and neither is silently preferred.
double normalize_denominator(double n_ref, bool theorem_form);

// Centered phase statistics for one record, in both branch conventions.
std::pair<NormalizedSample, NormalizedSample> normalize_arg(
    const PhaseRecord& rec, std::int64_t n_ref, bool theorem_form = false);

// Hejhal-normalized log-modulus of zeta' at the zero.  Requires
// gamma > 2pi (the log factor must be positive).
NormalizedSample normalize_logmod(const PhaseRecord& rec, std::int64_t n_ref,
                                  bool theorem_form = false);

// Selberg-normalized arg zeta on the critical line.
NormalizedSample normalize_selberg(double t, double arg_zeta, double t_ref);

struct MomentsReport {
  std::int64_t n;
  double mean;
  double stdev;  // population convention (divisor n)
  double m3, m4, m5, m6;  // central moments
};

// Single-pass central-moment accumulator through order 6.  Merging is the
// associative pairwise update (binomial shift of both operands onto the
// combined mean), so sharded accumulation reproduces sequential results.
class MomentAccumulator {
 public:
  void add(double x);
  void merge(const MomentAccumulator& other);
  std::int64_t count() const { return std::int64_t(n_); }
  MomentsReport report() const;  // TooFewSamples when n < 2

 private:
  double n_ = 0.0;
  double mean_ = 0.0;
  double sums_[7] = {0, 0, 0, 0, 0, 0, 0};  // central power sums, index 2..6
};

MomentsReport moments(std::span<const NormalizedSample> samples,
                      bool exclude_flagged);

struct HistogramSpec {
  double lo = -8.0;
  double hi = 8.0;
  int bins = 160;

  void validate() const;
};

struct HistogramRow {
  double lo, hi;
  std::int64_t count;
  double density;    // count / (n * bin_width); integrates to in-range frac
  double gauss_ref;  // mean-0 normal density at bin center, sample stdev
};

struct HistogramResult {
  std::vector<HistogramRow> rows;
  std::int64_t below = 0, above = 0;
  std::int64_t n = 0;
  double sample_stdev = 0.0;
};

HistogramResult histogram(std::span<const NormalizedSample> samples,
                          const HistogramSpec& spec = {});

struct ChiSquareResult {
  double statistic;
  int dof;
  double p_value;
};

// Equal-width chi-square test of the args (wrapped into (-pi, pi]) against
// the uniform distribution.
ChiSquareResult chi_square_uniform(std::span<const double> args, int bins);

// (log|zeta'(rho)|, principal arg zeta'(rho)) for the unflagged records.
std::vector<std::pair<double, double>> joint_log_scatter(
    std::span<const PhaseRecord> records);

// Upper regularized incomplete gamma Q(a, x) (chi-square tail); exposed for
// direct testing.
double gamma_q(double a, double x);

}  // namespace zp
