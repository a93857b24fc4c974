#include "zp/stats.hpp"

#include <cmath>

#include "tables.hpp"

namespace zp {

namespace {

using detail::kLn2;
using detail::kPi;
using detail::kTwoPi;

constexpr double kSqrt2Pi = 2.50662827463100050242;

double checked_loglog(double n_ref) {
  if (!(n_ref >= 3.0))
    throw DomainError("normalization reference must be >= 3");
  return std::log(std::log(n_ref));
}

}  // namespace

const char* sample_kind_name(SampleKind kind) {
  switch (kind) {
    case SampleKind::kArgPaper: return "ARG_PAPER";
    case SampleKind::kArgConvention: return "ARG_CONVENTION";
    case SampleKind::kLogmodHejhal: return "LOGMOD_HEJHAL";
    case SampleKind::kZetaArgSelberg: return "ZETA_ARG_SELBERG";
  }
  throw DomainError("unknown sample kind");
}

double normalize_denominator(double n_ref, bool theorem_form) {
  const double ll = checked_loglog(n_ref);
  return std::sqrt(theorem_form ? ll / 2.0 : ll);
}

std::pair<NormalizedSample, NormalizedSample> normalize_arg(
    const PhaseRecord& rec, std::int64_t n_ref, bool theorem_form) {
  const double den = normalize_denominator(double(n_ref), theorem_form);
  const bool excl = rec.flags != 0;
  const double paper = (rec.continuous_arg + kPi - rec.gamma * kLn2) / den;
  const double conv = (rec.continuous_arg - kPi + rec.gamma * kLn2) / den;
  return {NormalizedSample{rec.k, paper, SampleKind::kArgPaper, excl},
          NormalizedSample{rec.k, conv, SampleKind::kArgConvention, excl}};
}

NormalizedSample normalize_logmod(const PhaseRecord& rec, std::int64_t n_ref,
                                  bool theorem_form) {
  if (!(rec.gamma > kTwoPi))
    throw DomainError("normalize_logmod: requires gamma > 2pi");
  if (rec.zeta_prime == Complex(0.0, 0.0))
    throw DomainError("normalize_logmod: zeta_prime is zero");
  const double den = normalize_denominator(double(n_ref), theorem_form);
  const double value =
      std::log(std::abs(kTwoPi * rec.zeta_prime /
                        std::log(rec.gamma / kTwoPi))) /
      den;
  return {rec.k, value, SampleKind::kLogmodHejhal, rec.flags != 0};
}

NormalizedSample normalize_selberg(double t, double arg_zeta, double t_ref) {
  if (!(t_ref >= 3.0))
    throw DomainError("normalize_selberg: requires T_ref >= 3");
  const double den = std::sqrt(checked_loglog(t_ref) / 2.0);
  return {std::int64_t(std::llround(t)), arg_zeta / den,
          SampleKind::kZetaArgSelberg, false};
}

void MomentAccumulator::add(double x) {
  MomentAccumulator single;
  single.n_ = 1.0;
  single.mean_ = x;
  merge(single);
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
  if (other.n_ == 0.0) return;
  if (n_ == 0.0) {
    *this = other;
    return;
  }
  static constexpr double kBinom[7][7] = {
      {1, 0, 0, 0, 0, 0, 0},  {1, 1, 0, 0, 0, 0, 0},  {1, 2, 1, 0, 0, 0, 0},
      {1, 3, 3, 1, 0, 0, 0},  {1, 4, 6, 4, 1, 0, 0},  {1, 5, 10, 10, 5, 1, 0},
      {1, 6, 15, 20, 15, 6, 1}};

  const double na = n_, nb = other.n_, n = na + nb;
  const double delta = other.mean_ - mean_;
  const double sa = -delta * nb / n;  // shift of A's values about new mean
  const double sb = delta * na / n;

  double pa[7], pb[7];
  pa[0] = pb[0] = 1.0;
  for (int i = 1; i <= 6; ++i) {
    pa[i] = pa[i - 1] * sa;
    pb[i] = pb[i - 1] * sb;
  }
  // central power sums about the old means, with counts in slot 0
  double ma[7] = {na, 0, sums_[2], sums_[3], sums_[4], sums_[5], sums_[6]};
  double mb[7] = {nb, 0, other.sums_[2], other.sums_[3], other.sums_[4],
                  other.sums_[5], other.sums_[6]};
  for (int p = 2; p <= 6; ++p) {
    double acc = 0.0;
    for (int k = 0; k <= p; ++k)
      acc += kBinom[p][k] * (ma[k] * pa[p - k] + mb[k] * pb[p - k]);
    sums_[p] = acc;
  }
  mean_ += delta * nb / n;
  n_ = n;
}

MomentsReport MomentAccumulator::report() const {
  if (n_ < 2.0) throw TooFewSamples("moments: need at least 2 samples");
  MomentsReport r;
  r.n = std::int64_t(n_);
  r.mean = mean_;
  r.stdev = std::sqrt(sums_[2] / n_);
  r.m3 = sums_[3] / n_;
  r.m4 = sums_[4] / n_;
  r.m5 = sums_[5] / n_;
  r.m6 = sums_[6] / n_;
  return r;
}

MomentsReport moments(std::span<const NormalizedSample> samples,
                      bool exclude_flagged) {
  MomentAccumulator acc;
  for (const auto& s : samples) {
    if (exclude_flagged && s.excluded) continue;
    acc.add(s.value);
  }
  return acc.report();
}

void HistogramSpec::validate() const {
  if (!(lo < hi)) throw DomainError("HistogramSpec: requires lo < hi");
  if (bins < 1) throw DomainError("HistogramSpec: requires bins >= 1");
}

HistogramResult histogram(std::span<const NormalizedSample> samples,
                          const HistogramSpec& spec) {
  spec.validate();
  HistogramResult out;
  out.n = std::int64_t(samples.size());
  const double width = (spec.hi - spec.lo) / double(spec.bins);

  out.rows.resize(std::size_t(spec.bins));
  for (int b = 0; b < spec.bins; ++b) {
    out.rows[b].lo = spec.lo + b * width;
    out.rows[b].hi = (b + 1 == spec.bins) ? spec.hi : spec.lo + (b + 1) * width;
    out.rows[b].count = 0;
  }

  MomentAccumulator acc;
  for (const auto& s : samples) {
    acc.add(s.value);
    if (s.value < spec.lo) {
      ++out.below;
      continue;
    }
    if (s.value > spec.hi) {
      ++out.above;
      continue;
    }
    int b = int((s.value - spec.lo) / width);
    if (b >= spec.bins) b = spec.bins - 1;  // hi edge lands in the last bin
    ++out.rows[b].count;
  }

  out.sample_stdev = samples.size() >= 2 ? acc.report().stdev : 0.0;
  const double sd = out.sample_stdev;
  for (auto& row : out.rows) {
    row.density =
        out.n > 0 ? double(row.count) / (double(out.n) * width) : 0.0;
    const double center = 0.5 * (row.lo + row.hi);
    row.gauss_ref =
        sd > 0.0 ? std::exp(-0.5 * (center / sd) * (center / sd)) /
                       (sd * kSqrt2Pi)
                 : 0.0;
  }
  return out;
}

ChiSquareResult chi_square_uniform(std::span<const double> args, int bins) {
  if (bins < 2) throw DomainError("chi_square_uniform: requires bins >= 2");
  if (args.size() < std::size_t(5 * bins))
    throw TooFewSamples("chi_square_uniform: need >= 5 samples per bin");

  std::vector<std::int64_t> counts(std::size_t(bins), 0);
  const double width = kTwoPi / double(bins);
  for (double x : args) {
    double w = std::remainder(x, kTwoPi);  // [-pi, pi]
    if (w <= -kPi) w += kTwoPi;            // convention (-pi, pi]
    int b = int((w + kPi) / width);
    if (b < 0) b = 0;
    if (b >= bins) b = bins - 1;
    ++counts[b];
  }
  const double expected = double(args.size()) / double(bins);
  double stat = 0.0;
  for (auto c : counts) {
    const double d = double(c) - expected;
    stat += d * d / expected;
  }
  const int dof = bins - 1;
  return {stat, dof, gamma_q(0.5 * dof, 0.5 * stat)};
}

std::vector<std::pair<double, double>> joint_log_scatter(
    std::span<const PhaseRecord> records) {
  std::vector<std::pair<double, double>> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    if (r.flags != 0) continue;
    out.emplace_back(std::log(std::abs(r.zeta_prime)),
                     std::arg(r.zeta_prime));
  }
  return out;
}

double gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) throw DomainError("gamma_q: invalid arguments");
  if (x == 0.0) return 1.0;
  const double lg = std::lgamma(a);
  const double prefix = std::exp(-x + a * std::log(x) - lg);
  if (x < a + 1.0) {
    // series for P(a, x); Q = 1 - P
    double ap = a, del = 1.0 / a, sum = del;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-15) break;
    }
    return 1.0 - prefix * sum;
  }
  // Lentz continued fraction for Q(a, x)
  const double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -double(i) * (double(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-15) break;
  }
  return prefix * h;
}

}  // namespace zp
