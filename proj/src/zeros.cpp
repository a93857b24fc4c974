#include "zp/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "tables.hpp"
#include "zp/argtrack.hpp"

namespace zp {

namespace {

using detail::kPi;
using detail::kTwoPi;

constexpr double kBisectWidth = 1e-9;
constexpr double kFinderCeiling = 1e5;

// Mean zero gap 2pi / log(t/2pi) near ordinate t.
double mean_gap(double t) {
  return kTwoPi / std::max(std::log(t / kTwoPi), 1.0);
}

double bisect_zero(double a, double b, double za, const EvalConfig& cfg) {
  while (b - a > kBisectWidth) {
    const double m = 0.5 * (a + b);
    const double zm = hardy_Z(m, cfg);
    if (zm == 0.0) return m;
    if ((zm > 0.0) == (za > 0.0)) {
      a = m;
      za = zm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Sign-change brackets of Z on [lo, hi] sampled at n_cells+1 points,
// bisected to ordinates.
std::vector<double> scan_block(double lo, double hi, int n_cells,
                               const EvalConfig& cfg) {
  std::vector<double> found;
  const double h = (hi - lo) / double(n_cells);
  double t_prev = lo;
  double z_prev = hardy_Z(t_prev, cfg);
  for (int i = 1; i <= n_cells; ++i) {
    double t = lo + double(i) * h;
    if (i == n_cells) t = hi;
    double z = hardy_Z(t, cfg);
    if (z == 0.0) {  // nudge off an exact grid hit
      t += h * 1e-9;
      z = hardy_Z(t, cfg);
    }
    if ((z > 0.0) != (z_prev > 0.0))
      found.push_back(bisect_zero(t_prev, t, z_prev, cfg));
    t_prev = t;
    z_prev = z;
  }
  return found;
}

// Boundary ordinate near `nominal` where |Z| is comfortably away from 0, so
// the counting identity is well conditioned there.
double pick_boundary(double nominal, double h, const EvalConfig& cfg) {
  for (int j = 0; j < 64; ++j) {
    const double off = (j % 2 == 0 ? 1.0 : -1.0) * double((j + 1) / 2);
    const double t = nominal + 0.37 * h * off;
    if (std::abs(hardy_Z(t, cfg)) > 0.1) return t;
  }
  throw MissedZeroSuspected("find_zeros: no well-conditioned block boundary");
}

}  // namespace

std::int64_t zero_count(double t, const EvalConfig& cfg) {
  if (!(t > 2.0)) throw DomainError("zero_count: requires t > 2");
  const double s_term = track_zeta_arg(t, PathConfig{}, cfg) / kPi;
  const double x = theta(t).theta / kPi + 1.0 + s_term;
  const double r = std::round(x);
  if (std::abs(x - r) > 0.2)
    throw MissedZeroSuspected("zero_count: counting identity not near integer");
  return std::int64_t(r);
}

std::vector<ZeroRecord> find_zeros(double t_lo, double t_hi,
                                   const EvalConfig& cfg) {
  cfg.validate();
  if (!(t_lo > 2.0 && t_hi > t_lo && t_hi <= kFinderCeiling))
    throw DomainError("find_zeros: requires 2 < t_lo < t_hi <= 1e5");

  const double h0 = mean_gap(t_hi) / 4.0;
  const double block_len = 64.0 * mean_gap(t_hi);

  std::vector<double> ordinates;
  double b_lo = t_lo;
  std::int64_t count_lo = zero_count(b_lo, cfg);
  const std::int64_t k_first = count_lo + 1;

  while (b_lo < t_hi) {
    double b_hi = std::min(b_lo + block_len, t_hi);
    if (b_hi < t_hi) b_hi = pick_boundary(b_hi, h0, cfg);
    const std::int64_t count_hi = zero_count(b_hi, cfg);
    const auto expected = count_hi - count_lo;

    int n_cells = std::max(1, int(std::ceil((b_hi - b_lo) / h0)));
    std::vector<double> found = scan_block(b_lo, b_hi, n_cells, cfg);
    // A close pair inside one cell leaves Z's sign unchanged; rescan the
    // block at halved spacing until the count matches the identity.
    for (int round = 0;
         std::int64_t(found.size()) != expected && round < 10; ++round) {
      n_cells *= 2;
      found = scan_block(b_lo, b_hi, n_cells, cfg);
    }
    if (std::int64_t(found.size()) != expected) {
      std::ostringstream msg;
      msg << "find_zeros: block (" << b_lo << ", " << b_hi << ") holds "
          << expected << " zeros by count but scan located " << found.size();
      throw MissedZeroSuspected(msg.str());
    }
    ordinates.insert(ordinates.end(), found.begin(), found.end());
    b_lo = b_hi;
    count_lo = count_hi;
  }

  std::vector<ZeroRecord> out;
  out.reserve(ordinates.size());
  for (std::size_t i = 0; i < ordinates.size(); ++i) {
    const double g = ordinates[i];
    if (std::abs(zeta(Complex(0.5, g), cfg)) > 1e-6)
      throw AccuracyNotMet("find_zeros: located ordinate fails |zeta| check");
    out.push_back({k_first + std::int64_t(i), g});
  }
  return out;
}

std::vector<ZeroRecord> import_zeros(std::istream& in, ZeroFormat format,
                                     std::int64_t first_index) {
  std::vector<ZeroRecord> out;
  std::string line;
  long long lineno = 0;
  double prev_gamma = -std::numeric_limits<double>::infinity();
  std::int64_t prev_k = std::numeric_limits<std::int64_t>::min();

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream iss(line);
    std::int64_t k;
    double gamma;
    if (format == ZeroFormat::kIndexed) {
      if (!(iss >> k >> gamma))
        throw ParseError(lineno, "expected \"k gamma\"");
    } else {
      if (!(iss >> gamma)) throw ParseError(lineno, "expected an ordinate");
      k = first_index + std::int64_t(out.size());
    }
    std::string rest;
    if (iss >> rest) throw ParseError(lineno, "trailing content: " + rest);
    if (!std::isfinite(gamma) || gamma <= 0.0)
      throw ParseError(lineno, "ordinate must be positive and finite");
    if (format == ZeroFormat::kIndexed && k < 1)
      throw ParseError(lineno, "index must be >= 1");

    if (gamma <= prev_gamma) {
      std::ostringstream msg;
      msg << "ordinates not strictly increasing at line " << lineno << " ("
          << prev_gamma << " then " << gamma << ")";
      throw MonotonicityError(msg.str());
    }
    if (format == ZeroFormat::kIndexed && k <= prev_k) {
      std::ostringstream msg;
      msg << "indices not strictly increasing at line " << lineno << " ("
          << prev_k << " then " << k << ")";
      throw MonotonicityError(msg.str());
    }
    prev_gamma = gamma;
    prev_k = k;
    out.push_back({k, gamma});
  }
  return out;
}

void export_zeros(std::ostream& out, const std::vector<ZeroRecord>& zeros) {
  char buf[64];
  for (const auto& z : zeros) {
    std::snprintf(buf, sizeof buf, "%lld %.17g\n",
                  static_cast<long long>(z.k), z.gamma);
    out << buf;
  }
  if (!out) throw IoError("export_zeros: stream write failed");
}

namespace {

// Floor to one significant decimal digit (0.00232 -> 0.002).
double sig_floor(double x) {
  const double p = std::pow(10.0, std::floor(std::log10(x)));
  return std::floor(x / p * (1.0 + 1e-12)) * p;
}

}  // namespace

GapReport scan_min_gaps(const std::vector<ZeroRecord>& zeros,
                        std::int64_t k_lo, std::int64_t k_hi,
                        std::size_t count) {
  if (k_lo > k_hi) throw DomainError("scan_min_gaps: requires k_lo <= k_hi");

  const auto pos = std::lower_bound(
      zeros.begin(), zeros.end(), k_lo,
      [](const ZeroRecord& r, std::int64_t k) { return r.k < k; });
  const auto need = std::size_t(k_hi - k_lo + 2);  // k_lo .. k_hi+1
  if (pos == zeros.end() || pos->k != k_lo ||
      std::size_t(zeros.end() - pos) < need)
    throw RangeNotCovered("scan_min_gaps: index range not covered");
  for (std::size_t j = 0; j < need; ++j) {
    if ((pos + j)->k != k_lo + std::int64_t(j))
      throw RangeNotCovered("scan_min_gaps: index range not contiguous");
  }

  std::vector<GapEntry> gaps;
  gaps.reserve(need - 1);
  for (std::size_t j = 0; j + 1 < need; ++j) {
    const double delta = (pos + j + 1)->gamma - (pos + j)->gamma;
    if (!(delta > 0.0))
      throw MonotonicityError("scan_min_gaps: nonpositive gap");
    gaps.push_back({(pos + j)->k, delta});
  }
  std::sort(gaps.begin(), gaps.end(), [](const GapEntry& a, const GapEntry& b) {
    return a.delta != b.delta ? a.delta < b.delta : a.k < b.k;
  });

  GapReport report;
  if (count >= gaps.size()) {
    report.smallest = gaps;
    report.bulk_floor = sig_floor(gaps.back().delta);
  } else {
    report.smallest.assign(gaps.begin(), gaps.begin() + count);
    report.bulk_floor = sig_floor(gaps[count].delta);
  }
  return report;
}

double recommend_dx(const GapReport& report, double safety) {
  if (report.smallest.empty() || !(report.bulk_floor > 0.0))
    throw DomainError("recommend_dx: empty gap report");
  if (!(safety > 0.0 && safety <= 1.0))
    throw DomainError("recommend_dx: safety outside (0, 1]");
  return safety * report.bulk_floor;
}

}  // namespace zp
