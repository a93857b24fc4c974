#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "zp/zeta.hpp"

namespace zp {

struct ZeroRecord {
  std::int64_t k;  // 1-based index in the standard ordering
  double gamma;    // ordinate of the zero 1/2 + i gamma
};

// Locate all zeros with ordinate in (t_lo, t_hi) by scanning Hardy Z for
// sign changes at a quarter of the local mean gap and bisecting each
// bracket to 1e-9.  The count over each block is checked against the
// unsmoothed counting function N(t) = theta(t)/pi + 1 + S(t); a shortfall
// triggers local rescans at halved spacing (this is what resolves
// Lehmer-style pairs that hide inside one scan cell), and only an
// unresolvable mismatch throws MissedZeroSuspected.
// Requires 2 < t_lo < t_hi <= 1e5.
std::vector<ZeroRecord> find_zeros(double t_lo, double t_hi,
                                   const EvalConfig& cfg = {});

// Number of zeros with ordinate in (0, t], from the exact identity
// N(t) = theta(t)/pi + 1 + arg zeta(1/2+it)/pi.  Requires t > 2 and
// |zeta(1/2+it)| not tiny (EndpointAtZero otherwise).
std::int64_t zero_count(double t, const EvalConfig& cfg = {});

enum class ZeroFormat {
  kPlain,    // one ordinate per line
  kIndexed,  // "k gamma" per line
};

// Read a zero table.  '#' comments and blank lines are skipped.  For
// kPlain, indices are assigned first_index, first_index+1, ...
// Throws ParseError (with line number) and MonotonicityError.
std::vector<ZeroRecord> import_zeros(std::istream& in, ZeroFormat format,
                                     std::int64_t first_index = 1);

// Write records as "k gamma" with 17 significant digits (round-trips).
void export_zeros(std::ostream& out, const std::vector<ZeroRecord>& zeros);

struct GapEntry {
  std::int64_t k;  // gap between zeros k and k+1
  double delta;
};

struct GapReport {
  std::vector<GapEntry> smallest;  // ascending by delta
  // One-significant-digit floor of the first gap *not* among `smallest`:
  // the spacing scale below which only the reported exceptions fall.
  double bulk_floor;
};

// The `count` smallest consecutive gaps among zeros k_lo..k_hi+1.  The
// records must cover that index range contiguously (RangeNotCovered).
GapReport scan_min_gaps(const std::vector<ZeroRecord>& zeros,
                        std::int64_t k_lo, std::int64_t k_hi,
                        std::size_t count);

// Step size for the horizontal phase leg: safety * bulk_floor.
double recommend_dx(const GapReport& report, double safety);

}  // namespace zp
