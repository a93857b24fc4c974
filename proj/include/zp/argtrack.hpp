#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zp/zeros.hpp"
#include "zp/zeta.hpp"

namespace zp {

// Controls for the two-leg path arg-tracking machinery.
struct PathConfig {
  double dx = 0.0025;          // horizontal grid step in sigma
  double sigma_start = 4.0;    // right edge of the horizontal leg
  double slip_threshold = 2.827433388230814;  // 0.9 * pi
  int max_refine_depth = 6;    // midpoint-halving rounds per flagged step

  void validate() const;
};

// Record flags (bitmask).
enum PhaseFlag : unsigned {
  kFlagRefined = 1u,            // at least one step needed refinement
  kFlagSlipSuspect = 2u,        // refinement hit max depth, value suspect
  kFlagNearZetaPrimeZero = 4u,  // min |zeta'| along the leg below 0.01
};

std::string flags_to_string(unsigned flags);  // "REFINED|..." or "-"
unsigned flags_from_string(const std::string& text);

// One fully tracked zero.
struct PhaseRecord {
  std::int64_t k;
  double gamma;
  Complex zeta_prime;        // zeta'(1/2 + i gamma)
  std::int64_t winding;      // (continuous - principal) / 2pi
  double continuous_arg;     // arg zeta' at the zero, tracked from sigma=4
  double vertical_arg;       // tracked arg at the corner 4 + i gamma
  unsigned flags;
};

// arg zeta'(4 + i gamma) on the branch continued from gamma = 0 (value pi):
// pi - gamma log 2 + delta with |delta| small by sigma=4 leading-term
// dominance.  Throws CertificateViolation if the dominance bound fails.
double vertical_leg_arg(double gamma);

// Values of zeta at sigma + i gamma on a uniform sigma grid from
// sigma_start + 3 dx down to 1/2 - 3 dx (three guard points beyond each
// end of the leg for the stencil).  sigma_grid is ascending.
struct StencilTable {
  double gamma;
  double dx;
  std::vector<double> sigma_grid;
  std::vector<Complex> values;

  std::size_t first_interior() const { return 3; }
  std::size_t last_interior() const { return sigma_grid.size() - 4; }
};

// Builds the table with one shared Euler-Maclaurin cutoff: the n^{-i gamma}
// phases are computed once per n and the real factors n^{-sigma} advance by
// a fixed per-step multiplier, so the cost is one multiply-add per (term,
// grid point).  Requires gamma > 1 and dx evenly dividing
// sigma_start - 1/2.
StencilTable build_stencil_table(double gamma, const PathConfig& cfg = {},
                                 const EvalConfig& ecfg = {});

// Central 7-point, 6th-order first derivative:
//   (-f[-3] + 9 f[-2] - 45 f[-1] + 45 f[1] - 9 f[2] + f[3]) / (60 dx).
// Evaluation order is fixed for bit-reproducibility.
Complex stencil_deriv(std::span<const Complex, 7> f, double dx);

struct HorizontalResult {
  double arg;      // tracked arg zeta' at sigma = 1/2
  unsigned flags;
};

// Walks arg zeta' from (sigma_start, gamma) down to (1/2, gamma) by
// principal-value increments of the stencil derivative, refining any step
// at or above the slip threshold by midpoint halving (fresh zeta
// evaluations at spacing dx/2^depth).
HorizontalResult horizontal_leg_arg(const StencilTable& table,
                                    double start_arg,
                                    const PathConfig& cfg = {},
                                    const EvalConfig& ecfg = {});

// Full pipeline for one zero: closed-form vertical leg, tracked horizontal
// leg, then the winding snap against an accurate zeta'(rho).
// Requires cfg.sigma_start == 4 (the vertical certificate is specific to
// sigma = 4); throws NotAZero when |zeta(rho)| > 1e-6.
PhaseRecord phase_at_zero(const ZeroRecord& zero, const PathConfig& cfg = {},
                          const EvalConfig& ecfg = {});

// Continuous arg zeta(1/2 + it) along the same two-leg path (vertical leg
// contributes the principal arg at sigma_start by 1-dominance of the n = 1
// Dirichlet term).  Feeds the zero-counting identity.  Requires t > 1;
// throws EndpointAtZero when |zeta(1/2+it)| < 1e-8.
double track_zeta_arg(double t, const PathConfig& cfg = {},
                      const EvalConfig& ecfg = {});

}  // namespace zp
