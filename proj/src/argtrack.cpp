#include "zp/argtrack.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "em_internal.hpp"
#include "tables.hpp"

namespace zp {

namespace {

using detail::kLn2;
using detail::kPi;
using detail::kTwoPi;

// |zeta'| below this anywhere on the leg flags the record: the tracked arg
// is formally fine but the derivative stencil loses accuracy near a zero
// of zeta'.
constexpr double kNearZeroThreshold = 0.01;

// Certificate constants for the sigma = 4 vertical leg: |n=2 term| and the
// bound on everything after it.
constexpr double kVerticalMainModulus = 0.0433217;
constexpr double kVerticalTailBound = 0.025590;

inline double principal_diff(Complex num, Complex den) {
  return std::arg(num / den);
}

// Fresh 7-point stencil derivative at arbitrary sigma and spacing h.
Complex fresh_deriv(double sigma, double gamma, double h,
                    const EvalConfig& ecfg) {
  Complex f[7];
  for (int k = -3; k <= 3; ++k)
    f[k + 3] = zeta(Complex(sigma + k * h, gamma), ecfg);
  return stencil_deriv(std::span<const Complex, 7>(f, 7), h);
}

struct RefineState {
  double gamma;
  const PathConfig* cfg;
  const EvalConfig* ecfg;
  unsigned flags = 0;
  double min_mod = std::numeric_limits<double>::infinity();
};

// Phase increment from sigma_hi down to sigma_lo for the stencil-derivative
// walk, halving the interval while the principal step stays at or above the
// slip threshold.
double refine_deriv_step(RefineState& st, double sigma_hi, double sigma_lo,
                         Complex w_hi, Complex w_lo, int depth) {
  const double d = principal_diff(w_lo, w_hi);
  if (std::abs(d) < st.cfg->slip_threshold) return d;
  if (depth >= st.cfg->max_refine_depth) {
    st.flags |= kFlagSlipSuspect;
    return d;
  }
  st.flags |= kFlagRefined;
  const double sigma_m = 0.5 * (sigma_hi + sigma_lo);
  const double h = 0.5 * (sigma_hi - sigma_lo);
  const Complex w_m = fresh_deriv(sigma_m, st.gamma, h, *st.ecfg);
  st.min_mod = std::min(st.min_mod, std::abs(w_m));
  return refine_deriv_step(st, sigma_hi, sigma_m, w_hi, w_m, depth + 1) +
         refine_deriv_step(st, sigma_m, sigma_lo, w_m, w_lo, depth + 1);
}

// Same halving walk on zeta values (for track_zeta_arg); exhaustion here is
// fatal because the counting identity depends on the result.
double refine_value_step(double sigma_hi, double sigma_lo, Complex v_hi,
                         Complex v_lo, int depth, double gamma,
                         const PathConfig& cfg, const EvalConfig& ecfg) {
  const double d = principal_diff(v_lo, v_hi);
  if (std::abs(d) < cfg.slip_threshold) return d;
  if (depth >= cfg.max_refine_depth)
    throw PhaseSlip("track_zeta_arg: refinement exhausted");
  const double sigma_m = 0.5 * (sigma_hi + sigma_lo);
  const Complex v_m = zeta(Complex(sigma_m, gamma), ecfg);
  return refine_value_step(sigma_hi, sigma_m, v_hi, v_m, depth + 1, gamma,
                           cfg, ecfg) +
         refine_value_step(sigma_m, sigma_lo, v_m, v_lo, depth + 1, gamma,
                           cfg, ecfg);
}

}  // namespace

void PathConfig::validate() const {
  if (!(dx > 0.0 && dx <= 0.01))
    throw DomainError("PathConfig: dx outside (0, 0.01]");
  if (!(sigma_start >= 2.0 && sigma_start <= 10.0))
    throw DomainError("PathConfig: sigma_start outside [2, 10]");
  if (!(slip_threshold > 0.0 && slip_threshold < kPi))
    throw DomainError("PathConfig: slip_threshold outside (0, pi)");
  if (max_refine_depth < 1 || max_refine_depth > 24)
    throw DomainError("PathConfig: max_refine_depth outside [1, 24]");
}

std::string flags_to_string(unsigned flags) {
  if (flags == 0) return "-";
  std::string out;
  auto append = [&](const char* name) {
    if (!out.empty()) out += '|';
    out += name;
  };
  if (flags & kFlagRefined) append("REFINED");
  if (flags & kFlagSlipSuspect) append("SLIP_SUSPECT");
  if (flags & kFlagNearZetaPrimeZero) append("NEAR_ZETA_PRIME_ZERO");
  return out;
}

unsigned flags_from_string(const std::string& text) {
  if (text.empty() || text == "-") return 0;
  unsigned flags = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t bar = text.find('|', pos);
    const std::string part =
        text.substr(pos, bar == std::string::npos ? bar : bar - pos);
    if (part == "REFINED")
      flags |= kFlagRefined;
    else if (part == "SLIP_SUSPECT")
      flags |= kFlagSlipSuspect;
    else if (part == "NEAR_ZETA_PRIME_ZERO")
      flags |= kFlagNearZetaPrimeZero;
    else
      throw DomainError("unknown flag name: " + part);
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  return flags;
}

double vertical_leg_arg(double gamma) {
  if (!std::isfinite(gamma) || gamma < 0.0)
    throw DomainError("vertical_leg_arg: requires gamma >= 0");

  // zeta'(4 + i gamma) = -log2 2^{-4-i gamma} (1 + r), |r| < tail/main < 1,
  // so the continuously tracked arg stays within asin(tail/main) of the
  // closed form pi - gamma log 2 inherited from the n = 2 term.
  const auto split = zeta_deriv_dirichlet_split(Complex(4.0, gamma), 1e-12);
  const double delta = principal_diff(split.value(), split.leading);
  const double bound =
      std::asin(kVerticalTailBound / kVerticalMainModulus) + 1e-6;
  if (!(std::abs(delta) <= bound))
    throw CertificateViolation("vertical_leg_arg: dominance bound exceeded");
  return kPi - gamma * kLn2 + delta;
}

Complex stencil_deriv(std::span<const Complex, 7> f, double dx) {
  if (!(dx > 0.0)) throw DomainError("stencil_deriv: requires dx > 0");
  // Fixed association; do not reorder (bit-reproducibility).
  return (f[6] - f[0] + 9.0 * (f[1] - f[5]) + 45.0 * (f[4] - f[2])) /
         (60.0 * dx);
}

StencilTable build_stencil_table(double gamma, const PathConfig& cfg,
                                 const EvalConfig& ecfg) {
  cfg.validate();
  ecfg.validate();
  if (!std::isfinite(gamma) || gamma <= 1.0)
    throw DomainError("build_stencil_table: requires gamma > 1");

  const double leg = cfg.sigma_start - 0.5;
  const double steps_real = leg / cfg.dx;
  const auto steps = std::int64_t(std::llround(steps_real));
  if (steps < 1 || std::abs(steps_real - double(steps)) > 1e-9)
    throw DomainError(
        "build_stencil_table: dx must evenly divide sigma_start - 1/2");

  StencilTable table;
  table.gamma = gamma;
  table.dx = cfg.dx;
  const std::size_t n_points = std::size_t(steps) + 7;
  table.sigma_grid.resize(n_points);
  for (std::size_t j = 0; j < n_points; ++j)
    table.sigma_grid[j] = 0.5 + (double(j) - 3.0) * cfg.dx;

  const int n_cut = detail::em_cutoff(gamma, ecfg);

  // One column of unit phases n^{-i gamma}; the real magnitudes n^{-sigma}
  // advance across the grid by the fixed factor n^{-dx}.
  std::vector<Complex> phase(n_cut);
  std::vector<double> mag(n_cut), step(n_cut);
  const double sigma0 = table.sigma_grid.front();
  for (int n = 1; n < n_cut; ++n) {
    const double ln = std::log(double(n));
    phase[n] = std::polar(1.0, -gamma * ln);
    mag[n] = std::exp(-sigma0 * ln);
    step[n] = std::exp(-cfg.dx * ln);
  }

  table.values.resize(n_points);
  const double target = ecfg.target_abs_error;
  for (std::size_t j = 0; j < n_points; ++j) {
    Complex acc = 0.0;
    for (int n = 1; n < n_cut; ++n) acc += mag[n] * phase[n];
    const Complex s(table.sigma_grid[j], gamma);
    const auto tail = detail::em_tail_value(s, n_cut, ecfg);
    acc += tail.value;
    if (tail.err_est > target * std::max(1.0, std::abs(acc)))
      throw AccuracyNotMet("build_stencil_table: tail estimate above target");
    table.values[j] = acc;
    for (int n = 2; n < n_cut; ++n) mag[n] *= step[n];
  }
  return table;
}

HorizontalResult horizontal_leg_arg(const StencilTable& table,
                                    double start_arg, const PathConfig& cfg,
                                    const EvalConfig& ecfg) {
  cfg.validate();
  ecfg.validate();
  if (table.sigma_grid.size() != table.values.size() ||
      table.sigma_grid.size() < 8)
    throw DomainError("horizontal_leg_arg: malformed stencil table");

  auto deriv_at = [&](std::size_t j) {
    return stencil_deriv(
        std::span<const Complex, 7>(table.values.data() + (j - 3), 7),
        table.dx);
  };

  RefineState st{table.gamma, &cfg, &ecfg};
  const std::size_t j_top = table.last_interior();
  const std::size_t j_bot = table.first_interior();

  Complex w_prev = deriv_at(j_top);
  st.min_mod = std::abs(w_prev);
  double acc = start_arg;
  for (std::size_t j = j_top; j-- > j_bot;) {
    const Complex w = deriv_at(j);
    const double mod = std::abs(w);
    st.min_mod = std::min(st.min_mod, mod);
    double d;
    if (mod == 0.0) {
      st.flags |= kFlagSlipSuspect;
      d = 0.0;
    } else {
      d = principal_diff(w, w_prev);
      if (std::abs(d) >= cfg.slip_threshold)
        d = refine_deriv_step(st, table.sigma_grid[j + 1],
                              table.sigma_grid[j], w_prev, w, 0);
    }
    acc += d;
    w_prev = w;
  }
  if (st.min_mod < kNearZeroThreshold) st.flags |= kFlagNearZetaPrimeZero;
  return {acc, st.flags};
}

PhaseRecord phase_at_zero(const ZeroRecord& zero, const PathConfig& cfg,
                          const EvalConfig& ecfg) {
  cfg.validate();
  ecfg.validate();
  if (cfg.sigma_start != 4.0)
    throw DomainError(
        "phase_at_zero: vertical certificate requires sigma_start == 4");

  const double gamma = zero.gamma;
  const Complex rho(0.5, gamma);
  const Complex z = zeta(rho, ecfg);
  if (std::abs(z) > 1e-6)
    throw NotAZero("phase_at_zero: |zeta(rho)| > 1e-6");

  const double vert = vertical_leg_arg(gamma);
  const StencilTable table = build_stencil_table(gamma, cfg, ecfg);
  const HorizontalResult hr = horizontal_leg_arg(table, vert, cfg, ecfg);

  const Complex zp = zeta_deriv(rho, ecfg);
  double principal = std::arg(zp);
  if (principal <= -kPi) principal += kTwoPi;  // convention (-pi, pi]
  const auto winding = std::int64_t(std::llround((hr.arg - principal) / kTwoPi));

  PhaseRecord rec;
  rec.k = zero.k;
  rec.gamma = gamma;
  rec.zeta_prime = zp;
  rec.winding = winding;
  rec.continuous_arg = principal + kTwoPi * double(winding);
  rec.vertical_arg = vert;
  rec.flags = hr.flags;
  return rec;
}

double track_zeta_arg(double t, const PathConfig& cfg,
                      const EvalConfig& ecfg) {
  cfg.validate();
  ecfg.validate();
  if (!std::isfinite(t) || t <= 1.0)
    throw DomainError("track_zeta_arg: requires t > 1");

  const Complex end = zeta(Complex(0.5, t), ecfg);
  if (std::abs(end) < 1e-8)
    throw EndpointAtZero("track_zeta_arg: zeta vanishes at 1/2 + it");

  const StencilTable table = build_stencil_table(t, cfg, ecfg);
  const std::size_t j_top = table.last_interior();
  const std::size_t j_bot = table.first_interior();

  // On the vertical leg Re zeta > 1 - (zeta(2)-1) > 0, so the continued
  // branch at sigma_start equals the principal value.
  Complex v_prev = table.values[j_top];
  double acc = std::arg(v_prev);
  for (std::size_t j = j_top; j-- > j_bot;) {
    const Complex v = table.values[j];
    double d = principal_diff(v, v_prev);
    if (std::abs(d) >= cfg.slip_threshold)
      d = refine_value_step(table.sigma_grid[j + 1], table.sigma_grid[j],
                            v_prev, v, 0, t, cfg, ecfg);
    acc += d;
    v_prev = v;
  }
  return acc;
}

}  // namespace zp
