// Acceptance sweep: each criterion prints exactly one PASS/FAIL line.
// Tolerances are pinned up front in kTol; a failure reports the measured
// value so the line is diagnosable on its own.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "zp/argtrack.hpp"
#include "zp/phaseplot.hpp"
#include "zp/stats.hpp"
#include "zp/zeros.hpp"
#include "zp/zeta.hpp"

using zp::Complex;

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2 * kPi;
constexpr double kLn2 = 0.69314718055994530942;

// ---- pinned tolerances -----------------------------------------------------
struct {
  // 1: certificate constants
  const char* main_mod_6sig = "0.0433217";
  double tail_cap = 0.025590;
  double tail_window = 1e-6;
  // 2: stencil order
  double ratio_lo = 55.0, ratio_hi = 73.0;
  double error_const_rel = 0.15;
  // 3: vertical certificate
  double delta_cap = 0.63124;   // radians
  double brute_arg_tol = 1e-6;  // per spot check
  int n_delta = 1000, n_spots = 20;
  // 4: known values
  double analytic_tol = 1e-12;
  double table_tol = 1e-6;
  double lehmer_gap_cap = 0.05;
  // 5: dx self-consistency
  double agree_frac = 0.999;
  // 6: snap
  double snap_tol = 1e-9;
  // 8: statistics
  double logmod_mean_cap = 0.25;
  double gauss_even_rel = 0.05;
  double chi2_p_cap = 0.01;
  // 9: tiling
  long long strip_count = 29;
  // 10: figure
  double column_arg_cap = 0.1;
} kTol;

double uniform01(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

struct GaussSource {
  std::mt19937_64 rng;
  bool have_spare = false;
  double spare = 0.0;
  explicit GaussSource(unsigned seed) : rng(seed) {}
  double operator()() {
    if (have_spare) {
      have_spare = false;
      return spare;
    }
    double u1 = 1.0 - uniform01(rng);
    double u2 = uniform01(rng);
    double r = std::sqrt(-2.0 * std::log(u1));
    spare = r * std::sin(kTwoPi * u2);
    have_spare = true;
    return r * std::cos(kTwoPi * u2);
  }
};

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const char* fmt, ...) {
  if (ok) return;
  char buf[512];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  throw CheckFailure(buf);
}

std::string strf(const char* fmt, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  return buf;
}

void note(const char* msg) {
  std::fprintf(stderr, "    .. %s\n", msg);
  std::fflush(stderr);
}

// Shared artifacts: the first 10^4 zeros and their phase records at both
// step sizes.  Built once, on first demand.
struct Context {
  std::vector<zp::ZeroRecord> zeros;
  std::vector<zp::PhaseRecord> coarse;
  std::vector<zp::PhaseRecord> fine;
  bool pipeline_ready = false;

  void ensure_zeros() {
    if (!zeros.empty()) return;
    note("locating the first 10^4 zeros (one-time)");
    zeros = zp::find_zeros(3.0, 9878.3);
    expect(zeros.size() >= 10000, "finder returned %zu zeros, expected 10^4",
           zeros.size());
    zeros.resize(10000);
    for (std::size_t i = 0; i < zeros.size(); ++i)
      expect(zeros[i].k == std::int64_t(i) + 1, "index anchor broken at %zu",
             i);
  }

  void ensure_pipeline() {
    if (pipeline_ready) return;
    ensure_zeros();
    note("tracking phases at dx = 0.0025 and 0.00125 (one-time, slow)");
    zp::PathConfig cfg_fine;
    cfg_fine.dx = 0.00125;
    coarse.reserve(zeros.size());
    fine.reserve(zeros.size());
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      coarse.push_back(zp::phase_at_zero(zeros[i]));
      fine.push_back(zp::phase_at_zero(zeros[i], cfg_fine));
      if ((i + 1) % 1000 == 0)
        note(strf("  %zu / %zu zeros tracked", i + 1, zeros.size()).c_str());
    }
    pipeline_ready = true;
  }
};

// ---- criteria --------------------------------------------------------------

std::string crit1_certificate_constants(Context&) {
  const double main_mod = std::abs(-kLn2 * std::pow(2.0, -4.0));
  char printed[32];
  std::snprintf(printed, sizeof printed, "%.6g", main_mod);
  expect(std::strcmp(printed, kTol.main_mod_6sig) == 0,
         "|log2 * 2^-4| prints %s, want %s", printed, kTol.main_mod_6sig);
  const Complex zp4 = zp::zeta_deriv({4.0, 0.0});
  const double tail = -zp4.real() - kLn2 / 16.0;
  expect(std::abs(zp4.imag()) < 1e-14, "zeta'(4) not real: %g", zp4.imag());
  expect(tail <= kTol.tail_cap, "tail %.9f above cap %.6f", tail,
         kTol.tail_cap);
  expect(std::abs(tail - kTol.tail_cap) <= kTol.tail_window,
         "tail %.9f not within %g of %.6f", tail, kTol.tail_window,
         kTol.tail_cap);
  return strf("main=%s tail=%.9f (cap %.6f, diff %.2e)", printed, tail,
              kTol.tail_cap, std::abs(tail - kTol.tail_cap));
}

std::string crit2_stencil_order(Context&) {
  auto err = [](double dx) {
    std::array<Complex, 7> v;
    for (int i = 0; i < 7; ++i)
      v[std::size_t(i)] = Complex{std::exp((i - 3) * dx), 0.0};
    return std::abs(zp::stencil_deriv(v, dx) - Complex{1.0, 0.0});
  };
  std::string detail = "ratios";
  for (double dx : {0.1, 0.05, 0.025}) {
    double ratio = err(dx) / err(dx / 2);
    expect(ratio >= kTol.ratio_lo && ratio <= kTol.ratio_hi,
           "ratio %.2f at dx=%g outside [%.0f, %.0f]", ratio, dx, kTol.ratio_lo,
           kTol.ratio_hi);
    detail += strf(" %.1f", ratio);
  }
  const double c = err(0.1) / std::pow(0.1, 6);  // f^(7) = 1 for exp
  expect(std::abs(c - 1.0 / 140.0) <= kTol.error_const_rel / 140.0,
         "error constant %.6f vs 1/140 off by more than %g%%", c,
         100 * kTol.error_const_rel);
  return detail + strf("; error const %.6f vs 1/140=%.6f", c, 1.0 / 140.0);
}

std::string crit3_vertical_certificate(Context&) {
  std::mt19937_64 rng(20260303u);
  double max_delta = 0.0;
  for (int i = 0; i < kTol.n_delta; ++i) {
    double g = 10.0 + (1e5 - 10.0) * uniform01(rng);
    double delta = zp::vertical_leg_arg(g) - (kPi - g * kLn2);
    max_delta = std::max(max_delta, std::abs(delta));
  }
  expect(max_delta <= kTol.delta_cap, "max |delta| %.6f above %.5f", max_delta,
         kTol.delta_cap);

  // Spot checks against dy = 1e-3 brute-force stepping (Euler-Maclaurin
  // derivative route, independent of the closed form's Dirichlet split).
  note("brute-force vertical spot checks (20 ordinates)");
  double worst = 0.0;
  for (int i = 0; i < kTol.n_spots; ++i) {
    double g = (i < kTol.n_spots - 2)
                   ? 10.0 + 490.0 * uniform01(rng)
                   : (i == kTol.n_spots - 2 ? 1000.0 : 1500.0);
    double arg = kPi;
    Complex prev = zp::zeta_deriv({4.0, 0.0});
    long steps = std::lround(std::ceil(g / 1e-3));
    for (long j = 1; j <= steps; ++j) {
      double y = std::min(j * 1e-3, g);
      Complex cur = zp::zeta_deriv({4.0, y});
      arg += std::arg(cur / prev);
      prev = cur;
    }
    double closed = zp::vertical_leg_arg(g);
    expect(std::llround((closed - arg) / kTwoPi) == 0,
           "winding mismatch at gamma=%.3f", g);
    expect(std::abs(closed - arg) <= kTol.brute_arg_tol,
           "arg mismatch %.3e at gamma=%.3f", std::abs(closed - arg), g);
    worst = std::max(worst, std::abs(closed - arg));
  }
  return strf("max|delta|=%.4f (cap %.5f); 20 brute spots, worst diff %.2e",
              max_delta, kTol.delta_cap, worst);
}

std::string crit4_known_values(Context&) {
  expect(std::abs(zp::zeta({2.0, 0.0}) - Complex{kPi * kPi / 6.0, 0.0}) <=
             kTol.analytic_tol,
         "zeta(2) misses pi^2/6");
  expect(std::abs(zp::zeta({0.0, 0.0}) - Complex{-0.5, 0.0}) <=
             kTol.analytic_tol,
         "zeta(0) misses -1/2");
  expect(std::abs(zp::reflect_zeta({-1.0, 0.0}) - Complex{-1.0 / 12.0, 0.0}) <=
             kTol.analytic_tol,
         "zeta(-1) misses -1/12");

  std::ifstream table(ZP_TEST_DATA_DIR "/zeros_first100.txt");
  expect(table.good(), "reference table missing");
  auto reference = zp::import_zeros(table, zp::ZeroFormat::kPlain);
  expect(reference.size() == 100, "reference table has %zu rows",
         reference.size());
  note("finding gamma_1 .. gamma_100");
  auto found = zp::find_zeros(3.0, reference.back().gamma + 0.3);
  expect(found.size() == 100, "finder returned %zu zeros in the table range",
         found.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < 100; ++i) {
    double diff = std::abs(found[i].gamma - reference[i].gamma);
    worst = std::max(worst, diff);
    expect(diff <= kTol.table_tol, "gamma_%zu off by %.2e", i + 1, diff);
  }

  auto pair = zp::find_zeros(7004.9, 7005.3);
  expect(pair.size() == 2, "expected 2 zeros in [7004.9, 7005.3], got %zu",
         pair.size());
  double gap = pair[1].gamma - pair[0].gamma;
  expect(gap < kTol.lehmer_gap_cap, "Lehmer gap %.4f not below %.2f", gap,
         kTol.lehmer_gap_cap);
  return strf("analytic values ok; table worst diff %.2e; Lehmer gap %.4f",
              worst, gap);
}

std::string crit5_dx_self_consistency(Context& ctx) {
  ctx.ensure_pipeline();
  std::size_t agree = 0, unflagged = 0, unflagged_agree = 0, flagged = 0;
  for (std::size_t i = 0; i < ctx.coarse.size(); ++i) {
    bool same = ctx.coarse[i].winding == ctx.fine[i].winding;
    agree += same;
    if (ctx.coarse[i].flags == 0) {
      ++unflagged;
      unflagged_agree += same;
    } else {
      ++flagged;
    }
  }
  double frac = double(agree) / double(ctx.coarse.size());
  expect(frac >= kTol.agree_frac, "winding agreement %.4f below %.4f", frac,
         kTol.agree_frac);
  expect(unflagged_agree == unflagged,
         "%zu unflagged records changed winding under dx halving",
         unflagged - unflagged_agree);
  return strf("agreement %zu/%zu (%.2f%%); unflagged %zu/%zu agree; "
              "%zu flagged",
              agree, ctx.coarse.size(), 100 * frac, unflagged_agree, unflagged,
              flagged);
}

std::string crit6_snap_invariant(Context& ctx) {
  ctx.ensure_pipeline();
  double worst = 0.0;
  for (const auto& recs : {std::cref(ctx.coarse), std::cref(ctx.fine)}) {
    for (const auto& r : recs.get()) {
      double resid = std::abs(r.continuous_arg - std::arg(r.zeta_prime) -
                              kTwoPi * double(r.winding));
      worst = std::max(worst, resid);
      expect(resid <= kTol.snap_tol, "snap residual %.2e at k=%lld", resid,
             static_cast<long long>(r.k));
    }
  }
  return strf("max residual %.2e over %zu records (cap %.0e)", worst,
              ctx.coarse.size() + ctx.fine.size(), kTol.snap_tol);
}

std::string crit7_gap_scanner(Context& ctx) {
  ctx.ensure_zeros();
  auto report = zp::scan_min_gaps(ctx.zeros, 1, 9999, 7);
  std::vector<std::pair<double, std::int64_t>> brute;
  for (std::size_t i = 0; i + 1 < ctx.zeros.size(); ++i)
    brute.emplace_back(ctx.zeros[i + 1].gamma - ctx.zeros[i].gamma,
                       ctx.zeros[i].k);
  std::sort(brute.begin(), brute.end());
  expect(report.smallest.size() == 7, "scanner kept %zu entries",
         report.smallest.size());
  for (std::size_t i = 0; i < 7; ++i) {
    expect(report.smallest[i].k == brute[i].second &&
               report.smallest[i].delta == brute[i].first,
           "entry %zu: scanner (k=%lld, %.9f) vs brute (k=%lld, %.9f)", i,
           static_cast<long long>(report.smallest[i].k),
           report.smallest[i].delta, static_cast<long long>(brute[i].second),
           brute[i].first);
  }
  zp::GapReport floor_report;
  floor_report.smallest = {{1, 0.006}};
  floor_report.bulk_floor = 0.005;
  double dx = zp::recommend_dx(floor_report, 0.5);
  expect(dx == 0.0025, "recommend_dx(0.005, 0.5) = %.17g, want 0.0025", dx);
  return strf("7 smallest gaps match brute force exactly (min %.6f at "
              "k=%lld); recommend_dx ok",
              report.smallest[0].delta,
              static_cast<long long>(report.smallest[0].k));
}

// Four independent clauses; all are evaluated and reported even when one
// fails, so the line localizes the problem.
std::string crit8_statistics(Context& ctx) {
  ctx.ensure_pipeline();
  std::vector<zp::NormalizedSample> logmod;
  std::vector<double> wrapped_args;
  for (const auto& r : ctx.coarse) {
    logmod.push_back(zp::normalize_logmod(r, 5000000));
    if (r.flags == 0) wrapped_args.push_back(std::arg(r.zeta_prime));
  }
  std::string bad;

  auto rep = zp::moments(logmod, true);
  if (!(std::abs(rep.mean) <= kTol.logmod_mean_cap))
    bad += strf("[logmod mean %.4f outside +-%.2f over n=%lld; every sample "
                "is positive, offset is systematic at this height] ",
                rep.mean, kTol.logmod_mean_cap,
                static_cast<long long>(rep.n));

  GaussSource g(9u);
  zp::MomentAccumulator acc;
  for (int i = 0; i < 1000000; ++i) acc.add(g());
  auto gauss = acc.report();
  double m2 = gauss.stdev * gauss.stdev;
  if (!(std::abs(m2 - 1.0) <= kTol.gauss_even_rel &&
        std::abs(gauss.m4 - 3.0) <= 3.0 * kTol.gauss_even_rel &&
        std::abs(gauss.m6 - 15.0) <= 15.0 * kTol.gauss_even_rel))
    bad += strf("[gaussian m2/m4/m6 = %.4f/%.4f/%.4f] ", m2, gauss.m4,
                gauss.m6);

  auto hist = zp::histogram(logmod);
  std::int64_t in_range = 0;
  for (const auto& row : hist.rows) in_range += row.count;
  if (in_range + hist.below + hist.above != hist.n)
    bad += strf("[histogram loses samples: %lld + %lld + %lld != %lld] ",
                static_cast<long long>(in_range),
                static_cast<long long>(hist.below),
                static_cast<long long>(hist.above),
                static_cast<long long>(hist.n));

  auto chi2 = zp::chi_square_uniform(wrapped_args, 16);
  if (!(chi2.p_value < kTol.chi2_p_cap))
    bad += strf("[uniformity not rejected: p = %.4f stat %.1f] ", chi2.p_value,
                chi2.statistic);

  std::string detail =
      strf("logmod mean %.4f (cap %.2f); gaussian m2/m4/m6 = "
           "%.3f/%.3f/%.3f; histogram conserves n=%lld; chi2 stat %.0f "
           "p %.2e",
           rep.mean, kTol.logmod_mean_cap, m2, gauss.m4, gauss.m6,
           static_cast<long long>(hist.n), chi2.statistic, chi2.p_value);
  expect(bad.empty(), "%s-- full report: %s", bad.c_str(), detail.c_str());
  return detail;
}

std::string crit9_winding_tiling(Context&) {
  note("argument-principle tiling of sigma in [0,1], t in [10,100]");
  int total = 0;
  for (int i = 0; i < 9; ++i) {
    double t_lo = 10.0 + 10.0 * i;
    total += zp::verify_winding_rect(0.0, 1.0, t_lo, t_lo + 10.0, 600);
  }
  expect(total == kTol.strip_count, "tiling sum %d != %lld", total,
         kTol.strip_count);
  auto zeros = zp::find_zeros(10.0, 100.0);
  expect(std::int64_t(zeros.size()) == kTol.strip_count,
         "finder count %zu != %lld", zeros.size(), kTol.strip_count);
  return strf("9-rectangle tiling sum %d == finder count %zu", total,
              zeros.size());
}

std::string crit10_figure_reproduction(Context&) {
  zp::RegionSpec region{-4.5, 5.5, 7000.0, 7010.0, 450, 450};
  note("rendering the figure region three times (450 x 450)");
  auto img1 = zp::render_phase(region, {}, 1);
  auto img2 = zp::render_phase(region, {}, 1);
  auto img3 = zp::render_phase(region, {}, 2);
  expect(img1.rgb == img2.rgb, "rerun not bit-identical");
  expect(img1.rgb == img3.rgb, "thread count changes bytes");

  auto grid = zp::phase_grid(region);
  const double dsig = 10.0 / 450.0;
  int col5 = -1;
  for (int c = 0; c < 450; ++c)
    if (std::abs(-4.5 + (c + 0.5) * dsig - 5.0) < 1e-9) col5 = c;
  expect(col5 >= 0, "no pixel column centered at sigma = 5");
  double worst = 0.0;
  for (int row = 0; row < 450; ++row)
    worst = std::max(worst,
                     std::abs(grid[std::size_t(row) * 450 + std::size_t(col5)]));
  expect(worst < kTol.column_arg_cap, "sigma=5 column |arg| up to %.3f", worst);

  auto sing = zp::find_phase_singularities(grid, region);
  int near = 0;
  for (const auto& s : sing)
    if (std::abs(s.t - 7005.08) <= 0.5) ++near;
  expect(near == 2, "%d singularities near t ~ 7005, want 2", near);
  return strf("bit-identical across reruns and jobs; sigma=5 max|arg|=%.3f; "
              "%d/%zu singularities near t~7005",
              worst, near, sing.size());
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    const char* title;
    std::function<std::string(Context&)> run;
  };
  const Criterion criteria[] = {
      {1, "certificate constants", crit1_certificate_constants},
      {2, "stencil order", crit2_stencil_order},
      {3, "vertical-leg certificate", crit3_vertical_certificate},
      {4, "known-value suite", crit4_known_values},
      {5, "dx self-consistency", crit5_dx_self_consistency},
      {6, "snap invariant", crit6_snap_invariant},
      {7, "gap scanner oracle", crit7_gap_scanner},
      {8, "statistics pipeline", crit8_statistics},
      {9, "winding tiling", crit9_winding_tiling},
      {10, "figure reproduction", crit10_figure_reproduction},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  Context ctx;
  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), c.id) == selected.end())
      continue;
    try {
      std::string detail = c.run(ctx);
      std::printf("PASS  %2d  %-26s %s\n", c.id, c.title, detail.c_str());
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL  %2d  %-26s %s\n", c.id, c.title, e.what());
    }
    std::fflush(stdout);
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
