#include "zp/phaseplot.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <ostream>

#include "tables.hpp"
#include "zp/parallel.hpp"

namespace zp {

namespace {

using detail::kPi;
using detail::kTwoPi;

constexpr double kContourZeroTol = 1e-8;
constexpr int kMaxArcDepth = 20;

Complex zeta_at(Complex s, const EvalConfig& ecfg) {
  return s.real() < 0.5 ? reflect_zeta(s, ecfg) : zeta(s, ecfg);
}

// Continuous-arg increment along a contour segment, halving the parameter
// interval while the principal step is >= pi/2.
double arc_step(const std::function<Complex(double)>& point_at, double u_lo,
                double u_hi, Complex v_lo, Complex v_hi,
                const EvalConfig& ecfg, int depth) {
  const double d = std::arg(v_hi / v_lo);
  if (std::abs(d) < 0.5 * kPi) return d;
  if (depth >= kMaxArcDepth)
    throw AccuracyNotMet("verify_winding: arc refinement exhausted");
  const double u_m = 0.5 * (u_lo + u_hi);
  const Complex v_m = zeta_at(point_at(u_m), ecfg);
  if (std::abs(v_m) <= kContourZeroTol)
    throw ZeroOnContour("verify_winding: |zeta| <= 1e-8 on the contour");
  return arc_step(point_at, u_lo, u_m, v_lo, v_m, ecfg, depth + 1) +
         arc_step(point_at, u_m, u_hi, v_m, v_hi, ecfg, depth + 1);
}

int loop_winding(const std::function<Complex(double)>& point_at, int samples,
                 const EvalConfig& ecfg) {
  std::vector<Complex> vals(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    vals[i] = zeta_at(point_at(double(i) / samples), ecfg);
    if (std::abs(vals[i]) <= kContourZeroTol)
      throw ZeroOnContour("verify_winding: |zeta| <= 1e-8 on the contour");
  }
  double total = 0.0;
  for (int i = 0; i < samples; ++i) {
    const int j = (i + 1) % samples;
    total += arc_step(point_at, double(i) / samples, double(i + 1) / samples,
                      vals[i], vals[j], ecfg, 0);
  }
  const double turns = total / kTwoPi;
  const double nearest = std::round(turns);
  if (std::abs(turns - nearest) > 0.1)
    throw AccuracyNotMet("verify_winding: loop did not close to an integer");
  return int(nearest);
}

}  // namespace

void RegionSpec::validate() const {
  if (!(sigma_lo < sigma_hi) || !(t_lo < t_hi))
    throw DomainError("RegionSpec: requires sigma_lo < sigma_hi, t_lo < t_hi");
  if (width_px < 1 || height_px < 1)
    throw DomainError("RegionSpec: pixel counts must be >= 1");
}

std::vector<double> phase_grid(const RegionSpec& region,
                               const EvalConfig& ecfg, int jobs) {
  region.validate();
  ecfg.validate();
  const int w = region.width_px, h = region.height_px;
  const double dsig = (region.sigma_hi - region.sigma_lo) / double(w);
  const double dt = (region.t_hi - region.t_lo) / double(h);
  std::vector<double> grid(std::size_t(w) * std::size_t(h));

  parallel_for(std::size_t(h), jobs, [&](std::size_t row) {
    const double t = region.t_hi - (double(row) + 0.5) * dt;
    double* out = grid.data() + row * std::size_t(w);
    for (int col = 0; col < w; ++col) {
      const double sigma = region.sigma_lo + (double(col) + 0.5) * dsig;
      try {
        out[col] = std::arg(zeta_at(Complex(sigma, t), ecfg));
      } catch (const Error&) {
        out[col] = std::numeric_limits<double>::quiet_NaN();
      }
    }
  });
  return grid;
}

void hue_to_rgb(double hue, std::uint8_t out[3]) {
  const double h6 = hue * 6.0;
  int sector = int(std::floor(h6));
  if (sector > 5) sector = 5;
  if (sector < 0) sector = 0;
  const double f = h6 - double(sector);
  double r = 0, g = 0, b = 0;
  switch (sector) {
    case 0: r = 1;     g = f;     b = 0;     break;
    case 1: r = 1 - f; g = 1;     b = 0;     break;
    case 2: r = 0;     g = 1;     b = f;     break;
    case 3: r = 0;     g = 1 - f; b = 1;     break;
    case 4: r = f;     g = 0;     b = 1;     break;
    case 5: r = 1;     g = 0;     b = 1 - f; break;
  }
  out[0] = std::uint8_t(std::floor(255.0 * r + 0.5));
  out[1] = std::uint8_t(std::floor(255.0 * g + 0.5));
  out[2] = std::uint8_t(std::floor(255.0 * b + 0.5));
}

PhaseImage render_phase(const RegionSpec& region, const EvalConfig& ecfg,
                        int jobs) {
  const std::vector<double> grid = phase_grid(region, ecfg, jobs);
  PhaseImage image;
  image.width = region.width_px;
  image.height = region.height_px;
  image.rgb.resize(grid.size() * 3);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (std::isnan(grid[i])) {
      image.rgb[3 * i] = image.rgb[3 * i + 1] = image.rgb[3 * i + 2] = 0;
      continue;
    }
    double hue = grid[i] / kTwoPi + 1.0;
    hue -= std::floor(hue);
    hue_to_rgb(hue, &image.rgb[3 * i]);
  }
  return image;
}

void write_ppm(std::ostream& out, const PhaseImage& image) {
  out << "P6\n" << image.width << " " << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.rgb.data()),
            std::streamsize(image.rgb.size()));
  if (!out) throw IoError("write_ppm: stream write failed");
}

int verify_winding(Complex center, double radius, int samples,
                   const EvalConfig& ecfg) {
  ecfg.validate();
  if (!(radius > 0.0) || samples < 8)
    throw DomainError("verify_winding: requires radius > 0, samples >= 8");
  auto point_at = [center, radius](double u) {
    return center + std::polar(radius, kTwoPi * u);
  };
  return loop_winding(point_at, samples, ecfg);
}

int verify_winding_rect(double sigma_lo, double sigma_hi, double t_lo,
                        double t_hi, int samples_per_edge,
                        const EvalConfig& ecfg) {
  ecfg.validate();
  if (!(sigma_lo < sigma_hi) || !(t_lo < t_hi) || samples_per_edge < 2)
    throw DomainError("verify_winding_rect: malformed rectangle");
  // Counterclockwise: bottom, right, top, left.
  auto point_at = [=](double u) -> Complex {
    const double v = u * 4.0;
    if (v < 1.0) return {sigma_lo + (sigma_hi - sigma_lo) * v, t_lo};
    if (v < 2.0) return {sigma_hi, t_lo + (t_hi - t_lo) * (v - 1.0)};
    if (v < 3.0) return {sigma_hi - (sigma_hi - sigma_lo) * (v - 2.0), t_hi};
    return {sigma_lo, t_hi - (t_hi - t_lo) * (v - 3.0)};
  };
  return loop_winding(point_at, 4 * samples_per_edge, ecfg);
}

std::vector<Singularity> find_phase_singularities(
    const std::vector<double>& grid, const RegionSpec& region) {
  region.validate();
  const int w = region.width_px, h = region.height_px;
  if (grid.size() != std::size_t(w) * std::size_t(h))
    throw DomainError("find_phase_singularities: grid/region size mismatch");
  const double dsig = (region.sigma_hi - region.sigma_lo) / double(w);
  const double dt = (region.t_hi - region.t_lo) / double(h);

  auto wrap = [](double x) {
    double r = std::remainder(x, kTwoPi);
    if (r <= -kPi) r += kTwoPi;
    return r;
  };

  std::vector<Singularity> out;
  for (int row = 0; row + 1 < h; ++row) {
    for (int col = 0; col + 1 < w; ++col) {
      // Counterclockwise in the (sigma, t) plane; row+1 is the lower-t side.
      const double a = grid[std::size_t(row + 1) * w + col];
      const double b = grid[std::size_t(row + 1) * w + col + 1];
      const double c = grid[std::size_t(row) * w + col + 1];
      const double d = grid[std::size_t(row) * w + col];
      if (std::isnan(a) || std::isnan(b) || std::isnan(c) || std::isnan(d))
        continue;
      const double circ =
          wrap(b - a) + wrap(c - b) + wrap(d - c) + wrap(a - d);
      const int charge = int(std::lround(circ / kTwoPi));
      if (charge != 0)
        out.push_back({region.sigma_lo + double(col + 1) * dsig,
                       region.t_hi - double(row + 1) * dt, charge});
    }
  }
  return out;
}

}  // namespace zp
