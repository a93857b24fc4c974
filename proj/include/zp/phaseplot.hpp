#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "zp/zeta.hpp"

namespace zp {

struct RegionSpec {
  double sigma_lo, sigma_hi;
  double t_lo, t_hi;
  int width_px, height_px;

  void validate() const;
};

// Principal arg zeta(s) sampled at pixel centers, row-major with row 0 at
// the top (t_hi).  Pixels with sigma < 1/2 evaluate through reflect_zeta.
// Pixels whose evaluation throws (pole neighborhood, singular chi) come
// back as NaN.
std::vector<double> phase_grid(const RegionSpec& region,
                               const EvalConfig& ecfg = {}, int jobs = 1);

struct PhaseImage {
  int width = 0, height = 0;
  std::vector<std::uint8_t> rgb;  // 3 bytes per pixel, row 0 = t_hi
};

// Domain coloring: hue = frac(arg/2pi + 1) on the HSV hexcone at S = V = 1,
// bytes rounded half-up.  NaN pixels are black.  Any parallel schedule
// yields identical bytes.
PhaseImage render_phase(const RegionSpec& region, const EvalConfig& ecfg = {},
                        int jobs = 1);

void write_ppm(std::ostream& out, const PhaseImage& image);

// Exposed for golden-file construction in tests.
void hue_to_rgb(double hue, std::uint8_t out[3]);

// Winding number of zeta around a circle (argument principle: the number
// of enclosed zeros minus poles).  Steps at or above pi/2 are refined by
// angular bisection.  ZeroOnContour if any sampled |zeta| <= 1e-8.
int verify_winding(Complex center, double radius, int samples,
                   const EvalConfig& ecfg = {});

// Rectangle-contour variant; rectangles tile, circles cannot, so this is
// what partition-of-a-region consistency checks use.
int verify_winding_rect(double sigma_lo, double sigma_hi, double t_lo,
                        double t_hi, int samples_per_edge,
                        const EvalConfig& ecfg = {});

struct Singularity {
  double sigma, t;
  int charge;  // +1 zeros, -1 poles (plaquette circulation / 2pi)
};

// Scans the 2x2 plaquettes of a phase grid for +-2pi circulation: zeros and
// poles sitting between pixel centers.
std::vector<Singularity> find_phase_singularities(
    const std::vector<double>& grid, const RegionSpec& region);

}  // namespace zp
