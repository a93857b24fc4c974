#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "zp/phaseplot.hpp"
#include "zp/zeros.hpp"

using zp::Complex;

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

TEST_CASE("hue_to_rgb primary colors and continuity") {
  std::uint8_t rgb[3];
  zp::hue_to_rgb(0.0, rgb);
  CHECK(rgb[0] == 255);
  CHECK(rgb[1] == 0);
  CHECK(rgb[2] == 0);
  zp::hue_to_rgb(1.0 / 3.0, rgb);
  CHECK(rgb[0] == 0);
  CHECK(rgb[1] == 255);
  CHECK(rgb[2] == 0);
  zp::hue_to_rgb(2.0 / 3.0, rgb);
  CHECK(rgb[0] == 0);
  CHECK(rgb[1] == 0);
  CHECK(rgb[2] == 255);
  zp::hue_to_rgb(0.5, rgb);
  CHECK(rgb[0] == 0);
  CHECK(rgb[1] == 255);
  CHECK(rgb[2] == 255);
  // The hexcone map is continuous in hue.
  std::uint8_t prev[3];
  zp::hue_to_rgb(0.0, prev);
  for (int i = 1; i < 1000; ++i) {
    zp::hue_to_rgb(i / 1000.0, rgb);
    for (int c = 0; c < 3; ++c)
      CHECK(std::abs(int(rgb[c]) - int(prev[c])) <= 2);
    std::copy(rgb, rgb + 3, prev);
  }
}

TEST_CASE("phase grid samples pixel centers, top row at t_hi") {
  zp::RegionSpec region{4.0, 6.0, 10.0, 12.0, 2, 2};
  auto grid = zp::phase_grid(region);
  REQUIRE(grid.size() == 4);
  CHECK(grid[0] == std::arg(zp::zeta({4.5, 11.5})));
  CHECK(grid[1] == std::arg(zp::zeta({5.5, 11.5})));
  CHECK(grid[2] == std::arg(zp::zeta({4.5, 10.5})));
  CHECK(grid[3] == std::arg(zp::zeta({5.5, 10.5})));
  // Left of the critical line the reflection route is used.
  zp::RegionSpec left{-2.0, 0.0, 10.0, 12.0, 1, 1};
  auto lgrid = zp::phase_grid(left);
  CHECK(lgrid[0] == std::arg(zp::reflect_zeta({-1.0, 11.0})));
}

TEST_CASE("pole pixel renders black") {
  zp::RegionSpec region{0.5, 1.5, -0.5, 0.5, 1, 1};
  auto grid = zp::phase_grid(region);
  REQUIRE(grid.size() == 1);
  CHECK(std::isnan(grid[0]));
  auto img = zp::render_phase(region);
  CHECK(img.rgb[0] == 0);
  CHECK(img.rgb[1] == 0);
  CHECK(img.rgb[2] == 0);
}

TEST_CASE("rendering is deterministic and schedule-independent") {
  zp::RegionSpec region{-1.0, 2.0, 7004.0, 7006.0, 24, 24};
  auto a = zp::render_phase(region, {}, 1);
  auto b = zp::render_phase(region, {}, 1);
  auto c = zp::render_phase(region, {}, 2);
  REQUIRE(a.rgb.size() == 24u * 24u * 3u);
  CHECK(a.rgb == b.rgb);
  CHECK(a.rgb == c.rgb);
}

TEST_CASE("ppm output format") {
  zp::PhaseImage img;
  img.width = 2;
  img.height = 1;
  img.rgb = {10, 20, 30, 40, 50, 60};
  std::ostringstream out;
  zp::write_ppm(out, img);
  std::string s = out.str();
  REQUIRE(s.size() == 11 + 6);
  CHECK(s.substr(0, 11) == "P6\n2 1\n255\n");
  CHECK(std::uint8_t(s[11]) == 10);
  CHECK(std::uint8_t(s[16]) == 60);
}

TEST_CASE("winding around known configurations") {
  CHECK(zp::verify_winding({0.5, oracle::kGamma1}, 0.3, 64) == 1);
  CHECK(zp::verify_winding({2.0, 50.0}, 0.3, 64) == 0);
  // Both members of the close pair near t = 7005.
  CHECK(zp::verify_winding({0.5, 7005.08}, 0.2, 64) == 2);
  // The pole counts with opposite orientation.
  CHECK(zp::verify_winding({1.0, 0.0}, 0.3, 64) == -1);
  // A trivial zero through the reflection route.
  CHECK(zp::verify_winding({-2.0, 0.0}, 0.5, 64) == 1);
}

TEST_CASE("winding contour hygiene") {
  CHECK_THROWS_AS((void)zp::verify_winding({0.5, oracle::kGamma1}, 1e-9, 64),
                  zp::ZeroOnContour);
  CHECK_THROWS_AS((void)zp::verify_winding({2.0, 50.0}, -0.1, 64),
                  zp::DomainError);
  CHECK_THROWS_AS((void)zp::verify_winding({2.0, 50.0}, 0.3, 4),
                  zp::DomainError);
  // Rectangle edge passing straight through a zero.
  CHECK_THROWS_AS(
      (void)zp::verify_winding_rect(0.0, 1.0, oracle::kGamma1, 20.0, 200),
      zp::ZeroOnContour);
}

TEST_CASE("rectangle winding tiles the strip") {
  CHECK(zp::verify_winding_rect(0.0, 1.0, 13.0, 15.0, 200) == 1);
  int lower = zp::verify_winding_rect(0.0, 1.0, 10.0, 20.0, 400);
  int upper = zp::verify_winding_rect(0.0, 1.0, 20.0, 30.0, 400);
  int whole = zp::verify_winding_rect(0.0, 1.0, 10.0, 30.0, 400);
  CHECK(lower + upper == whole);
  CHECK(whole == int(zp::find_zeros(10.0, 30.0).size()));
}

TEST_CASE("phase singularity scan separates the Lehmer pair") {
  zp::RegionSpec region{-0.5, 1.5, 7004.5, 7005.5, 40, 40};
  auto grid = zp::phase_grid(region);
  auto sing = zp::find_phase_singularities(grid, region);
  REQUIRE(sing.size() == 2);
  for (const auto& s : sing) {
    CHECK(s.charge == 1);
    CHECK(std::abs(s.sigma - 0.5) <= 0.06);
  }
  double t_lo = std::min(sing[0].t, sing[1].t);
  double t_hi = std::max(sing[0].t, sing[1].t);
  CHECK(std::abs(t_lo - oracle::kLehmerLo) <= 0.06);
  CHECK(std::abs(t_hi - oracle::kLehmerHi) <= 0.06);
}

TEST_CASE("phase singularity scan sees the pole with negative charge") {
  zp::RegionSpec region{0.5, 1.5, -0.5, 0.5, 20, 20};
  auto grid = zp::phase_grid(region);
  auto sing = zp::find_phase_singularities(grid, region);
  REQUIRE(sing.size() == 1);
  CHECK(sing[0].charge == -1);
  CHECK(std::abs(sing[0].sigma - 1.0) <= 0.06);
  CHECK(std::abs(sing[0].t) <= 0.06);
}

TEST_CASE("sigma = 5 column of the figure region is near-monochrome") {
  zp::RegionSpec region{4.5, 5.5, 7000.0, 7010.0, 1, 16};
  auto grid = zp::phase_grid(region);
  for (double a : grid) CHECK(std::abs(a) < 0.1);
}

TEST_CASE("horizontal banding spacing at sigma = -4") {
  zp::RegionSpec region{-4.5, -3.5, 7000.0, 7010.0, 1, 200};
  auto grid = zp::phase_grid(region);
  double total = 0.0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    double d = std::remainder(grid[i] - grid[i - 1], kTwoPi);
    total += std::abs(d);
  }
  double spacing = 10.0 / (total / kTwoPi);
  // 2pi / log(t/2pi) at t ~ 7005.
  CHECK(spacing > 0.8);
  CHECK(spacing < 1.0);
}

TEST_CASE("hue discontinuities only along cuts and at singularities") {
  // Zero-free, cut-free patch: arg stays near 0, no hue jumps.
  zp::RegionSpec calm{2.0, 4.0, 50.0, 52.0, 16, 16};
  auto grid = zp::phase_grid(calm);
  int jumps = 0;
  for (int row = 0; row < 16; ++row)
    for (int col = 1; col < 16; ++col) {
      double a = grid[std::size_t(row) * 16 + col - 1] / kTwoPi;
      double b = grid[std::size_t(row) * 16 + col] / kTwoPi;
      double d = std::abs(a - b);
      if (std::min(d, 1.0 - d) > 0.25) ++jumps;
    }
  CHECK(jumps == 0);
}

TEST_CASE("region validation") {
  zp::RegionSpec bad{2.0, 1.0, 0.0, 1.0, 4, 4};
  CHECK_THROWS_AS(bad.validate(), zp::DomainError);
  bad = {0.0, 1.0, 1.0, 0.0, 4, 4};
  CHECK_THROWS_AS(bad.validate(), zp::DomainError);
  bad = {0.0, 1.0, 0.0, 1.0, 0, 4};
  CHECK_THROWS_AS(bad.validate(), zp::DomainError);
  zp::RegionSpec region{0.0, 1.0, 0.0, 1.0, 2, 2};
  std::vector<double> wrong(5, 0.0);
  CHECK_THROWS_AS((void)zp::find_phase_singularities(wrong, region),
                  zp::DomainError);
}
