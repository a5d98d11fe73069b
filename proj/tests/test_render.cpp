#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "newtoncycles/errors.hpp"
#include "newtoncycles/family.hpp"
#include "newtoncycles/render.hpp"
#include "newtoncycles/synthesis.hpp"

using namespace newtoncycles;

namespace {

bool contains_near(const std::vector<Complex>& roots, Complex want, double tol) {
  return std::any_of(roots.begin(), roots.end(), [&](Complex r) { return std::abs(r - want) < tol; });
}

// Label of the cycle attractor for a cubic: three roots come first.
constexpr int kCycle = 3;

RenderSpec family_spec(int w, int h) {
  const FamilyCycle fc = build_cycle(3, 5);
  return make_render_spec(family_polynomial(3, fc.params.c()), fc.cycle.as_complex(), Window{0.0, 1.5, 1.5}, w, h);
}

RenderSpec smale_spec(int w, int h) {
  const std::vector<Complex> cycle{0.0, 1.0};
  return make_render_spec(smale_polynomial(), cycle, Window{0.0, 4.0, 4.0}, w, h);
}

}  // namespace

TEST_CASE("find_roots simple cases") {
  const auto quad = find_roots(Polynomial({-1.0, 0.0, 1.0}));
  REQUIRE(quad.size() == 2);
  CHECK(contains_near(quad, 1.0, 1e-12));
  CHECK(contains_near(quad, -1.0, 1e-12));

  const auto smale = find_roots(smale_polynomial());
  REQUIRE(smale.size() == 3);
  CHECK(contains_near(smale, -1.76929235423863, 1e-12));
  CHECK(contains_near(smale, Complex(0.884646177119316, 0.589742805022206), 1e-12));
  CHECK(contains_near(smale, Complex(0.884646177119316, -0.589742805022206), 1e-12));

  // Triple root: accuracy limited to roughly eps^(1/3).
  const auto triple = find_roots(Polynomial({-8.0, 12.0, -6.0, 1.0}));
  REQUIRE(triple.size() == 3);
  for (const Complex& r : triple) CHECK(std::abs(r - 2.0) < 1e-4);

  CHECK_THROWS_AS((void)find_roots(Polynomial::constant(1.0)), Error);
}

TEST_CASE("property: find_roots returns a full root set of random polynomials") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 7;
    std::vector<Complex> coeffs;
    for (int k = 0; k <= d; ++k) coeffs.emplace_back(u(rng), u(rng));
    const Polynomial p(coeffs);
    const auto roots = find_roots(p);
    REQUIRE(roots.size() == static_cast<std::size_t>(d));
    for (const Complex& r : roots) CHECK(std::abs(p(r)) < 1e-10 * p.max_abs_coeff() * std::max(1.0, std::pow(std::abs(r), d)));
  }
}

TEST_CASE("make_render_spec lists roots then the cycle") {
  const RenderSpec spec = smale_spec(8, 8);
  REQUIRE(spec.attractors.size() == 4);
  CHECK(spec.attractors[0].name == "root0");
  CHECK(spec.attractors[3].name == "cycle");
  CHECK(spec.attractors[3].points.size() == 2);
  CHECK_NOTHROW(spec.validate());

  RenderSpec bad = spec;
  bad.max_iter = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = spec;
  bad.window.width = 0.0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = spec;
  bad.pixels_wide = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("classify_point examples") {
  RenderSpec spec = smale_spec(8, 8);
  // 0 is a cycle point: captured before any step.
  const Classification c0 = classify_point(spec, 0.0);
  CHECK(c0.label == kCycle);
  CHECK(c0.iterations == 0);
  CHECK(classify_point(spec, 1.0).label == kCycle);

  const Classification nearby = classify_point(spec, 1e-3);
  CHECK(nearby.label == kCycle);

  // A real start far left converges to the real root.
  const Classification left = classify_point(spec, -3.0);
  REQUIRE(left.label >= 0);
  REQUIRE(left.label < 3);
  CHECK(std::abs(spec.attractors[static_cast<std::size_t>(left.label)].points[0].real() + 1.76929235423863) < 1e-9);

  spec.max_iter = 0;
  CHECK(classify_point(spec, 0.0).label == kCycle);
  CHECK(classify_point(spec, -3.0).label == kUnresolved);

  // Starting at a critical point of p lands on a pole of the Newton map.
  RenderSpec pole = make_render_spec(Polynomial({1.0, 0.0, 1.0}), {}, Window{0.0, 2.0, 2.0}, 2, 2);
  CHECK(classify_point(pole, 0.0).label == kUnresolved);
}

TEST_CASE("pixel geometry") {
  const Window w{Complex(1.0, -1.0), 2.0, 4.0};
  CHECK(pixel_center(w, 1, 1, 0, 0) == Complex(1.0, -1.0));
  const Complex top_left = pixel_center(w, 2, 2, 0, 0);
  CHECK(std::abs(top_left - Complex(0.5, 0.0)) < 1e-15);
  CHECK(std::abs(pixel_center(w, 2, 2, 1, 1) - Complex(1.5, -2.0)) < 1e-15);
  const auto px = pixel_of(w, 2, 2, Complex(1.5, -2.0));
  CHECK(px[0] == 1);
  CHECK(px[1] == 1);
  CHECK(pixel_of(w, 2, 2, Complex(10.0, 0.0))[0] == -1);
}

TEST_CASE("render 1x1 at a cycle point") {
  RenderSpec spec = make_render_spec(smale_polynomial(), {0.0, 1.0}, Window{0.0, 1e-3, 1e-3}, 1, 1);
  const BasinImage img = render_basins(spec);
  REQUIRE(img.labels.size() == 1);
  CHECK(img.label_at(0, 0) == kCycle);
  CHECK(img.resolved_fraction() == 1.0);
}

TEST_CASE("PPM bytes") {
  RenderSpec spec = make_render_spec(smale_polynomial(), {0.0, 1.0}, Window{0.0, 1e-3, 1e-3}, 1, 1);
  const Palette palette = default_palette(3, 3);
  const std::string one = encode_ppm(render_basins(spec), palette);
  const std::string header = "P6\n1 1\n255\n";
  REQUIRE(one.size() == header.size() + 3);
  CHECK(one.substr(0, header.size()) == header);
  CHECK(static_cast<unsigned char>(one[header.size()]) == 128);
  CHECK(static_cast<unsigned char>(one[header.size() + 1]) == 0);
  CHECK(static_cast<unsigned char>(one[header.size() + 2]) == 128);

  spec.pixels_wide = 2;
  spec.pixels_high = 2;
  const std::string four = encode_ppm(render_basins(spec), palette);
  const std::string header2 = "P6\n2 2\n255\n";
  REQUIRE(four.size() == header2.size() + 12);
  for (std::size_t i = 0; i < 12; i += 3) CHECK(four.substr(header2.size() + i, 3) == one.substr(header.size(), 3));

  const auto path = std::filesystem::temp_directory_path() / "newtoncycles_test_render.ppm";
  write_ppm(render_basins(spec), palette, path);
  std::ifstream in(path, std::ios::binary);
  const std::string disk((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(disk == four);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(write_ppm(render_basins(spec), palette, "/nonexistent-dir/x.ppm"), Error);
}

TEST_CASE("palette") {
  const Palette p = default_palette(3, 3);
  CHECK(p.color_of(3) == kCyclePurple);
  CHECK(p.color_of(kUnresolved) == p.unresolved);
  CHECK_FALSE(p.color_of(0) == p.color_of(1));
  CHECK_FALSE(p.color_of(0) == kCyclePurple);
}

TEST_CASE("render is deterministic") {
  const RenderSpec spec = smale_spec(32, 32);
  const BasinImage a = render_basins(spec);
  const BasinImage b = render_basins(spec);
  CHECK(a.labels == b.labels);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("property: the pixel containing each cycle point carries the cycle label") {
  // Half a pixel diagonal (0.011) is inside the basin disk around 1 (radius ~0.015).
  const RenderSpec spec = smale_spec(256, 256);
  const BasinImage img = render_basins(spec);
  for (const Complex& z : spec.attractors.back().points) {
    const auto px = pixel_of(spec.window, img.width, img.height, z);
    REQUIRE(px[0] >= 0);
    CHECK(img.label_at(px[0], px[1]) == kCycle);
  }
  CHECK(img.resolved_fraction() > 0.99);
}

TEST_CASE("property: resolved labels are stable under a larger iteration budget") {
  for (RenderSpec spec : {family_spec(64, 64), smale_spec(64, 64)}) {
    const BasinImage base = render_basins(spec);
    spec.max_iter *= 2;
    const BasinImage more = render_basins(spec);
    for (std::size_t i = 0; i < base.labels.size(); ++i) {
      if (base.labels[i] != kUnresolved) CHECK(more.labels[i] == base.labels[i]);
    }
  }
}

TEST_CASE("family d = 3, n = 5 basins") {
  const FamilyCycle fc = build_cycle(3, 5);
  const Polynomial p = family_polynomial(3, fc.params.c());
  const auto cycle = fc.cycle.as_complex();

  const RenderSpec main_view = family_spec(256, 256);
  CHECK(classify_point(main_view, 0.0).label == kCycle);
  const BasinImage img = render_basins(main_view);
  CHECK(img.resolved_fraction() >= 0.99);
  // Cycle-labelled pixels sit on the real axis between 0 and 1.
  long on_segment = 0;
  for (int row = 0; row < img.height; ++row) {
    for (int col = 0; col < img.width; ++col) {
      if (img.label_at(col, row) != kCycle) continue;
      const Complex z = pixel_center(img.window, img.width, img.height, col, row);
      if (z.real() > -0.05 && z.real() < 1.0 && std::abs(z.imag()) < 0.05) ++on_segment;
    }
  }
  CHECK(on_segment > 0);

  // Closeup around the base of the flower.
  const Window closeup{Complex(0.1025, 0.0), 0.305, 0.25};
  const BasinImage zoom = render_basins(make_render_spec(p, cycle, closeup, 128, 128));
  CHECK(std::count(zoom.labels.begin(), zoom.labels.end(), kCycle) > 0);
  int inside = 0;
  for (const Complex& z : cycle) {
    const auto px = pixel_of(closeup, zoom.width, zoom.height, z);
    if (px[0] < 0) continue;
    ++inside;
    CHECK(zoom.label_at(px[0], px[1]) == kCycle);
  }
  CHECK(inside == 2);
}
