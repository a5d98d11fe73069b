#include "newtoncycles/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "newtoncycles/errors.hpp"

namespace newtoncycles {

namespace {

// Synthetic division by (z - root); drops the remainder.
std::vector<Complex> deflate(const std::vector<Complex>& coeffs, Complex root) {
  const std::size_t d = coeffs.size() - 1;
  std::vector<Complex> out(d);
  Complex carry = coeffs[d];
  for (std::size_t k = d; k-- > 0;) {
    out[k] = carry;
    carry = coeffs[k] + carry * root;
  }
  return out;
}

std::pair<Complex, Complex> value_and_slope(const std::vector<Complex>& coeffs, Complex z) {
  Complex v{0.0};
  Complex s{0.0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    s = s * z + v;
    v = v * z + *it;
  }
  return {v, s};
}

// Evaluation error bound for Horner at z; below it |p(z)| is noise.
double rounding_floor(const std::vector<Complex>& coeffs, Complex z) {
  double acc = 0.0;
  const double r = std::abs(z);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + std::abs(*it);
  return 8.0 * static_cast<double>(coeffs.size()) * std::numeric_limits<double>::epsilon() * acc;
}

// Plain Newton on coeffs from start; nullopt if it stalls or wanders.
std::optional<Complex> newton_root(const std::vector<Complex>& coeffs, Complex z, int budget) {
  for (int it = 0; it < budget; ++it) {
    const auto [v, s] = value_and_slope(coeffs, z);
    if (std::abs(v) <= rounding_floor(coeffs, z)) return z;
    if (s == Complex{0.0}) return std::nullopt;
    const Complex step = v / s;
    z -= step;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return std::nullopt;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) return z;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Complex> find_roots(const Polynomial& p) {
  const int degree = p.degree();
  if (degree < 1) {
    throw Error(ErrorKind::InvalidArgument, "find_roots needs degree >= 1");
  }
  const Polynomial trimmed = p.trimmed();
  const std::vector<Complex> original(trimmed.coeffs().begin(), trimmed.coeffs().end());
  const double target = 1e-10 * trimmed.max_abs_coeff();

  std::vector<Complex> work = original;
  std::vector<Complex> roots;
  while (work.size() > 1) {
    // Cauchy bound on the deflated polynomial.
    double radius = 0.0;
    for (std::size_t k = 0; k + 1 < work.size(); ++k) {
      radius = std::max(radius, std::abs(work[k] / work.back()));
    }
    radius = 1.0 + radius;

    std::optional<Complex> found;
    constexpr int kStarts = 24;
    for (int s = 0; s < kStarts && !found; ++s) {
      const double scale = (s % 2 == 0) ? 0.5 : 1.0;
      const double angle = 0.37 + 2.0 * std::numbers::pi * s / kStarts;
      found = newton_root(work, std::polar(scale * radius, angle), 500);
    }
    if (!found) {
      throw Error(ErrorKind::ConvergenceFailure,
                  "root " + std::to_string(roots.size() + 1) + " of " +
                      std::to_string(degree) + " not located");
    }

    // Polish against the undeflated polynomial; keep the better point.
    Complex r = *found;
    if (auto polished = newton_root(original, r, 100)) {
      if (std::abs(value_and_slope(original, *polished).first) <=
          std::abs(value_and_slope(original, r).first)) {
        r = *polished;
      }
    }
    if (!(std::abs(value_and_slope(original, r).first) < target)) {
      throw Error(ErrorKind::ConvergenceFailure,
                  "root near (" + std::to_string(r.real()) + ", " + std::to_string(r.imag()) +
                      ") did not polish below tolerance");
    }
    roots.push_back(r);
    work = deflate(work, r);
  }
  return roots;
}

void RenderSpec::validate() const {
  if (poly.degree() < 1) throw Error(ErrorKind::InvalidArgument, "render needs a nonconstant polynomial");
  if (pixels_wide < 1 || pixels_high < 1) throw Error(ErrorKind::InvalidArgument, "resolution must be at least 1x1");
  if (max_iter < 1) throw Error(ErrorKind::InvalidArgument, "max_iter must be at least 1");
  if (!(attract_tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "attract_tol must be positive");
  if (!(window.width > 0.0) || !(window.height > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "window extent must be positive");
  }
}

RenderSpec make_render_spec(const Polynomial& poly, const std::vector<Complex>& cycle,
                            const Window& window, int pixels_wide, int pixels_high,
                            const Relaxation& h) {
  RenderSpec spec{poly, h, window, pixels_wide, pixels_high, 200, 1e-6, {}};
  int index = 0;
  for (const Complex& r : find_roots(poly)) {
    spec.attractors.push_back({"root" + std::to_string(index++), {r}});
  }
  if (!cycle.empty()) spec.attractors.push_back({"cycle", cycle});
  return spec;
}

Classification classify_point(const RenderSpec& spec, Complex z0) {
  Complex z = z0;
  for (int it = 0;; ++it) {
    for (std::size_t a = 0; a < spec.attractors.size(); ++a) {
      for (const Complex& target : spec.attractors[a].points) {
        if (std::abs(z - target) < spec.attract_tol) return {static_cast<int>(a), it};
      }
    }
    if (it >= spec.max_iter) return {kUnresolved, it};
    try {
      z = newton_step(spec.poly, spec.h, z);
    } catch (const Error&) {
      return {kUnresolved, it};
    }
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return {kUnresolved, it};
  }
}

double BasinImage::resolved_fraction() const {
  if (labels.empty()) return 0.0;
  const auto resolved = std::count_if(labels.begin(), labels.end(), [](int l) { return l != kUnresolved; });
  return static_cast<double>(resolved) / static_cast<double>(labels.size());
}

Complex pixel_center(const Window& window, int width, int height, int col, int row) noexcept {
  const double x = window.center.real() - 0.5 * window.width + (col + 0.5) * window.width / width;
  const double y = window.center.imag() + 0.5 * window.height - (row + 0.5) * window.height / height;
  return {x, y};
}

std::array<int, 2> pixel_of(const Window& window, int width, int height, Complex z) noexcept {
  const double u = (z.real() - (window.center.real() - 0.5 * window.width)) / window.width * width;
  const double v = ((window.center.imag() + 0.5 * window.height) - z.imag()) / window.height * height;
  const int col = static_cast<int>(std::floor(u));
  const int row = static_cast<int>(std::floor(v));
  if (col < 0 || col >= width || row < 0 || row >= height) return {-1, -1};
  return {col, row};
}

BasinImage render_basins(const RenderSpec& spec) {
  spec.validate();
  BasinImage img;
  img.width = spec.pixels_wide;
  img.height = spec.pixels_high;
  img.window = spec.window;
  const std::size_t count = static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height);
  img.labels.resize(count);
  img.iterations.resize(count);
  for (int row = 0; row < img.height; ++row) {
    for (int col = 0; col < img.width; ++col) {
      const auto c = classify_point(spec, pixel_center(spec.window, img.width, img.height, col, row));
      const std::size_t idx = static_cast<std::size_t>(row) * static_cast<std::size_t>(img.width) +
                              static_cast<std::size_t>(col);
      img.labels[idx] = c.label;
      img.iterations[idx] = c.iterations;
    }
  }
  return img;
}

Rgb Palette::color_of(int label) const {
  if (label == kUnresolved || label < 0 || static_cast<std::size_t>(label) >= labels.size()) {
    return unresolved;
  }
  return labels[static_cast<std::size_t>(label)];
}

Palette default_palette(std::size_t root_count, int cycle_label) {
  static constexpr std::array<Rgb, 6> kHues{{
      {230, 60, 50},
      {60, 170, 75},
      {50, 110, 220},
      {240, 200, 40},
      {40, 200, 210},
      {245, 130, 40},
  }};
  Palette palette;
  const std::size_t total = std::max(root_count, cycle_label >= 0 ? static_cast<std::size_t>(cycle_label) + 1 : 0);
  for (std::size_t i = 0; i < total; ++i) palette.labels.push_back(kHues[i % kHues.size()]);
  if (cycle_label >= 0) palette.labels[static_cast<std::size_t>(cycle_label)] = kCyclePurple;
  return palette;
}

std::string encode_ppm(const BasinImage& img, const Palette& palette) {
  std::string out = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  out.reserve(out.size() + img.labels.size() * 3);
  for (const int label : img.labels) {
    const Rgb c = palette.color_of(label);
    out.push_back(static_cast<char>(c.r));
    out.push_back(static_cast<char>(c.g));
    out.push_back(static_cast<char>(c.b));
  }
  return out;
}

void write_ppm(const BasinImage& img, const Palette& palette, const std::filesystem::path& path) {
  const std::string bytes = encode_ppm(img, palette);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!file) throw Error(ErrorKind::IoError, "write to " + path.string() + " failed");
}

}  // namespace newtoncycles
