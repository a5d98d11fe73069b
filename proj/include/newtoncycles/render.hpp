#ifndef NEWTONCYCLES_RENDER_HPP
#define NEWTONCYCLES_RENDER_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "newtoncycles/polynomial.hpp"

namespace newtoncycles {

/**
 * All complex roots, with multiplicity, by Newton iteration from a ring of
 * starting points plus deflation. Each root is polished against the
 * original polynomial to |p(r)| < 1e-10 max|a_k|. Throws
 * ConvergenceFailure otherwise.
 */
[[nodiscard]] std::vector<Complex> find_roots(const Polynomial& p);

struct Attractor {
  std::string name;
  /// One point for a root; every cycle point for a cycle.
  std::vector<Complex> points;
};

struct Window {
  Complex center{0.0};
  double width = 1.0;
  double height = 1.0;
};

struct RenderSpec {
  Polynomial poly;
  Relaxation h;
  Window window;
  int pixels_wide = 1;
  int pixels_high = 1;
  int max_iter = 200;
  double attract_tol = 1e-6;
  std::vector<Attractor> attractors;

  /// Throws InvalidArgument.
  void validate() const;
};

/// Roots of poly as singletons followed by the cycle as one attractor.
[[nodiscard]] RenderSpec make_render_spec(const Polynomial& poly,
                                          const std::vector<Complex>& cycle,
                                          const Window& window, int pixels_wide,
                                          int pixels_high, const Relaxation& h = {});

inline constexpr int kUnresolved = -1;

struct Classification {
  int label = kUnresolved;
  int iterations = 0;
};

/// Label of the first attractor the orbit of z0 comes within attract_tol of.
[[nodiscard]] Classification classify_point(const RenderSpec& spec, Complex z0);

struct BasinImage {
  int width = 0;
  int height = 0;
  /// Row-major from the top row; kUnresolved or an attractor index.
  std::vector<int> labels;
  std::vector<int> iterations;
  Window window;

  [[nodiscard]] int label_at(int col, int row) const {
    return labels[static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
                  static_cast<std::size_t>(col)];
  }
  [[nodiscard]] double resolved_fraction() const;
};

/// Complex sample at the center of pixel (col, row); row 0 is the top.
[[nodiscard]] Complex pixel_center(const Window& window, int width, int height, int col,
                                   int row) noexcept;

/// Pixel containing z, or {-1, -1} when z is outside the window.
[[nodiscard]] std::array<int, 2> pixel_of(const Window& window, int width, int height,
                                          Complex z) noexcept;

[[nodiscard]] BasinImage render_basins(const RenderSpec& spec);

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

struct Palette {
  std::vector<Rgb> labels;
  Rgb unresolved{0, 0, 0};

  [[nodiscard]] Rgb color_of(int label) const;
};

inline constexpr Rgb kCyclePurple{128, 0, 128};

/// Fixed hue sequence for root labels, purple for the cycle label.
[[nodiscard]] Palette default_palette(std::size_t root_count, int cycle_label);

/// P6 header followed by RGB triples, top row first.
[[nodiscard]] std::string encode_ppm(const BasinImage& img, const Palette& palette);

/// Throws IoError.
void write_ppm(const BasinImage& img, const Palette& palette, const std::filesystem::path& path);

}  // namespace newtoncycles

#endif  // NEWTONCYCLES_RENDER_HPP
