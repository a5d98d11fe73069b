#ifndef NEWTONCYCLES_SYNTHESIS_HPP
#define NEWTONCYCLES_SYNTHESIS_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "newtoncycles/linalg.hpp"
#include "newtoncycles/polynomial.hpp"

namespace newtoncycles {

inline constexpr double kDefaultSeparationTol = 1e-9;
inline constexpr double kDefaultRankTol = 1e-10;

/// Largest pairwise distance between points.
[[nodiscard]] double diameter(std::span<const Complex> points) noexcept;

/**
 * Ordered list of n >= 2 pairwise distinct points; indices wrap so the
 * successor of the last point is the first.
 *
 * Construction throws DistinctnessError when two points are closer than
 * separation_tol times the cycle diameter.
 */
class Cycle {
 public:
  explicit Cycle(std::vector<Complex> points,
                 double separation_tol = kDefaultSeparationTol);

  [[nodiscard]] std::span<const Complex> points() const noexcept { return points_; }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] const Complex& operator[](std::size_t i) const noexcept {
    return points_[i];
  }
  [[nodiscard]] const Complex& next(std::size_t i) const noexcept {
    return points_[(i + 1) % points_.size()];
  }
  [[nodiscard]] double diameter() const noexcept {
    return newtoncycles::diameter(points_);
  }
  /// Same cycle started at index k.
  [[nodiscard]] Cycle rotated(std::size_t k) const;

 private:
  std::vector<Complex> points_;
};

/// Linear system whose kernel holds coefficient vectors <a_0, ..., a_d>.
struct CycleMatrix {
  Matrix b;
  std::size_t n;
  int d;
  Relaxation h;
};

/**
 * Rows 0..n-1: (z_i - z_{i+1}) z_i' - h z_i over monomials 1, z, ..., z^d,
 * i.e. N_{p,h}(z_i) = z_{i+1}. Row n: (z_1 - z_2)^2 z_1'' - h(h - 1) z_1,
 * which forces the relaxed multiplier factor at z_1 to vanish.
 */
[[nodiscard]] CycleMatrix build_cycle_matrix(const Cycle& omega, int d,
                                             const Relaxation& h = {});

/// Plain-Newton system with the bare z_1'' last row (p''(z_1) = 0).
[[nodiscard]] CycleMatrix build_plain_cycle_matrix(const Cycle& omega, int d);

/// Row of monomial coefficients for the k-th derivative at z: (z^j)^(k).
[[nodiscard]] std::vector<Complex> monomial_row(Complex z, int d, int derivative_order);

struct SynthesisOptions {
  double rank_tol = kDefaultRankTol;
  double zero_coeff_tol = kDefaultZeroCoeffTol;
};

/**
 * Monic polynomial of degree at most d whose relaxed Newton map has omega
 * as a super-attracting cycle.
 *
 * Picks the nullspace vector whose free variable is the highest-degree
 * free column, then divides by its leading coefficient. d defaults to n+1.
 * Throws NoSolution (trivial kernel or zero polynomial) or
 * ConstantSolution.
 */
[[nodiscard]] Polynomial synthesize(const Cycle& omega, const Relaxation& h = {},
                                    std::optional<int> d = std::nullopt,
                                    const SynthesisOptions& opts = {});

/// T(z) = a z + b with a != 0.
class AffineMap {
 public:
  AffineMap(Complex a, Complex b);
  static AffineMap identity() { return {1.0, 0.0}; }

  [[nodiscard]] Complex a() const noexcept { return a_; }
  [[nodiscard]] Complex b() const noexcept { return b_; }
  [[nodiscard]] Complex operator()(Complex z) const noexcept { return a_ * z + b_; }
  [[nodiscard]] Complex inverse(Complex w) const noexcept { return (w - b_) / a_; }
  [[nodiscard]] AffineMap inverse_map() const { return {1.0 / a_, -b_ / a_}; }

 private:
  Complex a_;
  Complex b_;
};

/// T(z) = (z_2 - z_1) z + z_1 and the cycle {0, 1, T^-1(z_3), ...}.
[[nodiscard]] std::pair<AffineMap, Cycle> normalize_cycle(const Cycle& omega);

/// Coefficients of p(T(z)).
[[nodiscard]] Polynomial conjugate_poly(const Polynomial& p, const AffineMap& t);

/// z^3 - 2z + 2.
[[nodiscard]] Polynomial smale_polynomial();

struct CubicTwoCycleVerdict {
  bool conjugate_to_smale = false;
  /// q(T(z)) = scalar * (z^3 - 2z + 2) for the matching labeling.
  Complex scalar{0.0};
  /// Index (0 or 1) of the input point mapped to 0 by the matching T.
  int base_point = -1;
  AffineMap normalization = AffineMap::identity();
};

/**
 * For a cubic q with super-attracting 2-cycle {w1, w2}, tests whether
 * q o T is a scalar multiple of z^3 - 2z + 2 for T sending 0, 1 to the
 * cycle in either order. Throws NotACycle if {w1, w2} fails verification.
 */
[[nodiscard]] CubicTwoCycleVerdict classify_cubic_two_cycle(const Polynomial& q,
                                                            Complex w1, Complex w2,
                                                            double rel_tol = 1e-8);

}  // namespace newtoncycles

#endif  // NEWTONCYCLES_SYNTHESIS_HPP
