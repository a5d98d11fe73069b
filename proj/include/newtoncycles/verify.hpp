#ifndef NEWTONCYCLES_VERIFY_HPP
#define NEWTONCYCLES_VERIFY_HPP

#include <span>
#include <vector>

#include "newtoncycles/polynomial.hpp"

namespace newtoncycles {

inline constexpr double kDefaultMultiplierTol = 1e-6;
inline constexpr double kDefaultClosureTol = 1e-7;

/// Product of N'_{p,h}(z_i) over the points. Propagates PoleError.
[[nodiscard]] Complex multiplier(const Polynomial& p, const Relaxation& h,
                                 std::span<const Complex> points);

struct CycleReport {
  /// |N(z_i) - z_{i+1}| per leg; +inf where the step hit a pole.
  std::vector<double> closure_errors;
  /// NaN when some point is a pole of the map.
  Complex multiplier{0.0};
  /// min_i |p(z_i)|
  double root_clearance = 0.0;
  bool distinct = false;
  bool super_attracting = false;
  double diameter = 0.0;
};

struct CheckOptions {
  /// Closure errors are compared against tol * cycle diameter.
  double closure_tol = kDefaultClosureTol;
  double multiplier_tol = kDefaultMultiplierTol;
  /// Relative to max|a_k| * max(1, |z|)^d.
  double root_tol = 1e-12;
  /// Relative to the cycle diameter.
  double separation_tol = 1e-9;
};

/**
 * Checks every leg of the claimed cycle independently, plus the
 * multiplier, root clearance, and pairwise distinctness. Never throws for
 * bad cycles; failures are carried in the report.
 */
[[nodiscard]] CycleReport check_cycle(const Polynomial& p, const Relaxation& h,
                                      std::span<const Complex> points,
                                      const CheckOptions& opts = {});

[[nodiscard]] inline CycleReport check_cycle(const Polynomial& p, const Relaxation& h,
                                             std::span<const Complex> points,
                                             double closure_tol) {
  CheckOptions opts;
  opts.closure_tol = closure_tol;
  return check_cycle(p, h, points, opts);
}

}  // namespace newtoncycles

#endif  // NEWTONCYCLES_VERIFY_HPP
