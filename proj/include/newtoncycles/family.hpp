#ifndef NEWTONCYCLES_FAMILY_HPP
#define NEWTONCYCLES_FAMILY_HPP

#include <vector>

#include "newtoncycles/polynomial.hpp"

namespace newtoncycles {

/**
 * Real rational family
 *
 *   f_c(x) = ((d-1) c^d - (d-1) x^d) / ((d-1) c^d - d x^(d-1)),
 *
 * the Newton map of z^d - (d-1) c^d z + (d-1) c^d.
 */
class FamilyParams {
 public:
  FamilyParams(int d, double c);

  [[nodiscard]] int d() const noexcept { return d_; }
  [[nodiscard]] double c() const noexcept { return c_; }

  /// Smallest positive zero of the denominator,
  /// ((d-1)/d)^(1/(d-1)) * c^(d/(d-1)).
  [[nodiscard]] double pole_location() const noexcept;

 private:
  int d_;
  double c_;
};

/// Denominators smaller than this times max(1, c^d) abort with PoleError.
inline constexpr double kPoleGuard = 1e-13;

[[nodiscard]] double f_c(const FamilyParams& params, double x);

/**
 * [Q_1(c), ..., Q_n(c)] where Q_1 = 1 and
 * Q_{i+1} = (c^d - Q_i^d) / (c^d - (d/(d-1)) Q_i^(d-1)).
 *
 * At c = 0 returns the closed form ((d-1)/d)^(k-1). Throws PoleError
 * naming the index whose denominator vanished.
 */
[[nodiscard]] std::vector<double> q_sequence(int d, double c, int n);

struct BracketTable {
  int d = 0;
  /// c_1, c_2, ...: minimal positive roots of y^d - Q_k(y)^d.
  std::vector<double> c;
  /// b_1, b_2, ...: minimal positive roots of (d-1) y^d - d Q_k(y)^(d-1).
  std::vector<double> b;
};

struct BracketOptions {
  int initial_subintervals = 4096;
  int max_subintervals = 1 << 20;
  double bisection_tol = 1e-14;
};

/**
 * Interleaved minimal roots 0 < ... < c_k < b_k < c_{k-1} < ... < c_1 = 1 < b_1.
 *
 * Each root is located by a uniform scan for the first sign change
 * (resolution doubled while none is found) and refined by bisection.
 * Minimality holds only up to the scan resolution. Throws BracketFailure.
 */
[[nodiscard]] BracketTable find_brackets(int d, int k_max, const BracketOptions& opts = {});

/// Checks 0 < c_k < b_k < c_{k-1} < b_{k-1} < ... with every gap above margin.
[[nodiscard]] bool strictly_interleaved(const BracketTable& table, double margin = 0.0);

struct RealCycle {
  /// z_1 = 0, z_2 = 1, z_3, ..., z_n.
  std::vector<double> points;

  [[nodiscard]] std::vector<Complex> as_complex() const;
};

struct FamilyCycle {
  RealCycle cycle;
  FamilyParams params;
};

inline constexpr double kFamilyClosureTol = 1e-9;

/**
 * Real super-attracting n-cycle of f_c with c = c_{n-1}: z_i = f_c^{i-1}(0).
 * Throws BracketFailure, or OrderingViolation if 0 < z_n < ... < z_3 < 1
 * or closure fails.
 */
[[nodiscard]] FamilyCycle build_cycle(int d, int n, const BracketOptions& opts = {});

/// Same, reusing a precomputed table (needs table.c.size() >= n - 1).
[[nodiscard]] FamilyCycle build_cycle(const BracketTable& table, int n);

/// a * (z^d - (d-1) c^d z + (d-1) c^d)
[[nodiscard]] Polynomial family_polynomial(int d, double c, Complex a = 1.0);

}  // namespace newtoncycles

#endif  // NEWTONCYCLES_FAMILY_HPP
