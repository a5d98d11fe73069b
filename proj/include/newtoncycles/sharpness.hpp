#ifndef NEWTONCYCLES_SHARPNESS_HPP
#define NEWTONCYCLES_SHARPNESS_HPP

#include <vector>

#include "newtoncycles/linalg.hpp"
#include "newtoncycles/polynomial.hpp"
#include "newtoncycles/synthesis.hpp"
#include "newtoncycles/verify.hpp"

namespace newtoncycles {

inline constexpr int kMaxCertifiedCycleLength = 12;

/// {zeta, zeta^2, ..., zeta^n = 1} with zeta = exp(2 pi i / n).
[[nodiscard]] Cycle roots_of_unity_cycle(int n);

/// v_ij = zeta^(i (j-1)), 1-based i, j.
[[nodiscard]] Matrix roots_of_unity_vandermonde(int n);

/// d_jj = (j-2) - (j-1) zeta, 1-based j.
[[nodiscard]] std::vector<Complex> roots_of_unity_diagonal(int n);

/// prod_{1 <= j < i <= n} (zeta^i - zeta^j)
[[nodiscard]] Complex vandermonde_product(int n);

struct DegreeSweepEntry {
  int degree = 0;
  std::size_t nullity = 0;
  /// Some kernel vector is a nonzero polynomial under the zero tolerance.
  bool admits_polynomial = false;
};

struct SharpnessCertificate {
  int n = 0;
  Complex zeta{0.0};
  std::size_t rank_b = 0;
  std::size_t nullity = 0;
  Complex det_bn{0.0};
  Complex det_v{0.0};
  Complex det_d{0.0};
  /// |a_{n+1}| / ||A||_inf of the raw kernel vector.
  double leading_ratio = 0.0;
  Polynomial monic_poly;
  CycleReport report;
  bool cycle_verified = false;
  /// Degrees 2..n: none may admit a polynomial solution.
  std::vector<DegreeSweepEntry> sweep;
  std::vector<double> pivot_magnitudes;
};

struct SharpnessOptions {
  double rank_tol = kDefaultRankTol;
  /// Lift the n <= 12 cap; accuracy degrades with n.
  bool allow_large = false;
  double check_tol = 1e-6;
};

/**
 * Builds the cycle matrix for the roots-of-unity cycle at degree n+1,
 * certifies rank n+1, compares det(B_n) with det(V) det(D), extracts the
 * monic kernel polynomial, verifies it, and sweeps degrees 2..n for any
 * lower-degree solution. Throws RankMismatch when the rank is not n+1.
 */
[[nodiscard]] SharpnessCertificate min_degree_certificate(int n,
                                                          const SharpnessOptions& opts = {});

}  // namespace newtoncycles

#endif  // NEWTONCYCLES_SHARPNESS_HPP
