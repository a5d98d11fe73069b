#ifndef NEWTONCYCLES_TEST_SUPPORT_HPP
#define NEWTONCYCLES_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "newtoncycles/polynomial.hpp"

namespace testing_support {

using newtoncycles::Complex;

inline double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline Complex uniform_point(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  const double re = u(rng);
  return {re, u(rng)};
}

/// n points uniform in [-1,1]^2 with pairwise distance >= min_sep (rejection).
inline std::vector<Complex> random_cycle(std::mt19937_64& rng, std::size_t n, double min_sep = 0.1) {
  std::vector<Complex> pts;
  while (pts.size() < n) {
    const Complex z = uniform_point(rng);
    const bool ok = std::all_of(pts.begin(), pts.end(),
                                [&](const Complex& w) { return std::abs(z - w) >= min_sep; });
    if (ok) pts.push_back(z);
  }
  return pts;
}

/// h with |h - 1| <= radius.
inline Complex random_relaxation(std::mt19937_64& rng, double radius = 0.9) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  const double t = 2.0 * 3.141592653589793 * u(rng);
  return 1.0 + std::polar(r, t);
}

inline newtoncycles::Polynomial random_polynomial(std::mt19937_64& rng, int degree) {
  std::vector<Complex> c;
  for (int k = 0; k <= degree; ++k) c.push_back(uniform_point(rng));
  if (std::abs(c.back()) < 0.1) c.back() += 0.5;
  return newtoncycles::Polynomial(std::move(c));
}

}  // namespace testing_support

#endif  // NEWTONCYCLES_TEST_SUPPORT_HPP
