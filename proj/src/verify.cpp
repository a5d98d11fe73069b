#include "newtoncycles/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "newtoncycles/errors.hpp"
#include "newtoncycles/synthesis.hpp"

namespace newtoncycles {

Complex multiplier(const Polynomial& p, const Relaxation& h,
                   std::span<const Complex> points) {
  Complex lambda{1.0};
  for (const Complex& z : points) lambda *= newton_derivative(p, h, z);
  return lambda;
}

CycleReport check_cycle(const Polynomial& p, const Relaxation& h,
                        std::span<const Complex> points, const CheckOptions& opts) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double nan = std::numeric_limits<double>::quiet_NaN();

  CycleReport report;
  const std::size_t n = points.size();
  report.diameter = diameter(points);
  if (n == 0 || p.degree() < 1) {
    report.multiplier = {nan, nan};
    return report;
  }

  const double sep = opts.separation_tol * report.diameter;
  report.distinct = true;
  for (std::size_t i = 0; i < n && report.distinct; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(points[i] - points[j]) <= sep) {
        report.distinct = false;
        break;
      }
    }
  }

  report.root_clearance = inf;
  bool clear_of_roots = true;
  const int d = p.degree();
  for (const Complex& z : points) {
    const double value = std::abs(p(z));
    report.root_clearance = std::min(report.root_clearance, value);
    const double scale = p.max_abs_coeff() * std::pow(std::max(1.0, std::abs(z)), d);
    if (value <= opts.root_tol * scale) clear_of_roots = false;
  }

  // A single point has no diameter; judge its closure on an absolute scale.
  const double closure_scale = report.diameter > 0.0 ? report.diameter : 1.0;
  bool closed = true;
  report.closure_errors.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double err = inf;
    try {
      err = std::abs(newton_step(p, h, points[i]) - points[(i + 1) % n]);
    } catch (const Error&) {
    }
    report.closure_errors.push_back(err);
    if (!(err < opts.closure_tol * closure_scale)) closed = false;
  }

  bool small_multiplier = false;
  try {
    report.multiplier = multiplier(p, h, points);
    small_multiplier = std::abs(report.multiplier) < opts.multiplier_tol;
  } catch (const Error&) {
    report.multiplier = {nan, nan};
  }

  report.super_attracting = closed && small_multiplier && report.distinct && clear_of_roots;
  return report;
}

}  // namespace newtoncycles
