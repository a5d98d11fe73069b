#include "newtoncycles/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "newtoncycles/errors.hpp"
#include "newtoncycles/verify.hpp"

namespace newtoncycles {

double diameter(std::span<const Complex> points) noexcept {
  double d = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      d = std::max(d, std::abs(points[i] - points[j]));
    }
  }
  return d;
}

Cycle::Cycle(std::vector<Complex> points, double separation_tol)
    : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "a cycle needs at least two points");
  }
  for (const Complex& z : points_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorKind::InvalidArgument, "cycle points must be finite");
    }
  }
  const double sep = separation_tol * newtoncycles::diameter(points_);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (std::abs(points_[i] - points_[j]) <= sep) {
        throw Error(ErrorKind::DistinctnessError,
                    "cycle points " + std::to_string(i) + " and " + std::to_string(j) +
                        " coincide");
      }
    }
  }
}

Cycle Cycle::rotated(std::size_t k) const {
  std::vector<Complex> r(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    r[i] = points_[(i + k) % points_.size()];
  }
  return Cycle(std::move(r), 0.0);
}

namespace {

Complex ipow(Complex z, int k) {
  Complex r{1.0};
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

}  // namespace

std::vector<Complex> monomial_row(Complex z, int d, int derivative_order) {
  std::vector<Complex> row(static_cast<std::size_t>(d) + 1, Complex{0.0});
  for (int j = derivative_order; j <= d; ++j) {
    double falling = 1.0;
    for (int t = 0; t < derivative_order; ++t) falling *= static_cast<double>(j - t);
    row[static_cast<std::size_t>(j)] = falling * ipow(z, j - derivative_order);
  }
  return row;
}

namespace {

void require_degree(int d) {
  if (d < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "cycle matrix degree must be at least 2, got " + std::to_string(d));
  }
}

// Rows 0..n-1 shared by both systems.
Matrix cycle_rows(const Cycle& omega, int d, Complex h) {
  const std::size_t n = omega.size();
  const std::size_t cols = static_cast<std::size_t>(d) + 1;
  Matrix b(n + 1, cols);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex zi = omega[i];
    const Complex step = zi - omega.next(i);
    const auto value = monomial_row(zi, d, 0);
    const auto first = monomial_row(zi, d, 1);
    for (std::size_t c = 0; c < cols; ++c) b(i, c) = step * first[c] - h * value[c];
  }
  return b;
}

}  // namespace

CycleMatrix build_cycle_matrix(const Cycle& omega, int d, const Relaxation& h) {
  require_degree(d);
  const Complex hv = h.value();
  Matrix b = cycle_rows(omega, d, hv);
  const std::size_t n = omega.size();
  const Complex gap = omega[0] - omega[1];
  const auto value = monomial_row(omega[0], d, 0);
  const auto second = monomial_row(omega[0], d, 2);
  for (std::size_t c = 0; c < b.cols(); ++c) {
    b(n, c) = gap * gap * second[c] - hv * (hv - 1.0) * value[c];
  }
  return {std::move(b), n, d, h};
}

CycleMatrix build_plain_cycle_matrix(const Cycle& omega, int d) {
  require_degree(d);
  Matrix b = cycle_rows(omega, d, 1.0);
  const std::size_t n = omega.size();
  const auto second = monomial_row(omega[0], d, 2);
  for (std::size_t c = 0; c < b.cols(); ++c) b(n, c) = second[c];
  return {std::move(b), n, d, Relaxation{}};
}

Polynomial synthesize(const Cycle& omega, const Relaxation& h, std::optional<int> d,
                      const SynthesisOptions& opts) {
  const int degree = d.value_or(static_cast<int>(omega.size()) + 1);
  const CycleMatrix cm = build_cycle_matrix(omega, degree, h);
  const auto basis = nullspace(cm.b, opts.rank_tol);
  if (basis.empty()) {
    throw Error(ErrorKind::NoSolution,
                "cycle matrix has trivial kernel at degree " + std::to_string(degree));
  }

  // basis.front() carries the highest free column, hence the highest
  // reachable degree.
  const Polynomial raw(basis.front(), opts.zero_coeff_tol);
  if (raw.is_zero()) {
    throw Error(ErrorKind::NoSolution, "every kernel vector is the zero polynomial");
  }
  if (raw.degree() < 1) {
    throw Error(ErrorKind::ConstantSolution, "kernel only holds constant polynomials");
  }
  const Polynomial trimmed = raw.trimmed();
  const Complex lead = trimmed.coeff(trimmed.degree());
  std::vector<Complex> monic(trimmed.coeffs().begin(), trimmed.coeffs().end());
  for (Complex& c : monic) c /= lead;
  monic.back() = 1.0;
  return Polynomial(std::move(monic), opts.zero_coeff_tol);
}

AffineMap::AffineMap(Complex a, Complex b) : a_(a), b_(b) {
  if (a == Complex{0.0}) {
    throw Error(ErrorKind::InvalidArgument, "affine map needs a nonzero scale");
  }
}

std::pair<AffineMap, Cycle> normalize_cycle(const Cycle& omega) {
  const AffineMap t(omega[1] - omega[0], omega[0]);
  std::vector<Complex> pts(omega.size());
  pts[0] = 0.0;
  pts[1] = 1.0;
  for (std::size_t i = 2; i < omega.size(); ++i) pts[i] = t.inverse(omega[i]);
  return {t, Cycle(std::move(pts))};
}

Polynomial conjugate_poly(const Polynomial& p, const AffineMap& t) {
  // Horner in polynomial arithmetic: acc <- acc * (a z + b) + a_k.
  const auto coeffs = p.coeffs();
  std::vector<Complex> acc{coeffs.back()};
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    std::vector<Complex> next(acc.size() + 1, Complex{0.0});
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j] += acc[j] * t.b();
      next[j + 1] += acc[j] * t.a();
    }
    next[0] += coeffs[k];
    acc = std::move(next);
  }
  return Polynomial(std::move(acc), p.zero_tol());
}

Polynomial smale_polynomial() { return Polynomial({2.0, -2.0, 0.0, 1.0}); }

CubicTwoCycleVerdict classify_cubic_two_cycle(const Polynomial& q, Complex w1, Complex w2,
                                              double rel_tol) {
  if (q.degree() != 3) {
    throw Error(ErrorKind::InvalidArgument,
                "expected a cubic, got degree " + std::to_string(q.degree()));
  }
  const std::vector<Complex> pts{w1, w2};
  const CycleReport report = check_cycle(q, Relaxation{}, pts);
  if (!report.super_attracting) {
    throw Error(ErrorKind::NotACycle,
                "the given points are not a super-attracting 2-cycle of N_q");
  }

  const Polynomial smale = smale_polynomial();
  CubicTwoCycleVerdict verdict;
  for (int base = 0; base < 2; ++base) {
    const Complex from = pts[static_cast<std::size_t>(base)];
    const Complex to = pts[static_cast<std::size_t>(1 - base)];
    const AffineMap t(to - from, from);
    const Polynomial r = conjugate_poly(q, t);
    const Complex scalar = r.coeff(3);
    double mismatch = 0.0;
    for (int k = 0; k < 4; ++k) {
      mismatch = std::max(mismatch, std::abs(r.coeff(k) - scalar * smale.coeff(k)));
    }
    if (mismatch <= rel_tol * r.max_abs_coeff()) {
      verdict.conjugate_to_smale = true;
      verdict.scalar = scalar;
      verdict.base_point = base;
      verdict.normalization = t;
      return verdict;
    }
  }
  return verdict;
}

}  // namespace newtoncycles
