#include "newtoncycles/sharpness.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "newtoncycles/errors.hpp"

namespace newtoncycles {

namespace {

Complex unit_root_power(int n, long k) {
  const long r = ((k % n) + n) % n;
  if (r == 0) return 1.0;
  // Quarter turns exactly, so n = 2 and n = 4 cycles are exact.
  if (2 * r == n) return -1.0;
  if (4 * r == n) return Complex(0.0, 1.0);
  if (4 * r == 3 * n) return Complex(0.0, -1.0);
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / n;
  return std::polar(1.0, angle);
}

void require_length(int n) {
  if (n < 2) {
    throw Error(ErrorKind::InvalidArgument, "cycle length must be at least 2, got " + std::to_string(n));
  }
}

}  // namespace

Cycle roots_of_unity_cycle(int n) {
  require_length(n);
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) pts.push_back(unit_root_power(n, k));
  return Cycle(std::move(pts));
}

Matrix roots_of_unity_vandermonde(int n) {
  require_length(n);
  const auto un = static_cast<std::size_t>(n);
  Matrix v(un, un);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      v(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          unit_root_power(n, static_cast<long>(i) * (j - 1));
    }
  }
  return v;
}

std::vector<Complex> roots_of_unity_diagonal(int n) {
  require_length(n);
  const Complex zeta = unit_root_power(n, 1);
  std::vector<Complex> d;
  for (int j = 1; j <= n; ++j) d.push_back(static_cast<double>(j - 2) - static_cast<double>(j - 1) * zeta);
  return d;
}

Complex vandermonde_product(int n) {
  require_length(n);
  Complex prod{1.0};
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) prod *= unit_root_power(n, i) - unit_root_power(n, j);
  }
  return prod;
}

SharpnessCertificate min_degree_certificate(int n, const SharpnessOptions& opts) {
  require_length(n);
  if (n > kMaxCertifiedCycleLength && !opts.allow_large) {
    throw Error(ErrorKind::InvalidArgument,
                "n = " + std::to_string(n) + " exceeds the certified cap of " +
                    std::to_string(kMaxCertifiedCycleLength) + "; pass allow_large to override");
  }

  SharpnessCertificate cert;
  cert.n = n;
  cert.zeta = unit_root_power(n, 1);
  const Cycle omega = roots_of_unity_cycle(n);
  const auto un = static_cast<std::size_t>(n);

  const CycleMatrix cm = build_cycle_matrix(omega, n + 1);
  const RrefResult reduced = rref(cm.b, opts.rank_tol);
  cert.rank_b = reduced.rank;
  cert.nullity = cm.b.cols() - reduced.rank;
  cert.pivot_magnitudes = reduced.pivot_magnitudes;
  if (reduced.rank != un + 1) {
    std::ostringstream msg;
    msg << "rank " << reduced.rank << " != " << n + 1 << "; pivots:";
    for (double m : reduced.pivot_magnitudes) msg << ' ' << m;
    throw Error(ErrorKind::RankMismatch, msg.str());
  }

  cert.det_bn = determinant(cm.b.block(un, un));
  cert.det_v = determinant(roots_of_unity_vandermonde(n));
  cert.det_d = 1.0;
  for (const Complex& djj : roots_of_unity_diagonal(n)) cert.det_d *= djj;

  const auto basis = nullspace(cm.b, opts.rank_tol);
  const std::vector<Complex>& a = basis.front();
  cert.leading_ratio = std::abs(a.back()) / inf_norm(a);
  std::vector<Complex> monic = a;
  for (Complex& x : monic) x /= a.back();
  monic.back() = 1.0;
  cert.monic_poly = Polynomial(std::move(monic));

  cert.report = check_cycle(cert.monic_poly, Relaxation{}, omega.points(), opts.check_tol);
  cert.cycle_verified = cert.report.super_attracting;

  for (int degree = 2; degree <= n; ++degree) {
    const CycleMatrix lower = build_cycle_matrix(omega, degree);
    DegreeSweepEntry entry;
    entry.degree = degree;
    const auto kernel = nullspace(lower.b, opts.rank_tol);
    entry.nullity = kernel.size();
    for (const auto& v : kernel) {
      if (!Polynomial(v).is_zero()) entry.admits_polynomial = true;
    }
    cert.sweep.push_back(entry);
  }
  return cert;
}

}  // namespace newtoncycles
