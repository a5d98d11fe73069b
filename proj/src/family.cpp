#include "newtoncycles/family.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <string>

#include "newtoncycles/errors.hpp"

namespace newtoncycles {

FamilyParams::FamilyParams(int d, double c) : d_(d), c_(c) {
  if (d < 3) {
    throw Error(ErrorKind::InvalidArgument,
                "family degree must be at least 3, got " + std::to_string(d));
  }
  if (c == 0.0 || !std::isfinite(c)) {
    throw Error(ErrorKind::InvalidArgument, "family parameter c must be finite and nonzero");
  }
}

double FamilyParams::pole_location() const noexcept {
  const double dm1 = d_ - 1.0;
  return std::pow(dm1 / d_, 1.0 / dm1) * std::pow(std::abs(c_), d_ / dm1);
}

double f_c(const FamilyParams& params, double x) {
  const int d = params.d();
  const double dm1 = d - 1.0;
  const double cd = std::pow(params.c(), d);
  const double den = dm1 * cd - d * std::pow(x, d - 1);
  if (std::abs(den) < kPoleGuard * dm1 * std::max(1.0, std::abs(cd))) {
    throw Error(ErrorKind::PoleError, "f_c denominator vanishes at x = " + std::to_string(x));
  }
  return (dm1 * cd - dm1 * std::pow(x, d)) / den;
}

namespace {

void require_family_degree(int d) {
  if (d < 3) {
    throw Error(ErrorKind::InvalidArgument,
                "family degree must be at least 3, got " + std::to_string(d));
  }
}

// Q_k(y) by the recursion; nullopt when a denominator falls under the guard.
std::optional<double> q_value(int d, double y, int k) {
  const double yd = std::pow(y, d);
  const double ratio = d / (d - 1.0);
  const double guard = kPoleGuard * std::max(1.0, std::abs(yd));
  double q = 1.0;
  for (int i = 1; i < k; ++i) {
    const double den = yd - ratio * std::pow(q, d - 1);
    if (std::abs(den) < guard) return std::nullopt;
    q = (yd - std::pow(q, d)) / den;
  }
  return q;
}

// Signs of the recursion denominators; a change across a subinterval means
// Q_k has a pole inside it.
std::vector<bool> denominator_signs(int d, double y, int k) {
  const double yd = std::pow(y, d);
  const double ratio = d / (d - 1.0);
  std::vector<bool> signs;
  double q = 1.0;
  for (int i = 1; i < k; ++i) {
    const double den = yd - ratio * std::pow(q, d - 1);
    signs.push_back(den < 0.0);
    q = (yd - std::pow(q, d)) / den;
  }
  return signs;
}

using Objective = std::function<std::optional<double>(double)>;

double bisect(const Objective& f, double lo, double hi, double f_lo, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const auto v = f(mid);
    if (!v) {
      throw Error(ErrorKind::BracketFailure,
                  "pole met during bisection near y = " + std::to_string(mid));
    }
    if (*v == 0.0) return mid;
    if ((*v < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = *v;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double minimal_root(const Objective& f, int d, int k, double lo, double hi,
                    const BracketOptions& opts, const char* what) {
  for (long n = opts.initial_subintervals; n <= opts.max_subintervals; n *= 2) {
    bool have_prev = false;
    double prev_x = lo;
    double prev_v = 0.0;
    for (long i = 0; i <= n; ++i) {
      const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
      const auto v = f(x);
      if (!v) {
        have_prev = false;
        continue;
      }
      if (*v == 0.0 && i > 0) return x;
      if (have_prev && ((prev_v < 0.0) != (*v < 0.0))) {
        if (denominator_signs(d, prev_x, k) == denominator_signs(d, x, k)) {
          return bisect(f, prev_x, x, prev_v, opts.bisection_tol);
        }
      }
      have_prev = true;
      prev_x = x;
      prev_v = *v;
    }
  }
  throw Error(ErrorKind::BracketFailure,
              std::string("no sign change for ") + what + " at k = " + std::to_string(k) +
                  " within " + std::to_string(opts.max_subintervals) + " subintervals");
}

}  // namespace

std::vector<double> q_sequence(int d, double c, int n) {
  require_family_degree(d);
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "q_sequence needs n >= 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  if (c == 0.0) {
    const double r = (d - 1.0) / d;
    for (int k = 1; k <= n; ++k) out.push_back(std::pow(r, k - 1));
    return out;
  }
  const double cd = std::pow(c, d);
  const double ratio = d / (d - 1.0);
  const double guard = kPoleGuard * std::max(1.0, std::abs(cd));
  double q = 1.0;
  out.push_back(q);
  for (int k = 2; k <= n; ++k) {
    const double den = cd - ratio * std::pow(q, d - 1);
    if (std::abs(den) < guard) {
      throw Error(ErrorKind::PoleError,
                  "Q_" + std::to_string(k) + " denominator vanishes at c = " + std::to_string(c));
    }
    q = (cd - std::pow(q, d)) / den;
    out.push_back(q);
  }
  return out;
}

bool strictly_interleaved(const BracketTable& table, double margin) {
  if (table.c.size() != table.b.size() || table.c.empty()) return false;
  // Ascending walk: c_k, b_k, c_{k-1}, b_{k-1}, ..., c_1, b_1.
  std::vector<double> chain;
  for (std::size_t k = table.c.size(); k-- > 0;) {
    chain.push_back(table.c[k]);
    chain.push_back(table.b[k]);
  }
  if (!(chain.front() > margin)) return false;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!(chain[i + 1] - chain[i] > margin)) return false;
  }
  return true;
}

BracketTable find_brackets(int d, int k_max, const BracketOptions& opts) {
  require_family_degree(d);
  if (k_max < 1) throw Error(ErrorKind::InvalidArgument, "find_brackets needs k_max >= 1");

  BracketTable table;
  table.d = d;
  table.c.push_back(1.0);
  table.b.push_back(std::pow(d / (d - 1.0), 1.0 / d));

  for (int k = 2; k <= k_max; ++k) {
    const Objective g = [d, k](double y) -> std::optional<double> {
      const auto q = q_value(d, y, k);
      if (!q) return std::nullopt;
      return (d - 1.0) * std::pow(y, d) - d * std::pow(*q, d - 1);
    };
    const double b = minimal_root(g, d, k, 0.0, table.c.back(), opts, "b_k");

    const Objective h = [d, k](double y) -> std::optional<double> {
      const auto q = q_value(d, y, k);
      if (!q) return std::nullopt;
      return std::pow(y, d) - std::pow(*q, d);
    };
    const double c = minimal_root(h, d, k, 0.0, b, opts, "c_k");

    table.b.push_back(b);
    table.c.push_back(c);
  }

  if (!strictly_interleaved(table)) {
    throw Error(ErrorKind::BracketFailure, "bracket table is not strictly interleaved");
  }
  return table;
}

std::vector<Complex> RealCycle::as_complex() const {
  return {points.begin(), points.end()};
}

FamilyCycle build_cycle(const BracketTable& table, int n) {
  if (n < 3) {
    throw Error(ErrorKind::InvalidArgument, "family cycles need n >= 3, got " + std::to_string(n));
  }
  if (table.c.size() < static_cast<std::size_t>(n - 1)) {
    throw Error(ErrorKind::InvalidArgument, "bracket table too short for n = " + std::to_string(n));
  }
  const FamilyParams params(table.d, table.c[static_cast<std::size_t>(n - 2)]);

  RealCycle cycle;
  cycle.points.push_back(0.0);
  for (int i = 1; i < n; ++i) cycle.points.push_back(f_c(params, cycle.points.back()));
  const double closure = f_c(params, cycle.points.back());

  const auto& z = cycle.points;
  if (z[1] != 1.0) {
    throw Error(ErrorKind::OrderingViolation, "second cycle point is not 1");
  }
  if (!(std::abs(closure) < kFamilyClosureTol)) {
    throw Error(ErrorKind::OrderingViolation,
                "cycle does not close: |f_c^n(0)| = " + std::to_string(std::abs(closure)));
  }
  // 0 < z_n < z_{n-1} < ... < z_3 < 1
  bool ordered = z.back() > 0.0;
  for (std::size_t i = 2; i + 1 < z.size(); ++i) ordered = ordered && z[i + 1] < z[i];
  ordered = ordered && z[2] < 1.0;
  if (!ordered) {
    throw Error(ErrorKind::OrderingViolation, "cycle points violate 0 < z_n < ... < z_3 < 1");
  }
  return {std::move(cycle), params};
}

FamilyCycle build_cycle(int d, int n, const BracketOptions& opts) {
  if (n < 3) {
    throw Error(ErrorKind::InvalidArgument, "family cycles need n >= 3, got " + std::to_string(n));
  }
  return build_cycle(find_brackets(d, n - 1, opts), n);
}

Polynomial family_polynomial(int d, double c, Complex a) {
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "family polynomial needs d >= 2");
  if (c == 0.0) throw Error(ErrorKind::InvalidArgument, "family parameter c must be nonzero");
  if (a == Complex{0.0}) throw Error(ErrorKind::InvalidArgument, "scale a must be nonzero");
  const double k = (d - 1.0) * std::pow(c, d);
  std::vector<Complex> coeffs(static_cast<std::size_t>(d) + 1, Complex{0.0});
  coeffs[0] = a * k;
  coeffs[1] = -a * k;
  coeffs.back() = a;
  return Polynomial(std::move(coeffs));
}

}  // namespace newtoncycles
