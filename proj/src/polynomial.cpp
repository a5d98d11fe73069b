#include "newtoncycles/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "newtoncycles/errors.hpp"

namespace newtoncycles {

namespace {

void require_nonconstant(const Polynomial& p) {
  if (p.degree() < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "Newton map needs a nonconstant polynomial, got degree " +
                    std::to_string(p.degree()));
  }
}

// Scale against which |p'(z)| and |p(z)| are judged to vanish.
double local_scale(const Polynomial& p, Complex z, int power) {
  return std::pow(std::max(1.0, std::abs(z)), power) * p.max_abs_coeff();
}

struct Derivatives {
  Complex value;
  Complex first;
};

Derivatives checked_derivatives(const Polynomial& p, Complex z,
                                const NewtonTolerance& tol) {
  require_nonconstant(p);
  const int d = p.degree();
  const Complex value = p(z);
  const Complex first = p.derivative()(z);
  if (std::abs(first) < tol.derivative_zero * local_scale(p, z, d - 1)) {
    if (std::abs(value) < tol.derivative_zero * local_scale(p, z, d)) {
      throw Error(ErrorKind::FixedRoot,
                  "p and p' both vanish at the evaluation point");
    }
    throw Error(ErrorKind::PoleError,
                "p' vanishes at a non-root; Newton image is infinite");
  }
  return {value, first};
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs, double zero_tol)
    : coeffs_(std::move(coeffs)), zero_tol_(zero_tol) {
  if (coeffs_.empty()) {
    throw Error(ErrorKind::InvalidArgument,
                "polynomial needs at least one coefficient");
  }
  for (const Complex& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorKind::InvalidArgument,
                  "polynomial coefficients must be finite");
    }
  }
  const double cutoff = zero_tol_ * max_abs_coeff();
  degree_ = -1;
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    const double m = std::abs(coeffs_[static_cast<std::size_t>(k)]);
    if (m > cutoff && m > 0.0) {
      degree_ = k;
      break;
    }
  }
}

Polynomial Polynomial::monomial(int power, Complex coeff) {
  if (power < 0) {
    throw Error(ErrorKind::InvalidArgument, "negative monomial power");
  }
  std::vector<Complex> c(static_cast<std::size_t>(power) + 1, Complex{0.0});
  c.back() = coeff;
  return Polynomial(std::move(c));
}

Complex Polynomial::coeff(int k) const noexcept {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

double Polynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex Polynomial::operator()(Complex z) const noexcept {
  Complex acc{0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() == 1) return Polynomial({Complex{0.0}}, zero_tol_);
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
    d[k] = static_cast<double>(k + 1) * coeffs_[k + 1];
  }
  return Polynomial(std::move(d), zero_tol_);
}

Polynomial Polynomial::scaled(Complex factor) const {
  std::vector<Complex> c = coeffs_;
  for (Complex& x : c) x *= factor;
  return Polynomial(std::move(c), zero_tol_);
}

Polynomial Polynomial::trimmed() const {
  const std::size_t keep = degree_ < 0 ? 1 : static_cast<std::size_t>(degree_) + 1;
  std::vector<Complex> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(keep));
  if (degree_ < 0) c[0] = 0.0;
  return Polynomial(std::move(c), zero_tol_);
}

Relaxation::Relaxation(Complex h) : h_(h) {
  if (h == Complex{0.0} || !std::isfinite(h.real()) || !std::isfinite(h.imag())) {
    throw Error(ErrorKind::InvalidArgument,
                "relaxation parameter h must be finite and nonzero");
  }
}

Complex newton_step(const Polynomial& p, const Relaxation& h, Complex z,
                    const NewtonTolerance& tol) {
  const auto [value, first] = checked_derivatives(p, z, tol);
  return z - h.value() * value / first;
}

Complex newton_derivative(const Polynomial& p, const Relaxation& h, Complex z,
                          const NewtonTolerance& tol) {
  const auto [value, first] = checked_derivatives(p, z, tol);
  const Complex second = p.derivative().derivative()(z);
  const Complex hv = h.value();
  return 1.0 - hv + hv * value * second / (first * first);
}

}  // namespace newtoncycles
