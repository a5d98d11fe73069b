#ifndef NEWTONCYCLES_POLYNOMIAL_HPP
#define NEWTONCYCLES_POLYNOMIAL_HPP

#include <complex>
#include <span>
#include <vector>

namespace newtoncycles {

using Complex = std::complex<double>;

inline constexpr double kDefaultZeroCoeffTol = 1e-12;
inline constexpr double kDefaultDerivativeZeroTol = 1e-12;

/**
 * Univariate polynomial with complex coefficients stored in ascending
 * order a_0, a_1, ..., a_d.
 *
 * The stored vector is never empty. degree() ignores trailing coefficients
 * whose modulus is below zero_tol times the largest coefficient modulus, so
 * coefficient vectors coming out of a numerical nullspace report their
 * honest degree. The zero polynomial is representable (degree() == -1).
 */
class Polynomial {
 public:
  Polynomial() : coeffs_{Complex{0.0}} {}
  explicit Polynomial(std::vector<Complex> coeffs,
                      double zero_tol = kDefaultZeroCoeffTol);

  static Polynomial constant(Complex value) { return Polynomial({value}); }
  static Polynomial monomial(int power, Complex coeff = 1.0);

  [[nodiscard]] std::span<const Complex> coeffs() const noexcept {
    return coeffs_;
  }
  [[nodiscard]] Complex coeff(int k) const noexcept;
  [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }

  [[nodiscard]] int degree() const noexcept { return degree_; }
  [[nodiscard]] bool is_zero() const noexcept { return degree_ < 0; }
  [[nodiscard]] double zero_tol() const noexcept { return zero_tol_; }

  /// max_k |a_k| over the stored coefficients.
  [[nodiscard]] double max_abs_coeff() const noexcept;

  /// Horner evaluation.
  [[nodiscard]] Complex operator()(Complex z) const noexcept;

  [[nodiscard]] Polynomial derivative() const;
  [[nodiscard]] Polynomial scaled(Complex factor) const;

  /// Copy with coefficients above degree() dropped.
  [[nodiscard]] Polynomial trimmed() const;

 private:
  std::vector<Complex> coeffs_;
  double zero_tol_ = kDefaultZeroCoeffTol;
  int degree_ = -1;
};

[[nodiscard]] inline Complex eval(const Polynomial& p, Complex z) noexcept {
  return p(z);
}

[[nodiscard]] inline Polynomial derivative(const Polynomial& p) {
  return p.derivative();
}

/// Damping parameter h of the relaxed Newton map z - h p(z)/p'(z).
class Relaxation {
 public:
  Relaxation() = default;
  /// Throws InvalidArgument for h == 0 (the map degenerates to the identity).
  explicit Relaxation(Complex h);

  [[nodiscard]] Complex value() const noexcept { return h_; }
  /// |h - 1| < 1, the disk on which roots stay attracting.
  [[nodiscard]] bool in_unit_disk() const noexcept {
    return std::abs(h_ - 1.0) < 1.0;
  }
  [[nodiscard]] bool is_plain() const noexcept { return h_ == Complex{1.0}; }

 private:
  Complex h_{1.0};
};

struct NewtonTolerance {
  /// Relative to max(1, |z|)^(d-1) * max|a_k|.
  double derivative_zero = kDefaultDerivativeZeroTol;
};

/**
 * One step of the relaxed Newton map, z - h p(z)/p'(z).
 *
 * Throws PoleError when p'(z) vanishes under tolerance but p(z) does not
 * (the image is the point at infinity), and FixedRoot when both vanish.
 * Throws InvalidArgument for constant or zero p.
 */
[[nodiscard]] Complex newton_step(const Polynomial& p, const Relaxation& h,
                                  Complex z, const NewtonTolerance& tol = {});

/// Derivative of the relaxed Newton map: 1 - h + h p p'' / p'^2.
[[nodiscard]] Complex newton_derivative(const Polynomial& p,
                                        const Relaxation& h, Complex z,
                                        const NewtonTolerance& tol = {});

}  // namespace newtoncycles

#endif  // NEWTONCYCLES_POLYNOMIAL_HPP
