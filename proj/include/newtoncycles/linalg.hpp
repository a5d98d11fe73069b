#ifndef NEWTONCYCLES_LINALG_HPP
#define NEWTONCYCLES_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "newtoncycles/polynomial.hpp"

namespace newtoncycles {

/// Dense row-major complex matrix.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static Matrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) noexcept {
    return entries_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return entries_[r * cols_ + c];
  }

  [[nodiscard]] std::span<const Complex> row(std::size_t r) const noexcept {
    return {entries_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<Complex> row(std::size_t r) noexcept {
    return {entries_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<const Complex> entries() const noexcept {
    return entries_;
  }

  [[nodiscard]] Matrix transpose() const;
  /// Top-left rows x cols block.
  [[nodiscard]] Matrix block(std::size_t rows, std::size_t cols) const;
  [[nodiscard]] std::vector<Complex> apply(std::span<const Complex> v) const;

  /// Largest row infinity-norm.
  [[nodiscard]] double max_row_norm() const noexcept;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  /// Largest row infinity-norm of the input; zero tests are relative to it.
  double row_scale = 0.0;
  /// |pivot| before normalization, one per pivot column.
  std::vector<double> pivot_magnitudes;
};

/**
 * Gauss-Jordan elimination with partial pivoting on maximum modulus.
 *
 * An entry counts as zero when its modulus is below tol * row_scale. The
 * reduced matrix has unit pivots and zeros elsewhere in pivot columns.
 */
[[nodiscard]] RrefResult rref(const Matrix& m, double tol);

/**
 * Basis of the right nullspace, one vector per free column.
 *
 * Each vector sets its free variable to 1 and the others to 0. The vector
 * whose free variable is the last free column comes first; the rest follow
 * in increasing column order.
 */
[[nodiscard]] std::vector<std::vector<Complex>> nullspace(const Matrix& m,
                                                          double tol);

/// Determinant by LU elimination with row-swap sign tracking. Throws NonSquare.
[[nodiscard]] Complex determinant(const Matrix& m);

/// Inverse via rref of [m | I]. Throws NonSquare, or NoSolution when singular.
[[nodiscard]] Matrix inverse(const Matrix& m, double tol = 1e-13);

[[nodiscard]] double inf_norm(std::span<const Complex> v) noexcept;

}  // namespace newtoncycles

#endif  // NEWTONCYCLES_LINALG_HPP
