#include "newtoncycles/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "newtoncycles/errors.hpp"

namespace newtoncycles {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : Matrix(rows, cols, std::vector<Complex>(rows * cols, Complex{0.0})) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorKind::InvalidArgument, "matrix dimensions must be positive");
  }
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::InvalidArgument,
                "matrix entry count " + std::to_string(entries_.size()) +
                    " does not match " + std::to_string(rows_) + "x" +
                    std::to_string(cols_));
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::block(std::size_t rows, std::size_t cols) const {
  if (rows > rows_ || cols > cols_) {
    throw Error(ErrorKind::InvalidArgument, "block exceeds matrix bounds");
  }
  Matrix b(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) b(r, c) = (*this)(r, c);
  }
  return b;
}

std::vector<Complex> Matrix::apply(std::span<const Complex> v) const {
  if (v.size() != cols_) {
    throw Error(ErrorKind::InvalidArgument, "vector length does not match matrix columns");
  }
  std::vector<Complex> out(rows_, Complex{0.0});
  for (std::size_t r = 0; r < rows_; ++r) {
    Complex acc{0.0};
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

double Matrix::max_row_norm() const noexcept {
  double best = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) best = std::max(best, inf_norm(row(r)));
  return best;
}

double inf_norm(std::span<const Complex> v) noexcept {
  double m = 0.0;
  for (const Complex& x : v) m = std::max(m, std::abs(x));
  return m;
}

RrefResult rref(const Matrix& m, double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "rref tolerance must be positive");
  }
  RrefResult out{m, 0, {}, m.max_row_norm(), {}};
  Matrix& a = out.reduced;
  const double cutoff = tol * out.row_scale;

  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t best = lead;
    double best_mag = std::abs(a(lead, col));
    for (std::size_t r = lead + 1; r < a.rows(); ++r) {
      const double mag = std::abs(a(r, col));
      if (mag > best_mag) {
        best = r;
        best_mag = mag;
      }
    }
    if (best_mag <= cutoff || best_mag == 0.0) {
      for (std::size_t r = lead; r < a.rows(); ++r) a(r, col) = 0.0;
      continue;
    }
    if (best != lead) {
      std::swap_ranges(a.row(best).begin(), a.row(best).end(), a.row(lead).begin());
    }
    const Complex pivot = a(lead, col);
    for (Complex& x : a.row(lead)) x /= pivot;
    a(lead, col) = 1.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead) continue;
      const Complex factor = a(r, col);
      if (factor == Complex{0.0}) continue;
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= factor * a(lead, c);
      a(r, col) = 0.0;
    }
    out.pivot_cols.push_back(col);
    out.pivot_magnitudes.push_back(best_mag);
    ++lead;
  }
  out.rank = out.pivot_cols.size();
  return out;
}

std::vector<std::vector<Complex>> nullspace(const Matrix& m, double tol) {
  const RrefResult r = rref(m, tol);
  std::vector<std::size_t> free_cols;
  std::size_t p = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (p < r.pivot_cols.size() && r.pivot_cols[p] == c) {
      ++p;
    } else {
      free_cols.push_back(c);
    }
  }
  if (free_cols.empty()) return {};

  // Last free column first, then the others in increasing order.
  std::vector<std::size_t> order;
  order.push_back(free_cols.back());
  order.insert(order.end(), free_cols.begin(), free_cols.end() - 1);

  std::vector<std::vector<Complex>> basis;
  basis.reserve(order.size());
  for (const std::size_t f : order) {
    std::vector<Complex> v(m.cols(), Complex{0.0});
    v[f] = 1.0;
    for (std::size_t i = 0; i < r.rank; ++i) {
      v[r.pivot_cols[i]] = -r.reduced(i, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Complex determinant(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::NonSquare, "determinant of a " + std::to_string(m.rows()) +
                                          "x" + std::to_string(m.cols()) + " matrix");
  }
  Matrix a = m;
  const std::size_t n = a.rows();
  Complex det{1.0};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(best, col))) best = r;
    }
    if (a(best, col) == Complex{0.0}) return 0.0;
    if (best != col) {
      std::swap_ranges(a.row(best).begin(), a.row(best).end(), a.row(col).begin());
      det = -det;
    }
    const Complex pivot = a(col, col);
    det *= pivot;
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = a(r, col) / pivot;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::NonSquare, "inverse of a non-square matrix");
  }
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1.0;
  }
  const RrefResult r = rref(aug, tol);
  if (r.rank < n || r.pivot_cols[n - 1] != n - 1) {
    throw Error(ErrorKind::NoSolution, "matrix is singular under tolerance");
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  }
  return inv;
}

}  // namespace newtoncycles
