#include <doctest.h>

#include <numbers>
#include <random>

#include "newtoncycles/errors.hpp"
#include "newtoncycles/linalg.hpp"
#include "test_support.hpp"

using namespace newtoncycles;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = testing_support::uniform_point(rng);
  }
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      for (std::size_t k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("rref of the identity") {
  const RrefResult r = rref(Matrix::identity(2), 1e-10);
  CHECK(r.rank == 2);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref of the normalized n = 2 cycle matrix has rank 3") {
  const Matrix b(3, 4, {-1.0, -1.0, 0.0, 0.0,  //
                        -1.0, 0.0, 1.0, 2.0,   //
                        0.0, 0.0, 2.0, 0.0});
  const RrefResult r = rref(b, 1e-10);
  CHECK(r.rank == 3);
  CHECK(r.row_scale == doctest::Approx(2.0));

  const auto ns = nullspace(b, 1e-10);
  REQUIRE(ns.size() == 1);
  const auto& v = ns.front();
  // proportional to <2, -2, 0, 1>
  const Complex s = v[3];
  CHECK(std::abs(v[0] - 2.0 * s) < 1e-14);
  CHECK(std::abs(v[1] + 2.0 * s) < 1e-14);
  CHECK(std::abs(v[2]) < 1e-14);
}

TEST_CASE("duplicated row loses rank") {
  const Matrix m(3, 3, {1.0, 2.0, 3.0, Complex(0, 1), 5.0, 6.0, 1.0, 2.0, 3.0});
  CHECK(rref(m, 1e-10).rank == 2);
}

TEST_CASE("nullspace edge cases") {
  CHECK(nullspace(Matrix::identity(4), 1e-10).empty());
  const auto full = nullspace(Matrix(1, 3), 1e-10);
  CHECK(full.size() == 3);
  // Last free column listed first.
  CHECK(full.front()[2] == Complex(1.0));
  CHECK(full[1][0] == Complex(1.0));
  CHECK_THROWS_AS((void)rref(Matrix::identity(2), 0.0), Error);
}

TEST_CASE("determinant small cases") {
  const Complex a(0.3, -1.2);
  const Complex b(2.0, 0.5);
  CHECK(std::abs(determinant(Matrix(2, 2, {1.0, 1.0, a, b})) - (b - a)) < 1e-15);
  CHECK(std::abs(determinant(Matrix::identity(5)) - 1.0) < 1e-15);
  try {
    (void)determinant(Matrix(2, 3));
    FAIL("expected NonSquare");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonSquare);
  }
}

TEST_CASE("determinant of the cube-roots-of-unity Vandermonde matches the product formula") {
  const Complex zeta = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const Complex pts[3] = {zeta, zeta * zeta, zeta * zeta * zeta};
  Matrix v(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    Complex power = 1.0;
    for (std::size_t j = 0; j < 3; ++j) {
      v(i, j) = power;
      power *= pts[i];
    }
  }
  // Oracle: prod_{j < i} (x_i - x_j), evaluated independently of elimination.
  Complex oracle = 1.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < i; ++j) oracle *= pts[i] - pts[j];
  }
  CHECK(std::abs(determinant(v) - oracle) < 1e-10);
}

TEST_CASE("property: det(m) * det(inverse(m)) = 1") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
    const Matrix m = random_matrix(rng, n, n);
    const Matrix inv = inverse(m);
    CHECK(std::abs(determinant(m) * determinant(inv) - 1.0) < 1e-8);
    const Matrix prod = multiply(m, inv);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(std::abs(prod(i, j) - (i == j ? 1.0 : 0.0)) < 1e-9);
      }
    }
  }
}

TEST_CASE("property: nullspace vectors are annihilated and independent") {
  std::mt19937_64 rng(22);
  const double tol = 1e-10;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + static_cast<std::size_t>(trial % 5);
    const std::size_t cols = rows + 1 + static_cast<std::size_t>(trial % 3);
    Matrix m = random_matrix(rng, rows, cols);
    const auto ns = nullspace(m, tol);
    CHECK(ns.size() == cols - rows);
    const RrefResult r = rref(m, tol);
    for (const auto& v : ns) {
      CHECK(inf_norm(m.apply(v)) < 10.0 * tol * r.row_scale * inf_norm(v));
    }
    Matrix basis(ns.size(), cols);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      for (std::size_t c = 0; c < cols; ++c) basis(i, c) = ns[i][c];
    }
    CHECK(rref(basis, tol).rank == ns.size());
  }
}

TEST_CASE("property: rank(m) = rank(m^T)") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 2 + static_cast<std::size_t>(trial % 5);
    const std::size_t cols = 2 + static_cast<std::size_t>((trial / 5) % 5);
    Matrix m = random_matrix(rng, rows, cols);
    if (trial % 3 == 0) {
      // Force a dependency: last row copies a combination of the first two.
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = 2.0 * m(0, c) - m(1, c);
    }
    CHECK(rref(m, 1e-10).rank == rref(m.transpose(), 1e-10).rank);
  }
}
