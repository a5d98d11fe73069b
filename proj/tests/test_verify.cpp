#include <doctest.h>

#include <random>

#include "newtoncycles/errors.hpp"
#include "newtoncycles/synthesis.hpp"
#include "newtoncycles/verify.hpp"
#include "test_support.hpp"

using namespace newtoncycles;

TEST_CASE("multiplier examples") {
  const std::vector<Complex> zero_one{0.0, 1.0};
  CHECK(std::abs(multiplier(smale_polynomial(), Relaxation{}, zero_one)) < 1e-9);

  const std::vector<Complex> fixed{1.0};
  CHECK(std::abs(multiplier(Polynomial({-1.0, 0.0, 1.0}), Relaxation{}, fixed)) < 1e-15);

  const Polynomial relaxed({8.0, -4.0, -1.0, 3.0});
  CHECK(std::abs(multiplier(relaxed, Relaxation(0.5), zero_one)) < 1e-9);
}

TEST_CASE("check_cycle passes the Smale cycle") {
  const std::vector<Complex> pts{0.0, 1.0};
  const CycleReport r = check_cycle(smale_polynomial(), Relaxation{}, pts, 1e-8);
  CHECK(r.super_attracting);
  CHECK(r.distinct);
  REQUIRE(r.closure_errors.size() == 2);
  CHECK(r.closure_errors[0] < 1e-15);
  CHECK(r.closure_errors[1] < 1e-15);
  CHECK(r.root_clearance == doctest::Approx(1.0));
}

TEST_CASE("check_cycle flags a wrong point on leg 1") {
  const std::vector<Complex> pts{0.0, 0.9};
  const CycleReport r = check_cycle(smale_polynomial(), Relaxation{}, pts);
  CHECK_FALSE(r.super_attracting);
  CHECK(r.closure_errors[0] > 0.05);
}

TEST_CASE("check_cycle flags a point off the orbit") {
  const std::vector<Complex> pts{0.0, 1.0, 0.5};
  const CycleReport r = check_cycle(smale_polynomial(), Relaxation{}, pts);
  CHECK_FALSE(r.super_attracting);
  CHECK(r.closure_errors[1] > 0.1);
}

TEST_CASE("check_cycle rejects roots and repeated points") {
  const Polynomial q({-1.0, 0.0, 1.0});
  const std::vector<Complex> root_pair{1.0, 1.0};
  const CycleReport r = check_cycle(q, Relaxation{}, root_pair);
  CHECK_FALSE(r.distinct);
  CHECK(r.root_clearance == 0.0);
  CHECK_FALSE(r.super_attracting);

  // z^2 + 1 has a pole of its Newton map at 0.
  const std::vector<Complex> pole{0.0, 1.0};
  const CycleReport p = check_cycle(Polynomial({1.0, 0.0, 1.0}), Relaxation{}, pole);
  CHECK(std::isinf(p.closure_errors[0]));
  CHECK(std::isnan(p.multiplier.real()));
  CHECK_FALSE(p.super_attracting);
}

TEST_CASE("property: multiplier invariant under rotation and scaling") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
    const auto pts = testing_support::random_cycle(rng, n);
    const Polynomial p = testing_support::random_polynomial(rng, 3 + trial % 4);
    const Relaxation h(testing_support::random_relaxation(rng));
    Complex base;
    try {
      base = multiplier(p, h, pts);
    } catch (const Error&) {
      continue;
    }
    std::vector<Complex> rotated(pts.begin() + 1, pts.end());
    rotated.push_back(pts.front());
    const double scale = std::max(1.0, std::abs(base));
    CHECK(std::abs(multiplier(p, h, rotated) - base) < 1e-12 * scale);
    const Complex c = testing_support::uniform_point(rng, 0.5, 4.0);
    CHECK(std::abs(multiplier(p.scaled(c), h, pts) - base) < 1e-12 * scale);
  }
}
