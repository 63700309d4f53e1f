#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "gibbsdice/simpson.hpp"
#include "oracles.hpp"

using namespace gibbsdice;

TEST_CASE("Simpson model on the control cuboid") {
  const ProbabilityVector p = simpson_probabilities({13, 20, 23});
  const std::array<double, 6> published{13.5, 10.5, 26.0, 26.0, 10.5, 13.5};
  for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(100 * p[i] - published[i]) <= 0.1);
}

TEST_CASE("Simpson model of a cube is uniform") {
  const ProbabilityVector p = simpson_probabilities({4, 4, 4});
  for (double x : p.values()) CHECK(x == doctest::Approx(1.0 / 6).epsilon(1e-14));
}

TEST_CASE("face solid angles tile the sphere") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> side(0.1, 100.0);
  for (int i = 0; i < 200; ++i) {
    const auto omega = face_solid_angles({side(rng), side(rng), side(rng)});
    double total = 0;
    for (double w : omega) total += w;
    CHECK(std::abs(total - 4 * std::numbers::pi) <= 1e-12 * 4 * std::numbers::pi);
  }
}

TEST_CASE("closed form agrees with quadrature for face 3 of the control cuboid") {
  const double closed = face_solid_angles({13, 20, 23})[2];
  const double numeric = oracle::solid_angle_quadrature(10.0, 11.5, 6.5);
  CHECK(std::abs(closed - numeric) <= 1e-8);
}

TEST_CASE("rectangle solid angle rejects degenerate input") {
  CHECK_THROWS_AS(rectangle_solid_angle(0, 1, 1), InvalidGeometry);
  CHECK_THROWS_AS(rectangle_solid_angle(1, 1, 0), InvalidGeometry);
  CHECK_THROWS_AS(simpson_probabilities({1, 0, 1}), InvalidGeometry);
}
