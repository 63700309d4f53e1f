#include "gibbsdice/simpson.hpp"

#include <cmath>
#include <numbers>

namespace gibbsdice {

double rectangle_solid_angle(double half_a, double half_b, double distance) {
  if (!(half_a > 0.0) || !(half_b > 0.0) || !(distance > 0.0)) {
    throw InvalidGeometry("rectangle half-widths and distance must be positive");
  }
  const double r = std::sqrt(half_a * half_a + half_b * half_b + distance * distance);
  return 4.0 * std::atan(half_a * half_b / (distance * r));
}

std::array<double, 6> face_solid_angles(const CuboidSpec& spec) {
  spec.validate();
  const double h1 = spec.s1 / 2.0;
  const double h2 = spec.s2 / 2.0;
  const double h3 = spec.s3 / 2.0;
  const double perp_s1 = rectangle_solid_angle(h2, h3, h1);
  const double perp_s2 = rectangle_solid_angle(h1, h3, h2);
  const double perp_s3 = rectangle_solid_angle(h1, h2, h3);
  return {perp_s2, perp_s3, perp_s1, perp_s1, perp_s3, perp_s2};
}

ProbabilityVector simpson_probabilities(const CuboidSpec& spec) {
  const auto omega = face_solid_angles(spec);
  std::vector<double> p(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) p[i] = omega[i] / (4.0 * std::numbers::pi);
  return ProbabilityVector(std::move(p));
}

}  // namespace gibbsdice
