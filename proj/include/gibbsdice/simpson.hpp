#pragma once

#include <array>

#include "gibbsdice/model.hpp"

namespace gibbsdice {

/// Solid angle subtended at the apex of a right rectangular pyramid: a
/// rectangle with half-widths (a, b) seen from distance d along its normal
/// through the center.
double rectangle_solid_angle(double half_a, double half_b, double distance);

/// Solid angles of faces 1..6 seen from the cuboid's center. They sum to 4 pi.
std::array<double, 6> face_solid_angles(const CuboidSpec& spec);

/// Baseline model: face probability proportional to its solid angle.
ProbabilityVector simpson_probabilities(const CuboidSpec& spec);

}  // namespace gibbsdice
