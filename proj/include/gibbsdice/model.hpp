#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gibbsdice/error.hpp"

namespace gibbsdice {

/// Homogeneous cuboid with side-lengths in any consistent length unit.
///
/// Face numbering follows the usual die layout with opposite faces summing to
/// seven. The resting state "face i on top" has its center of gravity at half
/// the side-length perpendicular to face i:
///
///   faces 3 and 4 are perpendicular to s1,
///   faces 1 and 6 are perpendicular to s2,
///   faces 2 and 5 are perpendicular to s3.
///
/// With (s1, s2, s3) = (13, 20, 23) this gives half-heights
/// (10, 11.5, 6.5, 6.5, 11.5, 10).
struct CuboidSpec {
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;

  /// Throws InvalidGeometry unless all sides are positive and finite.
  void validate() const;

  /// Center-of-gravity heights for faces 1..6.
  std::vector<double> half_heights() const;
};

/// Arbitrary die described directly by its resting-state center-of-gravity
/// heights and the length used to make them dimensionless.
struct GeneralDieSpec {
  std::vector<double> heights;
  double scale = 0.0;

  void validate() const;
};

/// How cuboid half-heights are turned into dimensionless energies.
class EnergyNormalization {
 public:
  enum class Kind { HalfDiagonal, GeometricMean, Explicit };

  /// h_i / sqrt(h1^2 + h2^2 + h3^2) over the three distinct half-heights.
  static EnergyNormalization half_diagonal() { return EnergyNormalization(Kind::HalfDiagonal, 0.0); }
  /// h_i / (h1 h2 h3)^(1/3).
  static EnergyNormalization geometric_mean() { return EnergyNormalization(Kind::GeometricMean, 0.0); }
  /// h_i / scale for a caller-supplied positive length.
  static EnergyNormalization explicit_scale(double scale);

  Kind kind() const noexcept { return kind_; }
  double scale() const noexcept { return scale_; }

  friend bool operator==(const EnergyNormalization&, const EnergyNormalization&) = default;

 private:
  EnergyNormalization(Kind kind, double scale) : kind_(kind), scale_(scale) {}

  Kind kind_;
  double scale_;
};

/// Dimensionless per-state energies; at least two states, all positive.
class EnergyVector {
 public:
  explicit EnergyVector(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  double min() const;

 private:
  std::vector<double> values_;
};

/// Discrete distribution over die states. Entries sum to one.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

EnergyVector cuboid_energies(const CuboidSpec& spec, const EnergyNormalization& norm);

EnergyVector general_energies(const GeneralDieSpec& spec);

/// Gibbs distribution p_i = exp(-beta E_i) / Z(beta). Energies are shifted by
/// their minimum before exponentiation, so large beta concentrates mass on
/// the lowest states instead of underflowing.
ProbabilityVector gibbs_probabilities(const EnergyVector& energies, double beta);

/// ln Z(beta) for the unshifted energies, evaluated without overflow.
double log_partition(const EnergyVector& energies, double beta);

/// Gibbs mean energy <E> under p(beta).
double mean_energy(const EnergyVector& energies, double beta);

/// Energies (E_x, E_y) of an xxy-cuboid: E_x belongs to the four rectangular
/// faces (height s_x / 2), E_y to the two square faces (height s_y / 2).
struct XxyEnergies {
  double ex = 0.0;
  double ey = 0.0;
};

XxyEnergies xxy_energies(double sx, double sy,
                         const EnergyNormalization& norm = EnergyNormalization::geometric_mean());

/// Probability that an xxy-cuboid shows one of its two square faces.
double xxy_pxx(double sx, double sy, double beta,
               const EnergyNormalization& norm = EnergyNormalization::geometric_mean());

/// ln p_xx, accurate even when p_xx underflows.
double xxy_log_pxx(const XxyEnergies& e, double beta);
/// ln (1 - p_xx).
double xxy_log_pxy(const XxyEnergies& e, double beta);

void require_valid_beta(double beta);

}  // namespace gibbsdice
