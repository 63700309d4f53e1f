#include "gibbsdice/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace gibbsdice {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

// ln(exp(a) + exp(b)) without overflow.
double log_add_exp(double a, double b) {
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace

void CuboidSpec::validate() const {
  if (!positive_finite(s1) || !positive_finite(s2) || !positive_finite(s3)) {
    throw InvalidGeometry("cuboid side-lengths must be positive and finite, got " +
                          std::to_string(s1) + " x " + std::to_string(s2) + " x " +
                          std::to_string(s3));
  }
}

std::vector<double> CuboidSpec::half_heights() const {
  validate();
  const double h1 = s1 / 2.0;
  const double h2 = s2 / 2.0;
  const double h3 = s3 / 2.0;
  return {h2, h3, h1, h1, h3, h2};
}

void GeneralDieSpec::validate() const {
  if (heights.size() < 2) {
    throw InvalidGeometry("a die needs at least two resting states");
  }
  for (std::size_t i = 0; i < heights.size(); ++i) {
    if (!positive_finite(heights[i])) {
      throw InvalidGeometry("height of state " + std::to_string(i + 1) +
                            " must be positive and finite");
    }
  }
  if (!positive_finite(scale)) {
    throw InvalidGeometry("normalization scale must be positive and finite");
  }
}

EnergyNormalization EnergyNormalization::explicit_scale(double scale) {
  if (!positive_finite(scale)) {
    throw InvalidGeometry("normalization scale must be positive and finite");
  }
  return EnergyNormalization(Kind::Explicit, scale);
}

EnergyVector::EnergyVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw InvalidParameter("an energy vector needs at least two states");
  }
  for (double e : values_) {
    if (!positive_finite(e)) throw InvalidParameter("energies must be positive and finite");
  }
}

double EnergyVector::min() const { return *std::min_element(values_.begin(), values_.end()); }

ProbabilityVector::ProbabilityVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidParameter("empty probability vector");
  double total = 0.0;
  for (double p : values_) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
      throw InvalidParameter("probabilities must lie in [0, 1]");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw InvalidParameter("probabilities must sum to one, got " + std::to_string(total));
  }
}

void require_valid_beta(double beta) {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw InvalidParameter("beta must be finite and non-negative, got " + std::to_string(beta));
  }
}

EnergyVector cuboid_energies(const CuboidSpec& spec, const EnergyNormalization& norm) {
  const std::vector<double> h = spec.half_heights();
  const double h1 = spec.s1 / 2.0;
  const double h2 = spec.s2 / 2.0;
  const double h3 = spec.s3 / 2.0;

  double divisor = 0.0;
  switch (norm.kind()) {
    case EnergyNormalization::Kind::HalfDiagonal:
      divisor = std::sqrt(h1 * h1 + h2 * h2 + h3 * h3);
      break;
    case EnergyNormalization::Kind::GeometricMean:
      divisor = std::cbrt(h1 * h2 * h3);
      break;
    case EnergyNormalization::Kind::Explicit:
      throw InvalidParameter(
          "cuboid energies take a half-diagonal or geometric-mean normalization");
  }

  std::vector<double> e(h.size());
  std::transform(h.begin(), h.end(), e.begin(), [divisor](double x) { return x / divisor; });
  return EnergyVector(std::move(e));
}

EnergyVector general_energies(const GeneralDieSpec& spec) {
  spec.validate();
  std::vector<double> e(spec.heights.size());
  std::transform(spec.heights.begin(), spec.heights.end(), e.begin(),
                 [&spec](double h) { return h / spec.scale; });
  return EnergyVector(std::move(e));
}

ProbabilityVector gibbs_probabilities(const EnergyVector& energies, double beta) {
  require_valid_beta(beta);
  const double emin = energies.min();
  std::vector<double> w(energies.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::exp(-beta * (energies[i] - emin));
  // The minimal state contributes exactly 1, so the sum never underflows.
  const double z = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= z;
  return ProbabilityVector(std::move(w));
}

double log_partition(const EnergyVector& energies, double beta) {
  require_valid_beta(beta);
  const double emin = energies.min();
  double shifted = 0.0;
  for (double e : energies.values()) shifted += std::exp(-beta * (e - emin));
  return -beta * emin + std::log(shifted);
}

double mean_energy(const EnergyVector& energies, double beta) {
  const ProbabilityVector p = gibbs_probabilities(energies, beta);
  double mean = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) mean += p[i] * energies[i];
  return mean;
}

XxyEnergies xxy_energies(double sx, double sy, const EnergyNormalization& norm) {
  if (!positive_finite(sx) || !positive_finite(sy)) {
    throw InvalidGeometry("xxy side-lengths must be positive and finite, got s_x=" +
                          std::to_string(sx) + ", s_y=" + std::to_string(sy));
  }
  double divisor = 0.0;
  switch (norm.kind()) {
    case EnergyNormalization::Kind::GeometricMean:
      divisor = std::cbrt(sx * sx * sy);
      break;
    case EnergyNormalization::Kind::HalfDiagonal:
      divisor = std::sqrt(2.0 * sx * sx + sy * sy);
      break;
    case EnergyNormalization::Kind::Explicit:
      // Explicit scales are lengths applied to half-heights.
      return {sx / (2.0 * norm.scale()), sy / (2.0 * norm.scale())};
  }
  return {sx / divisor, sy / divisor};
}

double xxy_log_pxx(const XxyEnergies& e, double beta) {
  require_valid_beta(beta);
  // p_xx = exp(-b Ey) / (exp(-b Ey) + 2 exp(-b Ex))
  return -beta * e.ey - log_add_exp(-beta * e.ey, std::log(2.0) - beta * e.ex);
}

double xxy_log_pxy(const XxyEnergies& e, double beta) {
  require_valid_beta(beta);
  const double log_four_faces = std::log(2.0) - beta * e.ex;
  return log_four_faces - log_add_exp(-beta * e.ey, log_four_faces);
}

double xxy_pxx(double sx, double sy, double beta, const EnergyNormalization& norm) {
  return std::exp(xxy_log_pxx(xxy_energies(sx, sy, norm), beta));
}

}  // namespace gibbsdice
