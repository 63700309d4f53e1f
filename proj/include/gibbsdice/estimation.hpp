#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gibbsdice/model.hpp"

namespace gibbsdice {

/// Observed number of outcomes per die state.
class TossCounts {
 public:
  explicit TossCounts(std::vector<std::uint64_t> counts);

  std::size_t size() const noexcept { return counts_.size(); }
  std::uint64_t operator[](std::size_t i) const { return counts_[i]; }
  std::span<const std::uint64_t> values() const noexcept { return counts_; }
  std::uint64_t total() const noexcept { return total_; }
  double frequency(std::size_t i) const { return static_cast<double>(counts_[i]) / total_; }

  friend bool operator==(const TossCounts&, const TossCounts&) = default;

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

/// One xxy-cuboid of a family: side-lengths, tosses, and square-face count.
struct XxyObservation {
  double sx = 0.0;
  double sy = 0.0;
  std::uint64_t tosses = 0;
  std::uint64_t nxx = 0;

  void validate() const;
  double fxx() const { return static_cast<double>(nxx) / static_cast<double>(tosses); }

  friend bool operator==(const XxyObservation&, const XxyObservation&) = default;
};

struct FitOptions {
  double lo = 0.0;
  double hi = 100.0;
  double tolerance = 1e-6;
};

enum class FitBoundary { None, Lower, Upper };

struct FitResult {
  double beta_hat = 0.0;
  double neg_log_likelihood_at_min = 0.0;
  int iterations = 0;
  double lo = 0.0;  ///< bracket actually searched
  double hi = 0.0;
  bool converged = false;
  FitBoundary boundary = FitBoundary::None;
};

/// N [ln Z(beta) + beta sum_i E_i f_i], i.e. -ln L without any constant.
double neg_log_likelihood(const EnergyVector& energies, const TossCounts& counts, double beta);

/// d/dbeta of neg_log_likelihood: N (sum_i E_i f_i - <E>_beta).
double neg_log_likelihood_slope(const EnergyVector& energies, const TossCounts& counts,
                                double beta);

FitResult fit_beta(const EnergyVector& energies, const TossCounts& counts,
                   const FitOptions& opts = {});

/// Joint objective over a family of xxy-cuboids sharing one beta.
double global_neg_log_likelihood(
    std::span<const XxyObservation> obs, double beta,
    const EnergyNormalization& norm = EnergyNormalization::geometric_mean());

FitResult fit_beta_global(std::span<const XxyObservation> obs, const FitOptions& opts = {},
                          const EnergyNormalization& norm = EnergyNormalization::geometric_mean());

/// Golden-section search for the minimum of a unimodal function on
/// [lo, hi]. Stops once the bracket is no wider than `tolerance`.
struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
};

ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo,
                                      double hi, double tolerance);

}  // namespace gibbsdice
