#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gibbsdice/estimation.hpp"
#include "gibbsdice/model.hpp"

namespace gibbsdice {

enum class Verdict { Consistent, Rejected };

/// Pearson statistic with the chi2/m <= 1 adequacy rule.
struct GofResult {
  double chi2 = 0.0;
  std::size_t m = 0;
  double chi2_per_m = 0.0;
  Verdict verdict = Verdict::Consistent;
};

/// Two-cell (xx / xy) Pearson terms summed over the cuboid family.
GofResult chi_square_xxy(std::span<const XxyObservation> obs, double beta,
                         const EnergyNormalization& norm = EnergyNormalization::geometric_mean());

/// Pearson statistic over the k cells of one die; m = k.
GofResult chi_square_full(const TossCounts& counts, const ProbabilityVector& p);

/// Which side-lengths enter the energies when beta* is re-estimated from a
/// simulated family. The analyst only knows the nominal lengths, so Nominal
/// is the default; Perturbed is there for sensitivity checks.
enum class RefitLengths { Nominal, Perturbed };

struct BootstrapConfig {
  std::size_t iterations = 999;
  double epsilon = 0.0;  ///< relative standard deviation of side-lengths
  std::uint64_t master_seed = 1;
  double beta0 = 0.0;  ///< beta fitted to the real data
  RefitLengths refit_lengths = RefitLengths::Nominal;
  EnergyNormalization norm = EnergyNormalization::geometric_mean();
  FitOptions fit{};
  /// Worker threads; 0 picks the hardware concurrency. Never affects results.
  std::size_t lanes = 1;

  void validate() const;
};

struct BootstrapResult {
  double chi2_observed = 0.0;
  std::vector<double> chi2_simulated;
  double p_value = 0.0;
  BootstrapConfig config;
};

/// Parametric bootstrap of the constant-beta hypothesis for an xxy family
/// with Gaussian manufacturing errors on every side-length.
///
/// Iteration b draws from RandomStream(master_seed, b) only:
///   1. for each cuboid, s_x* ~ N(s_x, eps s_x) and s_y* ~ N(s_y, eps s_y),
///      redrawing non-positive values;
///   2. n_xx* ~ Binomial(N_j, p_xx(s_x*, s_y*, beta0));
///   3. beta* is the global MLE of the simulated counts;
///   4. chi2~_b is the family Pearson statistic at beta* on nominal lengths.
/// The p-value is #{chi2~_b >= chi2_observed} / B where chi2_observed is the
/// statistic of the real data at beta0.
BootstrapResult bootstrap_constant_beta(std::span<const XxyObservation> obs,
                                        const BootstrapConfig& cfg);

/// One bootstrap replicate; exposed so tests can check the assembly order.
double bootstrap_replicate(std::span<const XxyObservation> obs, const BootstrapConfig& cfg,
                           std::uint64_t iteration);

}  // namespace gibbsdice
