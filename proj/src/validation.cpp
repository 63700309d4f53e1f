#include "gibbsdice/validation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "gibbsdice/random.hpp"

namespace gibbsdice {

namespace {

GofResult make_result(double chi2, std::size_t m) {
  GofResult r;
  r.chi2 = chi2;
  r.m = m;
  r.chi2_per_m = chi2 / static_cast<double>(m);
  r.verdict = r.chi2_per_m <= 1.0 ? Verdict::Consistent : Verdict::Rejected;
  return r;
}

double pearson_term(double observed, double expected) {
  const double d = expected - observed;
  return d * d / expected;
}

}  // namespace

GofResult chi_square_xxy(std::span<const XxyObservation> obs, double beta,
                         const EnergyNormalization& norm) {
  if (obs.empty()) throw InvalidParameter("chi-square needs at least one cuboid");
  double chi2 = 0.0;
  for (std::size_t j = 0; j < obs.size(); ++j) {
    const XxyObservation& o = obs[j];
    o.validate();
    const XxyEnergies e = xxy_energies(o.sx, o.sy, norm);
    const double n = static_cast<double>(o.tosses);
    const double expected_xx = n * std::exp(xxy_log_pxx(e, beta));
    const double expected_xy = n * std::exp(xxy_log_pxy(e, beta));
    if (!(expected_xx > 0.0) || !(expected_xy > 0.0)) {
      throw DegenerateCell("cuboid " + std::to_string(j + 1) + " (s_x=" + std::to_string(o.sx) +
                           ", s_y=" + std::to_string(o.sy) + ") has a zero expected count");
    }
    const double nxx = static_cast<double>(o.nxx);
    chi2 += pearson_term(nxx, expected_xx) + pearson_term(n - nxx, expected_xy);
  }
  return make_result(chi2, obs.size());
}

GofResult chi_square_full(const TossCounts& counts, const ProbabilityVector& p) {
  if (counts.size() != p.size()) {
    throw DimensionMismatch("counts have " + std::to_string(counts.size()) +
                            " cells but the model has " + std::to_string(p.size()));
  }
  const double n = static_cast<double>(counts.total());
  double chi2 = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = n * p[i];
    if (!(expected > 0.0)) {
      throw DegenerateCell("cell " + std::to_string(i + 1) + " has a zero expected count");
    }
    chi2 += pearson_term(static_cast<double>(counts[i]), expected);
  }
  return make_result(chi2, counts.size());
}

void BootstrapConfig::validate() const {
  if (iterations < 1) throw InvalidParameter("bootstrap needs at least one iteration");
  if (!std::isfinite(epsilon) || epsilon < 0.0) {
    throw InvalidParameter("epsilon must be finite and non-negative");
  }
  require_valid_beta(beta0);
}

double bootstrap_replicate(std::span<const XxyObservation> obs, const BootstrapConfig& cfg,
                           std::uint64_t iteration) {
  RandomStream stream(cfg.master_seed, iteration);
  const auto perturb = [&](double nominal) {
    double v = 0.0;
    do {
      v = stream.normal(nominal, cfg.epsilon * nominal);
    } while (!(v > 0.0));
    return v;
  };

  std::vector<XxyObservation> simulated(obs.begin(), obs.end());
  std::vector<XxyObservation> perturbed(obs.begin(), obs.end());
  for (std::size_t j = 0; j < obs.size(); ++j) {
    const double sx = perturb(obs[j].sx);
    const double sy = perturb(obs[j].sy);
    const double p = xxy_pxx(sx, sy, cfg.beta0, cfg.norm);
    const std::uint64_t nxx = simulate_tosses(p, obs[j].tosses, stream);
    simulated[j].nxx = nxx;
    perturbed[j] = {sx, sy, obs[j].tosses, nxx};
  }

  const auto& refit_on =
      cfg.refit_lengths == RefitLengths::Nominal ? simulated : perturbed;
  const FitResult refit = fit_beta_global(refit_on, cfg.fit, cfg.norm);
  return chi_square_xxy(simulated, refit.beta_hat, cfg.norm).chi2;
}

BootstrapResult bootstrap_constant_beta(std::span<const XxyObservation> obs,
                                        const BootstrapConfig& cfg) {
  cfg.validate();
  if (obs.empty()) throw InvalidParameter("bootstrap needs at least one cuboid");

  BootstrapResult result;
  result.config = cfg;
  result.chi2_observed = chi_square_xxy(obs, cfg.beta0, cfg.norm).chi2;
  result.chi2_simulated.assign(cfg.iterations, 0.0);

  std::size_t lanes = cfg.lanes == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.lanes;
  lanes = std::min(lanes, cfg.iterations);

  // Each slot is written by exactly one worker; the values depend only on
  // the iteration index.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  const auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= cfg.iterations || failed.load()) return;
      try {
        result.chi2_simulated[b] = bootstrap_replicate(obs, cfg, b);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  if (lanes <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(lanes);
    for (std::size_t i = 0; i < lanes; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  const auto exceed = std::count_if(result.chi2_simulated.begin(), result.chi2_simulated.end(),
                                    [&](double c) { return c >= result.chi2_observed; });
  result.p_value = static_cast<double>(exceed) / static_cast<double>(cfg.iterations);
  return result;
}

}  // namespace gibbsdice
