#include "gibbsdice/estimation.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace gibbsdice {

TossCounts::TossCounts(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw InvalidParameter("toss counts are empty");
  total_ = std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
  if (total_ == 0) throw InvalidParameter("toss counts contain no observations");
}

void XxyObservation::validate() const {
  if (!(std::isfinite(sx) && sx > 0.0) || !(std::isfinite(sy) && sy > 0.0)) {
    throw InvalidGeometry("xxy side-lengths must be positive and finite");
  }
  if (tosses == 0) throw InvalidParameter("an xxy observation needs N >= 1 tosses");
  if (nxx > tosses) {
    throw InvalidParameter("n_xx = " + std::to_string(nxx) + " exceeds N = " +
                           std::to_string(tosses));
  }
}

ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo,
                                      double hi, double tolerance) {
  if (!(lo <= hi) || !(tolerance > 0.0)) {
    throw InvalidParameter("golden-section search needs lo <= hi and tolerance > 0");
  }
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int iterations = 0;
  while (b - a > tolerance) {
    ++iterations;
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }

  // Best of the interior probes and the bracket ends; the ends matter when
  // the minimum sits on the boundary.
  ScalarMinimum best{c, fc, a, b, iterations};
  if (fd < best.value) best.x = d, best.value = fd;
  for (double edge : {a, b}) {
    const double fe = f(edge);
    if (fe < best.value) best.x = edge, best.value = fe;
  }
  return best;
}

namespace {

void check_options(const FitOptions& opts) {
  if (!(opts.lo >= 0.0) || !(opts.hi > opts.lo) || !std::isfinite(opts.hi) ||
      !(opts.tolerance > 0.0)) {
    throw InvalidParameter("fit bracket must satisfy 0 <= lo < hi < inf with tolerance > 0");
  }
}

// Shared driver: minimize on the bracket, widen the upper edge tenfold once
// if the minimum lands there.
FitResult bracketed_fit(const std::function<double(double)>& objective, const FitOptions& opts,
                        bool unbounded_above) {
  check_options(opts);
  double hi = opts.hi;
  ScalarMinimum m = golden_section_minimize(objective, opts.lo, hi, opts.tolerance);
  int iterations = m.iterations;
  const auto at_upper = [&](const ScalarMinimum& r, double edge) {
    return edge - r.x <= opts.tolerance;
  };
  if (at_upper(m, hi) && !unbounded_above) {
    hi = opts.lo + 10.0 * (opts.hi - opts.lo);
    m = golden_section_minimize(objective, opts.lo, hi, opts.tolerance);
    iterations += m.iterations;
  }

  FitResult r;
  r.beta_hat = m.x;
  r.neg_log_likelihood_at_min = m.value;
  r.iterations = iterations;
  r.lo = opts.lo;
  r.hi = hi;
  if (unbounded_above || at_upper(m, hi)) {
    r.boundary = FitBoundary::Upper;
    r.converged = false;
  } else {
    r.boundary = (m.x - opts.lo <= opts.tolerance) ? FitBoundary::Lower : FitBoundary::None;
    r.converged = (m.hi - m.lo) <= opts.tolerance;
  }
  return r;
}

}  // namespace

double neg_log_likelihood(const EnergyVector& energies, const TossCounts& counts, double beta) {
  if (energies.size() != counts.size()) {
    throw DimensionMismatch("energy vector has " + std::to_string(energies.size()) +
                            " states but counts have " + std::to_string(counts.size()));
  }
  double mean_observed = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) mean_observed += energies[i] * counts.frequency(i);
  const double n = static_cast<double>(counts.total());
  return n * (log_partition(energies, beta) + beta * mean_observed);
}

double neg_log_likelihood_slope(const EnergyVector& energies, const TossCounts& counts,
                                double beta) {
  if (energies.size() != counts.size()) {
    throw DimensionMismatch("energy vector and counts differ in length");
  }
  double mean_observed = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) mean_observed += energies[i] * counts.frequency(i);
  return static_cast<double>(counts.total()) * (mean_observed - mean_energy(energies, beta));
}

FitResult fit_beta(const EnergyVector& energies, const TossCounts& counts,
                   const FitOptions& opts) {
  if (energies.size() != counts.size()) {
    throw DimensionMismatch("energy vector has " + std::to_string(energies.size()) +
                            " states but counts have " + std::to_string(counts.size()));
  }
  // With every observation on a minimal-energy state the likelihood keeps
  // rising as beta grows; there is no finite maximizer.
  const double emin = energies.min();
  bool only_minimal = true;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0 && energies[i] != emin) only_minimal = false;
  }
  bool all_equal = true;
  for (double e : energies.values()) all_equal = all_equal && e == emin;
  const bool unbounded = only_minimal && !all_equal;

  return bracketed_fit([&](double b) { return neg_log_likelihood(energies, counts, b); }, opts,
                       unbounded);
}

double global_neg_log_likelihood(std::span<const XxyObservation> obs, double beta,
                                 const EnergyNormalization& norm) {
  if (obs.empty()) throw InvalidParameter("global likelihood needs at least one cuboid");
  require_valid_beta(beta);
  double total = 0.0;
  for (const XxyObservation& o : obs) {
    o.validate();
    const XxyEnergies e = xxy_energies(o.sx, o.sy, norm);
    const double n = static_cast<double>(o.tosses);
    const double nxx = static_cast<double>(o.nxx);
    // ln Z_j = ln(exp(-b Ey) + 2 exp(-b Ex)) = -b Ey - ln p_xx
    const double log_z = -beta * e.ey - xxy_log_pxx(e, beta);
    total += n * log_z + beta * (nxx * e.ey + (n - nxx) * e.ex);
  }
  return total;
}

FitResult fit_beta_global(std::span<const XxyObservation> obs, const FitOptions& opts,
                          const EnergyNormalization& norm) {
  if (obs.empty()) throw InvalidParameter("global fit needs at least one cuboid");
  // Unbounded when every observed outcome is the lower-energy macro-state of
  // its cuboid (and at least one cuboid is not a cube).
  bool unbounded = true;
  bool any_noncube = false;
  for (const XxyObservation& o : obs) {
    o.validate();
    const XxyEnergies e = xxy_energies(o.sx, o.sy, norm);
    if (e.ex == e.ey) continue;
    any_noncube = true;
    const bool xx_lower = e.ey < e.ex;
    const std::uint64_t off_state = xx_lower ? o.tosses - o.nxx : o.nxx;
    if (off_state > 0) unbounded = false;
  }
  return bracketed_fit([&](double b) { return global_neg_log_likelihood(obs, b, norm); }, opts,
                       unbounded && any_noncube);
}

}  // namespace gibbsdice
