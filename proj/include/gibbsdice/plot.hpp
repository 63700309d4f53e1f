#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gibbsdice/estimation.hpp"
#include "gibbsdice/model.hpp"

namespace gibbsdice {

/// Standard deviation drawn as the vertical error bar of f_xx.
enum class VerticalError {
  Caption,   ///< sqrt(f_xx / n_xx)
  Binomial,  ///< sqrt(f_xx (1 - f_xx) / N)
};

struct PlotSeries {
  std::string label;
  std::vector<XxyObservation> rows;
  double beta = 0.0;
};

struct PlotOptions {
  double epsilon = 0.05;  ///< relative side-length error behind the horizontal bars
  VerticalError vertical = VerticalError::Caption;
  int curve_points = 200;
  EnergyNormalization norm = EnergyNormalization::geometric_mean();
};

/// (s_y / s_x, p_xx) pairs on an even grid over [r_min, r_max].
std::vector<std::pair<double, double>> model_curve(
    double beta, double r_min, double r_max, int points,
    const EnergyNormalization& norm = EnergyNormalization::geometric_mean());

/// SVG scatter of measured f_xx against s_y / s_x with error bars, overlaid
/// with one fitted p_xx curve per series.
std::string render_fxx_plot(std::span<const PlotSeries> series, const PlotOptions& opts = {});

}  // namespace gibbsdice
