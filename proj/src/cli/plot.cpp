#include "gibbsdice/plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace gibbsdice {

std::vector<std::pair<double, double>> model_curve(double beta, double r_min, double r_max,
                                                   int points, const EnergyNormalization& norm) {
  if (points < 2 || !(r_min > 0.0) || !(r_max > r_min)) {
    throw InvalidParameter("model curve needs 0 < r_min < r_max and at least two points");
  }
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double r = r_min + (r_max - r_min) * i / (points - 1);
    out.emplace_back(r, xxy_pxx(1.0, r, beta, norm));
  }
  return out;
}

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 480;
constexpr double kLeft = 70;
constexpr double kRight = 30;
constexpr double kTop = 30;
constexpr double kBottom = 60;
constexpr std::array<const char*, 6> kColors = {"#1f77b4", "#d62728", "#2ca02c",
                                                "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_fxx_plot(std::span<const PlotSeries> series, const PlotOptions& opts) {
  std::size_t markers = 0;
  double r_max = 0.0;
  for (const auto& s : series) {
    for (const auto& o : s.rows) {
      o.validate();
      r_max = std::max(r_max, o.sy / o.sx * (1.0 + 2.0 * opts.epsilon));
      ++markers;
    }
  }
  if (markers == 0) throw InvalidParameter("nothing to plot: the datasets have no rows");

  const double x_max = std::ceil(r_max * 2.0) / 2.0;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto px = [&](double r) { return kLeft + plot_w * r / x_max; };
  const auto py = [&](double p) { return kTop + plot_h * (1.0 - p); };

  std::ostringstream svg;
  svg << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << kWidth << R"(" height=")"
      << kHeight << R"(" viewBox="0 0 )" << kWidth << ' ' << kHeight << R"(">)" << '\n';
  svg << R"(<rect width="100%" height="100%" fill="white"/>)" << '\n';

  // Axes, ticks, labels.
  svg << R"(<g class="axes" stroke="black" stroke-width="1" font-family="sans-serif" font-size="12">)"
      << '\n';
  svg << "<line x1=\"" << num(px(0)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(x_max))
      << "\" y2=\"" << num(py(0)) << "\"/>\n";
  svg << "<line x1=\"" << num(px(0)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(0))
      << "\" y2=\"" << num(py(1)) << "\"/>\n";
  for (double t = 0.0; t <= x_max + 1e-9; t += 0.5) {
    svg << "<line x1=\"" << num(px(t)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(t))
        << "\" y2=\"" << num(py(0) + 5) << "\"/>";
    svg << "<text stroke=\"none\" x=\"" << num(px(t)) << "\" y=\"" << num(py(0) + 20)
        << "\" text-anchor=\"middle\">" << num(t) << "</text>\n";
  }
  for (double t = 0.0; t <= 1.0 + 1e-9; t += 0.2) {
    svg << "<line x1=\"" << num(px(0) - 5) << "\" y1=\"" << num(py(t)) << "\" x2=\"" << num(px(0))
        << "\" y2=\"" << num(py(t)) << "\"/>";
    svg << "<text stroke=\"none\" x=\"" << num(px(0) - 8) << "\" y=\"" << num(py(t) + 4)
        << "\" text-anchor=\"end\">" << num(t) << "</text>\n";
  }
  svg << "<text stroke=\"none\" x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 15)
      << "\" text-anchor=\"middle\">s_y / s_x</text>\n";
  svg << "<text stroke=\"none\" transform=\"rotate(-90)\" x=\"" << num(-(kTop + plot_h / 2))
      << "\" y=\"20\" text-anchor=\"middle\">f_xx, p_xx</text>\n";
  svg << "</g>\n";

  bool missing_vertical = false;
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* color = kColors[k % kColors.size()];

    svg << "<polyline class=\"model\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    const auto curve = model_curve(s.beta, x_max / opts.curve_points, x_max, opts.curve_points,
                                   opts.norm);
    for (std::size_t i = 0; i < curve.size(); ++i) {
      svg << (i ? " " : "") << num(px(curve[i].first)) << ',' << num(py(curve[i].second));
    }
    svg << "\"/>\n";

    svg << "<g class=\"series\" stroke=\"" << color << "\" fill=\"" << color << "\">\n";
    for (const auto& o : s.rows) {
      const double r = o.sy / o.sx;
      const double f = o.fxx();
      const double dx = opts.epsilon * std::sqrt(2.0) * r;
      svg << "<line class=\"xerr\" x1=\"" << num(px(r - dx)) << "\" y1=\"" << num(py(f))
          << "\" x2=\"" << num(px(r + dx)) << "\" y2=\"" << num(py(f)) << "\"/>";
      double dy = 0.0;
      bool has_vertical = true;
      if (opts.vertical == VerticalError::Caption) {
        has_vertical = o.nxx > 0;
        if (has_vertical) dy = std::sqrt(f / static_cast<double>(o.nxx));
      } else {
        dy = std::sqrt(f * (1.0 - f) / static_cast<double>(o.tosses));
      }
      if (has_vertical) {
        svg << "<line class=\"yerr\" x1=\"" << num(px(r)) << "\" y1=\""
            << num(py(std::max(0.0, f - dy))) << "\" x2=\"" << num(px(r)) << "\" y2=\""
            << num(py(std::min(1.0, f + dy))) << "\"/>";
      } else {
        missing_vertical = true;
      }
      svg << "<circle class=\"data\" cx=\"" << num(px(r)) << "\" cy=\"" << num(py(f))
          << "\" r=\"3\"/>\n";
    }
    svg << "</g>\n";
  }

  // Legend.
  svg << R"(<g class="legend" font-family="sans-serif" font-size="12">)" << '\n';
  double ly = kTop + 10;
  for (std::size_t k = 0; k < series.size(); ++k) {
    const char* color = kColors[k % kColors.size()];
    const double lx = kLeft + plot_w - 230;
    svg << "<circle cx=\"" << num(lx) << "\" cy=\"" << num(ly) << "\" r=\"3\" fill=\"" << color
        << "\"/><line x1=\"" << num(lx + 8) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 28)
        << "\" y2=\"" << num(ly) << "\" stroke=\"" << color << "\"/>";
    char beta[32];
    std::snprintf(beta, sizeof beta, "%.2f", series[k].beta);
    svg << "<text x=\"" << num(lx + 34) << "\" y=\"" << num(ly + 4) << "\">"
        << escape(series[k].label) << " (beta = " << beta << ")</text>\n";
    ly += 18;
  }
  if (missing_vertical) {
    svg << "<text x=\"" << num(kLeft + plot_w - 230) << "\" y=\"" << num(ly + 4)
        << "\">n_xx = 0: no vertical error bar</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace gibbsdice
