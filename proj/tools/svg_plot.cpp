#include "svg_plot.hpp"

#include <algorithm>
#include <cstdio>

namespace numfactor::cli {
namespace {

constexpr double kWidth = 1000.0;
constexpr double kHeight = 300.0;
constexpr double kLeft = 55.0;
constexpr double kRight = 985.0;
constexpr double kTop = 15.0;
constexpr double kBottom = 260.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string svg_scatter(const std::string& x_label, const std::string& y_label,
                        const std::vector<std::pair<std::int64_t, std::int64_t>>& points) {
  std::int64_t x_max = 1, y_max = 1;
  for (const auto& [x, y] : points) {
    x_max = std::max(x_max, x);
    y_max = std::max(y_max, y);
  }
  const auto sx = [&](std::int64_t x) {
    return kLeft + (kRight - kLeft) * static_cast<double>(x) / static_cast<double>(x_max);
  };
  const auto sy = [&](std::int64_t y) {
    return kBottom - (kBottom - kTop) * static_cast<double>(y) / static_cast<double>(y_max);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"300\" "
         "viewBox=\"0 0 1000 300\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt(kWidth) + "\" height=\"" + fmt(kHeight) +
         "\" fill=\"white\"/>\n";
  svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kBottom) + "\" x2=\"" + fmt(kRight) +
         "\" y2=\"" + fmt(kBottom) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kBottom) + "\" x2=\"" + fmt(kLeft) +
         "\" y2=\"" + fmt(kTop) + "\" stroke=\"black\"/>\n";

  for (int t = 0; t <= 4; ++t) {
    const std::int64_t xv = x_max * t / 4;
    const double x = sx(xv);
    svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(kBottom) + "\" x2=\"" + fmt(x) +
           "\" y2=\"" + fmt(kBottom + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(kBottom + 18) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + std::to_string(xv) + "</text>\n";
    const std::int64_t yv = y_max * t / 4;
    const double y = sy(yv);
    svg += "<line x1=\"" + fmt(kLeft - 5) + "\" y1=\"" + fmt(y) + "\" x2=\"" + fmt(kLeft) +
           "\" y2=\"" + fmt(y) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt(kLeft - 9) + "\" y=\"" + fmt(y + 4) +
           "\" font-size=\"11\" text-anchor=\"end\">" + std::to_string(yv) + "</text>\n";
  }

  svg += "<text x=\"" + fmt((kLeft + kRight) / 2) + "\" y=\"" + fmt(kHeight - 8) +
         "\" font-size=\"13\" text-anchor=\"middle\">" + x_label + "</text>\n";
  svg += "<text x=\"14\" y=\"" + fmt((kTop + kBottom) / 2) +
         "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 14 " +
         fmt((kTop + kBottom) / 2) + ")\">" + y_label + "</text>\n";

  for (const auto& [x, y] : points) {
    svg += "<circle cx=\"" + fmt(sx(x)) + "\" cy=\"" + fmt(sy(y)) +
           "\" r=\"2.50\" fill=\"#336699\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace numfactor::cli
