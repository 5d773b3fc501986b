#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace numfactor::cli {

/// Self-contained SVG scatter plot in a fixed 1000x300 viewport: one filled
/// circle per point, both axes with ticks and labels, no external assets.
std::string svg_scatter(const std::string& x_label, const std::string& y_label,
                        const std::vector<std::pair<std::int64_t, std::int64_t>>& points);

}  // namespace numfactor::cli
