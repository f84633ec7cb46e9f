#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tss/baseline.hpp"
#include "tss/series.hpp"

namespace tss {

struct ChartLayout {
    double width = 900.0;
    double height = 360.0;
    double margin = 45.0;
};

// Pixel mapping for the plot area; y grows downward in SVG. Exposed so tests
// can recompute the exact polyline coordinates from the underlying data.
double chart_map_x(double t, double t_min, double t_max, const ChartLayout& layout);
double chart_map_y(double v, double v_min, double v_max, const ChartLayout& layout);

struct ChartLine {
    std::string label;
    std::string color;
    Series data;
};

// Minimal SVG line chart. Each line is normalized to its own value range
// (dual-axis style) so a ~0.1-scale TSS and a ~7400-scale price share the
// plot. Optional capable/incapable bands shade the x ranges of regions, and
// an optional horizontal rule marks tss_b on the first line's scale.
std::string line_chart_svg(const std::string& title, const std::vector<ChartLine>& lines,
                           const std::vector<Region>& bands = {},
                           std::optional<double> baseline_value = std::nullopt,
                           const ChartLayout& layout = {});

std::string xml_escape(const std::string& text);

}  // namespace tss
