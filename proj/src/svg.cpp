#include "tss/svg.hpp"

#include <algorithm>
#include <stdexcept>

#include "tss/csv.hpp"

namespace tss {

double chart_map_x(double t, double t_min, double t_max, const ChartLayout& layout) {
    const double span = t_max > t_min ? t_max - t_min : 1.0;
    const double inner = layout.width - 2.0 * layout.margin;
    return layout.margin + (t - t_min) / span * inner;
}

double chart_map_y(double v, double v_min, double v_max, const ChartLayout& layout) {
    const double span = v_max > v_min ? v_max - v_min : 1.0;
    const double inner = layout.height - 2.0 * layout.margin;
    return layout.height - layout.margin - (v - v_min) / span * inner;
}

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
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

namespace {

void value_bounds(const Series& s, double& lo, double& hi) {
    lo = s.front().value;
    hi = s.front().value;
    for (const auto& p : s) {
        lo = std::min(lo, p.value);
        hi = std::max(hi, p.value);
    }
}

}  // namespace

std::string line_chart_svg(const std::string& title, const std::vector<ChartLine>& lines,
                           const std::vector<Region>& bands,
                           std::optional<double> baseline_value, const ChartLayout& layout) {
    if (lines.empty() || lines.front().data.empty()) {
        throw std::invalid_argument("line_chart_svg: nothing to draw");
    }
    double t_min = double(lines.front().data.front().sample_index);
    double t_max = t_min;
    for (const auto& line : lines) {
        if (line.data.empty()) throw std::invalid_argument("line_chart_svg: empty line");
        t_min = std::min(t_min, double(line.data.front().sample_index));
        t_max = std::max(t_max, double(line.data.back().sample_index));
    }

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_double(layout.width) +
           "\" height=\"" + format_double(layout.height) + "\" viewBox=\"0 0 " +
           format_double(layout.width) + " " + format_double(layout.height) + "\">\n";
    svg += "  <title>" + xml_escape(title) + "</title>\n";
    svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const double top = layout.margin;
    const double bottom = layout.height - layout.margin;
    for (const auto& band : bands) {
        const double x0 = chart_map_x(double(band.start_t), t_min, t_max, layout);
        const double x1 = chart_map_x(double(band.end_t), t_min, t_max, layout);
        svg += "  <rect class=\"" + std::string(band.capable ? "capable" : "incapable") +
               "\" x=\"" + format_double(x0) + "\" y=\"" + format_double(top) + "\" width=\"" +
               format_double(x1 - x0) + "\" height=\"" + format_double(bottom - top) +
               "\" fill=\"" + (band.capable ? "#cfe8ff" : "#fdf3c0") + "\" opacity=\"0.8\"/>\n";
    }

    if (baseline_value) {
        double lo, hi;
        value_bounds(lines.front().data, lo, hi);
        const double y = chart_map_y(*baseline_value, lo, hi, layout);
        svg += "  <line class=\"baseline\" x1=\"" + format_double(layout.margin) + "\" y1=\"" +
               format_double(y) + "\" x2=\"" + format_double(layout.width - layout.margin) +
               "\" y2=\"" + format_double(y) +
               "\" stroke=\"#444\" stroke-dasharray=\"5 4\"/>\n";
    }

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& line = lines[i];
        double lo, hi;
        value_bounds(line.data, lo, hi);
        std::string points;
        for (const auto& p : line.data) {
            if (!points.empty()) points += ' ';
            points += format_double(chart_map_x(double(p.sample_index), t_min, t_max, layout));
            points += ',';
            points += format_double(chart_map_y(p.value, lo, hi, layout));
        }
        svg += "  <polyline id=\"" + xml_escape(line.label) + "\" fill=\"none\" stroke=\"" +
               line.color + "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
        svg += "  <text x=\"" + format_double(layout.margin + 4.0) + "\" y=\"" +
               format_double(16.0 + 14.0 * double(i)) + "\" fill=\"" + line.color +
               "\" font-size=\"12\">" + xml_escape(line.label) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace tss
