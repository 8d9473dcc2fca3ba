#pragma once

#include <string>
#include <vector>

namespace pagamma::plot {

enum class Marker { None, Circle, Star };

struct Series {
    std::string label;
    std::string color = "black";
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> yerr;  ///< empty or same length as y
    bool line = false;
    double line_width = 1.5;
    Marker marker = Marker::Circle;
};

struct Chart {
    std::string title;
    std::string xlabel;
    std::string ylabel;
    bool log_x = false;
    std::vector<Series> series;
};

/// Self-contained SVG rendering of a chart with linear y and linear or
/// log10 x axis.
std::string render_svg(const Chart& chart, int width = 640, int height = 480);

} // namespace pagamma::plot
