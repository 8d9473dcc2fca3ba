#include "plot.hpp"

#include "pagamma/format.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace pagamma::plot {
namespace {

constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 55;

std::string xml_escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Roughly five round tick values covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi) {
    const double span = hi - lo;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (const double f : {1.0, 2.0, 5.0, 10.0}) {
        if (f * mag >= raw) {
            step = f * mag;
            break;
        }
    }
    std::vector<double> ticks;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * span; t += step) {
        ticks.push_back(std::fabs(t) < 1e-12 * step ? 0.0 : t);
    }
    return ticks;
}

std::string star_path(double cx, double cy, double r) {
    std::ostringstream os;
    for (int i = 0; i < 10; ++i) {
        const double rad = (i % 2 == 0) ? r : 0.45 * r;
        const double a = -M_PI / 2 + i * M_PI / 5;
        os << (i == 0 ? "M" : "L") << coord(cx + rad * std::cos(a)) << ","
           << coord(cy + rad * std::sin(a));
    }
    os << "Z";
    return os.str();
}

} // namespace

std::string render_svg(const Chart& chart, int width, int height) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : chart.series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            const double x = chart.log_x ? std::log10(s.x[i]) : s.x[i];
            const double e = s.yerr.empty() ? 0.0 : s.yerr[i];
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, s.y[i] - e);
            ymax = std::max(ymax, s.y[i] + e);
        }
    }
    if (!std::isfinite(xmin)) {
        xmin = 0;
        xmax = 1;
        ymin = 0;
        ymax = 1;
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const double pw = width - kLeft - kRight;
    const double ph = height - kTop - kBottom;
    const auto px = [&](double x) {
        const double v = chart.log_x ? std::log10(x) : x;
        return kLeft + (v - xmin) / (xmax - xmin) * pw;
    };
    const auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * ph; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
       << xml_escape(chart.title) << "</text>\n";
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"black\"/>\n";

    for (const double t : nice_ticks(ymin, ymax)) {
        os << "<line x1=\"" << kLeft - 4 << "\" x2=\"" << kLeft << "\" y1=\"" << coord(py(t))
           << "\" y2=\"" << coord(py(t)) << "\" stroke=\"black\"/>";
        os << "<text x=\"" << kLeft - 6 << "\" y=\"" << coord(py(t) + 4)
           << "\" text-anchor=\"end\">" << fmt_num(t) << "</text>\n";
    }
    if (chart.log_x) {
        for (double d = std::ceil(xmin); d <= xmax + 1e-9; d += 1.0) {
            const double x = kLeft + (d - xmin) / (xmax - xmin) * pw;
            os << "<line x1=\"" << coord(x) << "\" x2=\"" << coord(x) << "\" y1=\"" << kTop + ph
               << "\" y2=\"" << kTop + ph + 4 << "\" stroke=\"black\"/>";
            os << "<text x=\"" << coord(x) << "\" y=\"" << kTop + ph + 18
               << "\" text-anchor=\"middle\">" << fmt_num(std::pow(10.0, d)) << "</text>\n";
        }
    } else {
        for (const double t : nice_ticks(xmin, xmax)) {
            os << "<line x1=\"" << coord(px(t)) << "\" x2=\"" << coord(px(t)) << "\" y1=\""
               << kTop + ph << "\" y2=\"" << kTop + ph + 4 << "\" stroke=\"black\"/>";
            os << "<text x=\"" << coord(px(t)) << "\" y=\"" << kTop + ph + 18
               << "\" text-anchor=\"middle\">" << fmt_num(t) << "</text>\n";
        }
    }
    os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << height - 12
       << "\" text-anchor=\"middle\">" << xml_escape(chart.xlabel) << "</text>\n";
    os << "<text transform=\"translate(18," << kTop + ph / 2
       << ") rotate(-90)\" text-anchor=\"middle\">" << xml_escape(chart.ylabel) << "</text>\n";

    for (const auto& s : chart.series) {
        if (s.line && s.x.size() > 1) {
            os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\""
               << s.line_width << "\" points=\"";
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                os << (i ? " " : "") << coord(px(s.x[i])) << "," << coord(py(s.y[i]));
            }
            os << "\"/>\n";
        }
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            const double cx = px(s.x[i]);
            const double cy = py(s.y[i]);
            if (!s.yerr.empty() && s.yerr[i] > 0) {
                os << "<line x1=\"" << coord(cx) << "\" x2=\"" << coord(cx) << "\" y1=\""
                   << coord(py(s.y[i] - s.yerr[i])) << "\" y2=\"" << coord(py(s.y[i] + s.yerr[i]))
                   << "\" stroke=\"" << s.color << "\"/>\n";
            }
            if (s.marker == Marker::Circle) {
                os << "<circle cx=\"" << coord(cx) << "\" cy=\"" << coord(cy)
                   << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
            } else if (s.marker == Marker::Star) {
                os << "<path d=\"" << star_path(cx, cy, 6) << "\" fill=\"" << s.color << "\"/>\n";
            }
        }
    }

    double ly = kTop + 16;
    for (const auto& s : chart.series) {
        if (s.label.empty()) continue;
        const double lx = kLeft + pw - 150;
        os << "<line x1=\"" << coord(lx) << "\" x2=\"" << coord(lx + 20) << "\" y1=\""
           << coord(ly - 4) << "\" y2=\"" << coord(ly - 4) << "\" stroke=\"" << s.color
           << "\" stroke-width=\"2\"/>";
        os << "<text x=\"" << coord(lx + 26) << "\" y=\"" << coord(ly) << "\">"
           << xml_escape(s.label) << "</text>\n";
        ly += 16;
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace pagamma::plot
