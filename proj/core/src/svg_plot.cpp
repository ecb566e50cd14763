#include "pmelab/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace pmelab {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

} // namespace

std::string log_linear_svg(const std::string& title, const std::vector<SvgSeries>& series,
                           double floor_line) {
    const int W = 640, H = 420, ML = 70, MR = 20, MT = 40, MB = 50;
    double tmin = std::numeric_limits<double>::infinity(), tmax = -tmin;
    double vmin = tmin, vmax = -tmin;
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.times.size(); ++i) {
            if (s.values[i] <= 0.0) continue;
            tmin = std::min(tmin, s.times[i]);
            tmax = std::max(tmax, s.times[i]);
            vmin = std::min(vmin, s.values[i]);
            vmax = std::max(vmax, s.values[i]);
        }
    }
    if (!(tmax > tmin)) {
        tmin = 0.0;
        tmax = 1.0;
    }
    if (!(vmax > 0.0)) {
        vmin = 1e-3;
        vmax = 1.0;
    }
    if (floor_line > 0.0) vmin = std::min(vmin, floor_line);
    const double lmin = std::log10(vmin) - 0.1, lmax = std::log10(vmax) + 0.1;

    auto px = [&](double t) { return ML + (t - tmin) / (tmax - tmin) * (W - ML - MR); };
    auto py = [&](double v) {
        return H - MB - (std::log10(v) - lmin) / (lmax - lmin) * (H - MT - MB);
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
       << title << "</text>\n";

    // Axes and ticks.
    os << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR << "\" y2=\""
       << H - MB << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML << "\" y2=\"" << H - MB
       << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double t = tmin + (tmax - tmin) * i / 5.0;
        os << "<line x1=\"" << num(px(t)) << "\" y1=\"" << H - MB << "\" x2=\"" << num(px(t))
           << "\" y2=\"" << H - MB + 5 << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << num(px(t)) << "\" y=\"" << H - MB + 20
           << "\" text-anchor=\"middle\" font-size=\"11\">" << num(t) << "</text>\n";
    }
    const int decades = std::max(1, static_cast<int>(std::ceil(lmax - lmin)));
    for (int i = 0; i <= decades; ++i) {
        const double lv = lmin + (lmax - lmin) * i / decades;
        const double v = std::pow(10.0, lv);
        os << "<line x1=\"" << ML - 5 << "\" y1=\"" << num(py(v)) << "\" x2=\"" << ML
           << "\" y2=\"" << num(py(v)) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << ML - 8 << "\" y=\"" << num(py(v) + 4)
           << "\" text-anchor=\"end\" font-size=\"11\">" << num(v) << "</text>\n";
    }
    os << "<text x=\"" << (ML + W - MR) / 2 << "\" y=\"" << H - 12
       << "\" text-anchor=\"middle\" font-size=\"12\">t</text>\n";
    os << "<text x=\"16\" y=\"" << (MT + H - MB) / 2
       << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 "
       << (MT + H - MB) / 2 << ")\">distance</text>\n";

    if (floor_line > 0.0) {
        os << "<line x1=\"" << ML << "\" y1=\"" << num(py(floor_line)) << "\" x2=\"" << W - MR
           << "\" y2=\"" << num(py(floor_line))
           << "\" stroke=\"#888888\" stroke-dasharray=\"4,3\"/>\n";
    }

    int ci = 0;
    for (const auto& s : series) {
        std::ostringstream pts;
        for (std::size_t i = 0; i < s.times.size(); ++i) {
            if (s.values[i] <= 0.0) continue;
            pts << num(px(s.times[i])) << "," << num(py(s.values[i])) << " ";
        }
        const char* color = kColors[ci % 5];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\""
           << pts.str() << "\"/>\n";
        os << "<text x=\"" << W - MR - 6 << "\" y=\"" << MT + 16 + 16 * ci
           << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << color << "\">" << s.name
           << "</text>\n";
        ++ci;
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace pmelab
