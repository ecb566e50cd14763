#include "pmelab/geometry.hpp"

#include <algorithm>
#include <vector>

namespace pmelab {

double interval_overlap(double a, double b, double c, double d) {
    const double lo = std::max(a, c);
    const double hi = std::min(b, d);
    return hi > lo ? hi - lo : 0.0;
}

namespace {

// Antiderivative of sqrt(r^2 - x^2).
double circle_segment_primitive(double x, double r) {
    const double c = std::clamp(x / r, -1.0, 1.0);
    const double s2 = std::max(r * r - x * x, 0.0);
    return 0.5 * (x * std::sqrt(s2) + r * r * std::asin(c));
}

} // namespace

double disk_rect_overlap(const Pt& center, double r, double x0, double x1, double y0,
                         double y1) {
    // Shift to disk-centered coordinates.
    const double ax = x0 - center[0], bx = x1 - center[0];
    const double ay = y0 - center[1], by = y1 - center[1];

    const double lo = std::max(ax, -r);
    const double hi = std::min(bx, r);
    if (lo >= hi) return 0.0;

    // The chord height s(x) = sqrt(r^2 - x^2) crosses the rectangle's y-bounds
    // at these abscissae; between consecutive breakpoints the integrand is a
    // fixed combination of constants and ±s(x), so each piece integrates exactly.
    std::vector<double> bp{lo, hi};
    for (double yb : {ay, by}) {
        if (std::abs(yb) < r) {
            const double xc = std::sqrt(r * r - yb * yb);
            if (xc > lo && xc < hi) bp.push_back(xc);
            if (-xc > lo && -xc < hi) bp.push_back(-xc);
        }
    }
    std::sort(bp.begin(), bp.end());

    double area = 0.0;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        const double xa = bp[i], xb = bp[i + 1];
        if (xb - xa <= 0.0) continue;
        const double xm = 0.5 * (xa + xb);
        const double sm = std::sqrt(std::max(r * r - xm * xm, 0.0));
        const double top_m = std::min(by, sm);
        const double bot_m = std::max(ay, -sm);
        if (top_m <= bot_m) continue; // empty strip, sign is constant on the piece

        // Integrate (top - bottom) with the branch choice fixed by the midpoint.
        double piece = 0.0;
        if (by < sm)
            piece += by * (xb - xa);
        else
            piece += circle_segment_primitive(xb, r) - circle_segment_primitive(xa, r);
        if (ay > -sm)
            piece -= ay * (xb - xa);
        else
            piece += circle_segment_primitive(xb, r) - circle_segment_primitive(xa, r);
        area += piece;
    }
    return area;
}

double ball_cell_overlap(const RegionBall& ball, int dim, const Pt& cell_center, double h) {
    if (dim == 1) {
        return interval_overlap(cell_center[0] - 0.5 * h, cell_center[0] + 0.5 * h,
                                ball.center[0] - ball.radius, ball.center[0] + ball.radius);
    }
    return disk_rect_overlap(ball.center, ball.radius, cell_center[0] - 0.5 * h,
                             cell_center[0] + 0.5 * h, cell_center[1] - 0.5 * h,
                             cell_center[1] + 0.5 * h);
}

} // namespace pmelab
