#pragma once

#include <cmath>

namespace pmelab {

/// Point in 1 or 2 dimensions. The active dimension count is carried by the
/// grid or region using the point; unused components stay 0.
struct Pt {
    double v[2]{0.0, 0.0};

    Pt() = default;
    explicit Pt(double x) { v[0] = x; }
    Pt(double x, double y) {
        v[0] = x;
        v[1] = y;
    }

    double& operator[](int i) { return v[i]; }
    double operator[](int i) const { return v[i]; }
};

inline double distance(const Pt& a, const Pt& b, int dim) {
    double s = 0.0;
    for (int k = 0; k < dim; ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return std::sqrt(s);
}

/// Closed ball (interval in 1D, disk in 2D).
struct RegionBall {
    Pt center;
    double radius = 1.0;

    bool contains(const Pt& x, int dim) const { return distance(center, x, dim) <= radius; }
};

/// Length of [a,b] ∩ [c,d]; zero when disjoint.
double interval_overlap(double a, double b, double c, double d);

/// Exact area of the intersection of the disk |x - center| <= r with the
/// axis-aligned rectangle [x0,x1] x [y0,y1]. Piecewise closed-form integration
/// of the chord length; accurate to rounding error.
double disk_rect_overlap(const Pt& center, double r, double x0, double x1, double y0,
                         double y1);

/// Volume of ball ∩ cell for a cell of spacing h centered at cell_center.
double ball_cell_overlap(const RegionBall& ball, int dim, const Pt& cell_center, double h);

} // namespace pmelab
