#include "pmelab/rate_fit.hpp"

#include <cmath>
#include <cstdio>

namespace pmelab {

LineFit least_squares_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw ConfigError("least_squares_line: need >= 2 matched points");
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) throw ConfigError("least_squares_line: abscissae are all equal");
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = y[i] - (f.intercept + f.slope * x[i]);
        ss_res += e * e;
    }
    // A flat series fitted exactly is a perfect fit, not an undefined one.
    f.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : (ss_res == 0.0 ? 1.0 : 0.0);
    return f;
}

ExpFit fit_exponential(const std::vector<double>& times, const std::vector<double>& values,
                       double resolution_floor) {
    if (times.size() != values.size())
        throw ConfigError("fit_exponential: series lengths differ");
    std::vector<double> t, logv;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (values[i] > resolution_floor && values[i] > 0.0) {
            t.push_back(times[i]);
            logv.push_back(std::log(values[i]));
        }
    }
    if (t.size() < 4) {
        char buf[96];
        std::snprintf(buf, sizeof(buf),
                      "fit_exponential: only %zu usable points (need >= 4)", t.size());
        throw ConfigError(buf);
    }
    const LineFit lf = least_squares_line(t, logv);
    ExpFit f;
    f.K = std::exp(lf.intercept);
    f.alpha = -lf.slope;
    f.r_squared = lf.r_squared;
    f.points_used = static_cast<int>(t.size());
    return f;
}

} // namespace pmelab
