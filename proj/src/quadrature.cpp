#include "densitycut/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "densitycut/errors.hpp"

namespace densitycut {

namespace {

double midpoint_sum(const std::function<double(double)>& f, double a, double b,
                    std::int64_t n) {
    const double h = (b - a) / static_cast<double>(n);
    double s = 0.0;
    for (std::int64_t k = 0; k < n; ++k) {
        s += f(a + (static_cast<double>(k) + 0.5) * h);
    }
    return s * h;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt) {
    if (a == b) return 0.0;
    std::int64_t n = opt.min_panels;
    double prev = midpoint_sum(f, a, b, n);
    int growing = 0;
    for (;;) {
        n *= 2;
        const double cur = midpoint_sum(f, a, b, n);
        const double scale = std::max({std::fabs(cur), std::fabs(prev), 1e-300});
        if (std::fabs(cur - prev) <= opt.rtol * scale) return cur;
        if (std::fabs(cur) > 2.0 * std::fabs(prev) && std::fabs(prev) > 1e-12) {
            if (++growing >= 3) throw NonIntegrable("integrand diverges under refinement");
        } else {
            growing = 0;
        }
        if (n >= opt.max_panels) return cur;
        prev = cur;
    }
}

double integrate_split(const std::function<double(double)>& f, double a, double b,
                       const std::vector<double>& breakpoints,
                       const QuadratureOptions& opt) {
    if (a == b) return 0.0;
    const double sign = a < b ? 1.0 : -1.0;
    const double lo = std::min(a, b), hi = std::max(a, b);
    std::vector<double> pts{lo, hi};
    for (double x : breakpoints)
        if (x > lo && x < hi) pts.push_back(x);
    std::sort(pts.begin(), pts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        total += integrate(f, pts[i], pts[i + 1], opt);
    return sign * total;
}

double integrate2d_fixed(const std::function<double(double, double)>& f, double x0,
                         double x1, double y0, double y1, int nx, int ny) {
    const double hx = (x1 - x0) / nx, hy = (y1 - y0) / ny;
    double s = 0.0;
    for (int j = 0; j < ny; ++j) {
        const double y = y0 + (j + 0.5) * hy;
        for (int i = 0; i < nx; ++i) {
            s += f(x0 + (i + 0.5) * hx, y);
        }
    }
    return s * hx * hy;
}

double integrate2d(const std::function<double(double, double)>& f, double x0, double x1,
                   double y0, double y1, const QuadratureOptions& opt) {
    int n = 16;
    double prev = integrate2d_fixed(f, x0, x1, y0, y1, n, n);
    int growing = 0;
    for (;;) {
        n *= 2;
        const double cur = integrate2d_fixed(f, x0, x1, y0, y1, n, n);
        const double scale = std::max({std::fabs(cur), std::fabs(prev), 1e-300});
        if (std::fabs(cur - prev) <= opt.rtol * scale) return cur;
        if (std::fabs(cur) > 2.0 * std::fabs(prev) && std::fabs(prev) > 1e-12) {
            if (++growing >= 3) throw NonIntegrable("2d integrand diverges under refinement");
        } else {
            growing = 0;
        }
        if (static_cast<std::int64_t>(n) * n >= opt.max_panels) return cur;
        prev = cur;
    }
}

}  // namespace densitycut
