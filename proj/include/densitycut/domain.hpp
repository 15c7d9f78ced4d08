#pragma once

#include <array>
#include <cmath>

#include "densitycut/errors.hpp"

namespace densitycut {

using Point = std::array<double, 2>;

// Axis-aligned box in 1 or 2 dimensions. For dim == 1 the y axis is unused.
struct Domain {
    int dim = 1;
    std::array<std::array<double, 2>, 2> bounds{{{0.0, 1.0}, {0.0, 1.0}}};

    static Domain interval(double lo, double hi) {
        if (!(lo < hi)) throw BadParams("Domain: lower bound must be < upper bound");
        Domain d;
        d.dim = 1;
        d.bounds[0] = {lo, hi};
        d.bounds[1] = {0.0, 0.0};
        return d;
    }

    static Domain box(double x0, double x1, double y0, double y1) {
        if (!(x0 < x1) || !(y0 < y1))
            throw BadParams("Domain: lower bound must be < upper bound on every axis");
        Domain d;
        d.dim = 2;
        d.bounds[0] = {x0, x1};
        d.bounds[1] = {y0, y1};
        return d;
    }

    double lo(int axis) const { return bounds[axis][0]; }
    double hi(int axis) const { return bounds[axis][1]; }
    double width(int axis) const { return bounds[axis][1] - bounds[axis][0]; }

    bool contains(const Point& p) const {
        for (int a = 0; a < dim; ++a)
            if (p[a] < bounds[a][0] || p[a] > bounds[a][1]) return false;
        return true;
    }

    Point clamp(const Point& p) const {
        Point q = p;
        for (int a = 0; a < dim; ++a)
            q[a] = std::fmin(std::fmax(q[a], bounds[a][0]), bounds[a][1]);
        return q;
    }

    double area() const {
        double v = width(0);
        if (dim == 2) v *= width(1);
        return v;
    }
};

// The (alpha, beta, gamma) exponents weighting mass, cut cost and stiffness.
// The triple is admissible when beta = alpha+1 and gamma = alpha+2; that is
// the regime where the sweep-cut guarantee applies.
struct ExponentTriple {
    double alpha = 1.0;
    double beta = 2.0;
    double gamma = 3.0;

    ExponentTriple() = default;
    ExponentTriple(double a, double b, double g) : alpha(a), beta(b), gamma(g) {
        if (a < 0 || b < 0 || g < 0)
            throw BadParams("ExponentTriple: alpha, beta, gamma must be nonnegative");
    }

    bool admissible() const {
        const double tol = 1e-12;
        return std::fabs(beta - (alpha + 1.0)) <= tol && std::fabs(gamma - (alpha + 2.0)) <= tol;
    }
};

}  // namespace densitycut
