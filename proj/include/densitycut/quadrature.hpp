#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "densitycut/domain.hpp"

namespace densitycut {

struct QuadratureOptions {
    double rtol = 1e-8;
    // Total panel cap across refinement levels; midpoint doubles per level.
    std::int64_t max_panels = 1 << 24;
    std::int64_t min_panels = 16;
};

// Composite midpoint rule on [a,b], doubling the panel count until two
// successive estimates agree to rtol. Throws NonIntegrable when estimates
// keep growing across refinement levels instead of settling.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt = {});

// Same, but splits [a,b] at the given breakpoints first so each piece is
// smooth. Breakpoints outside (a,b) are ignored.
double integrate_split(const std::function<double(double)>& f, double a, double b,
                       const std::vector<double>& breakpoints,
                       const QuadratureOptions& opt = {});

// Tensor midpoint rule with a fixed number of panels per axis.
double integrate2d_fixed(const std::function<double(double, double)>& f, double x0,
                         double x1, double y0, double y1, int nx, int ny);

// Adaptive tensor midpoint rule (doubling per axis) for 2D mass integrals.
double integrate2d(const std::function<double(double, double)>& f, double x0, double x1,
                   double y0, double y1, const QuadratureOptions& opt = {});

}  // namespace densitycut
