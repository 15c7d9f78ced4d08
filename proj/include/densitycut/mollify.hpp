#pragma once

#include <functional>
#include <optional>

#include "densitycut/density.hpp"
#include "densitycut/domain.hpp"

namespace densitycut {

// Standard compactly supported mollifier in d dimensions: profile
// exp(-1/(1-r^2)) inside the unit ball, scaled so the total mass is one.
struct Mollifier {
    int d = 1;
    double c = 0.0;  // normalization constant

    explicit Mollifier(int dim);

    static double profile(double r) {
        if (r >= 1.0) return 0.0;
        return std::exp(-1.0 / (1.0 - r * r));
    }
    double radial(double r) const { return c * profile(r); }
    double operator()(const Point& x) const {
        const double r = d == 1 ? std::fabs(x[0]) : std::hypot(x[0], x[1]);
        return radial(r);
    }
};

// integral over R^d of |grad phi|, computed through the radial identity
//   (d-1) * int phî r^{d-2} / int phî r^{d-1}      (d >= 2)
//   2 phi(0)                                       (d = 1).
// The value is at most 2d for this profile.
double grad_l1_norm(const Mollifier& m, double rtol = 1e-6);

// Variable-radius mollification u_theta(x) = int_B u(x - theta rho(x) y) phi(y) dy
// by tensor midpoint quadrature with quad_n panels per axis. Requires
// theta * L < 1. When `validity` is given and the sample ball leaves it,
// RadiusExceedsDomain is thrown.
double mollify(const std::function<double(const Point&)>& u, const Density& rho,
               double theta, const Point& x, int quad_n = 64,
               const std::optional<Domain>& validity = std::nullopt);

struct SandwichResult {
    double lhs = 0.0;  // ||f||_1 / (1+c)
    double mid = 0.0;  // double integral of |f(x - delta(x) y)| phi(y)
    double rhs = 0.0;  // ||f||_1 / (1-c)
    bool pass = false;
};

// Checks lhs <= mid <= rhs (with quadrature slack qtol) for a Lipschitz
// radius field |grad delta| <= c < 1 and an integrable f supported in
// `support`. The outer integral runs over `support` enlarged by delta_sup.
SandwichResult l1_sandwich_check(const std::function<double(const Point&)>& f,
                                 const std::function<double(const Point&)>& delta,
                                 double c, int dim, const Domain& support,
                                 double delta_sup, int outer_n = 2048,
                                 int inner_n = 192, double qtol = 0.01);

// Rayleigh quotient of the centered mollification of a cut indicator:
// mollify with radius theta*rho, subtract the rho^alpha-weighted average,
// and evaluate int rho^gamma |grad u_theta|^2 / int rho^alpha (u_theta-avg)^2
// on the density's box. Gradients use central differences with step
// 1e-4 * theta * rho(x). Requires theta * L <= 1/2.
double buser_witness_nd(const Density& rho,
                        const std::function<double(const Point&)>& indicator,
                        const ExponentTriple& exps, double theta, int domain_n = 96,
                        int quad_n = 48);

}  // namespace densitycut
