#include "densitycut/mollify.hpp"

#include <cmath>
#include <vector>

#include "densitycut/errors.hpp"
#include "densitycut/quadrature.hpp"

namespace densitycut {

namespace {

double unit_sphere_area(int d) {
    // |S^{d-1}| = 2 pi^{d/2} / Gamma(d/2)
    return 2.0 * std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0);
}

double radial_moment(int k, double rtol) {
    QuadratureOptions opt;
    opt.rtol = rtol;
    return integrate([k](double r) { return Mollifier::profile(r) * std::pow(r, k); },
                     0.0, 1.0, opt);
}

// Precomputed kernel nodes y_i with weights phi(y_i) * panel volume, so a
// mollified value is a single weighted sum of u samples.
struct KernelQuad {
    std::vector<Point> nodes;
    std::vector<double> weights;

    KernelQuad(const Mollifier& m, int quad_n) {
        const double h = 2.0 / quad_n;
        if (m.d == 1) {
            for (int i = 0; i < quad_n; ++i) {
                const double y = -1.0 + (i + 0.5) * h;
                const double w = m({y, 0.0}) * h;
                if (w > 0.0) {
                    nodes.push_back({y, 0.0});
                    weights.push_back(w);
                }
            }
        } else {
            for (int j = 0; j < quad_n; ++j) {
                const double yy = -1.0 + (j + 0.5) * h;
                for (int i = 0; i < quad_n; ++i) {
                    const double yx = -1.0 + (i + 0.5) * h;
                    const double w = m({yx, yy}) * h * h;
                    if (w > 0.0) {
                        nodes.push_back({yx, yy});
                        weights.push_back(w);
                    }
                }
            }
        }
        // Rescale so the discrete kernel has exactly unit mass; this keeps
        // constants reproduced exactly regardless of quad_n.
        double total = 0.0;
        for (double w : weights) total += w;
        for (double& w : weights) w /= total;
    }

    double apply(const std::function<double(const Point&)>& u, const Point& x,
                 double radius) const {
        double s = 0.0;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            s += weights[k] * u({x[0] - radius * nodes[k][0], x[1] - radius * nodes[k][1]});
        }
        return s;
    }
};

}  // namespace

Mollifier::Mollifier(int dim) : d(dim) {
    if (dim < 1 || dim > 6) throw BadParams("Mollifier: dim must be in 1..6");
    c = 1.0 / (unit_sphere_area(dim) * radial_moment(dim - 1, 1e-10));
}

double grad_l1_norm(const Mollifier& m, double rtol) {
    if (m.d == 1) return 2.0 * m.radial(0.0);
    return (m.d - 1) * radial_moment(m.d - 2, rtol) / radial_moment(m.d - 1, rtol);
}

double mollify(const std::function<double(const Point&)>& u, const Density& rho,
               double theta, const Point& x, int quad_n,
               const std::optional<Domain>& validity) {
    if (theta <= 0.0) throw BadParams("mollify: theta must be > 0");
    if (quad_n < 16) throw BadParams("mollify: quad_n must be >= 16");
    if (theta * rho.lipschitz() >= 1.0)
        throw BadParams("mollify: theta * L must be < 1");
    const double radius = theta * rho(x);
    if (validity) {
        for (int a = 0; a < validity->dim; ++a) {
            if (x[a] - radius < validity->lo(a) || x[a] + radius > validity->hi(a))
                throw RadiusExceedsDomain("mollification ball leaves the validity box");
        }
    }
    Mollifier m(rho.dim());
    KernelQuad kq(m, quad_n);
    return kq.apply(u, x, radius);
}

SandwichResult l1_sandwich_check(const std::function<double(const Point&)>& f,
                                 const std::function<double(const Point&)>& delta,
                                 double c, int dim, const Domain& support,
                                 double delta_sup, int outer_n, int inner_n,
                                 double qtol) {
    if (!(c >= 0.0 && c < 1.0)) throw BadParams("l1_sandwich_check: need 0 <= c < 1");
    Mollifier m(dim);
    KernelQuad kq(m, inner_n);
    auto absf = [&](const Point& p) { return std::fabs(f(p)); };

    SandwichResult out;
    if (dim == 1) {
        const double a = support.lo(0) - delta_sup, b = support.hi(0) + delta_sup;
        const double h = (b - a) / outer_n;
        double norm1 = 0.0, mid = 0.0;
        for (int i = 0; i < outer_n; ++i) {
            const double x = a + (i + 0.5) * h;
            norm1 += std::fabs(f({x, 0.0}));
            mid += kq.apply(absf, {x, 0.0}, delta({x, 0.0}));
        }
        norm1 *= h;
        mid *= h;
        out.lhs = norm1 / (1.0 + c);
        out.mid = mid;
        out.rhs = norm1 / (1.0 - c);
    } else {
        const double ax = support.lo(0) - delta_sup, bx = support.hi(0) + delta_sup;
        const double ay = support.lo(1) - delta_sup, by = support.hi(1) + delta_sup;
        const double hx = (bx - ax) / outer_n, hy = (by - ay) / outer_n;
        double norm1 = 0.0, mid = 0.0;
        for (int j = 0; j < outer_n; ++j) {
            const double y = ay + (j + 0.5) * hy;
            for (int i = 0; i < outer_n; ++i) {
                const Point p{ax + (i + 0.5) * hx, y};
                norm1 += std::fabs(f(p));
                mid += kq.apply(absf, p, delta(p));
            }
        }
        norm1 *= hx * hy;
        mid *= hx * hy;
        out.lhs = norm1 / (1.0 + c);
        out.mid = mid;
        out.rhs = norm1 / (1.0 - c);
    }
    out.pass = out.lhs <= out.mid * (1.0 + qtol) && out.mid <= out.rhs * (1.0 + qtol);
    return out;
}

double buser_witness_nd(const Density& rho,
                        const std::function<double(const Point&)>& indicator,
                        const ExponentTriple& exps, double theta, int domain_n,
                        int quad_n) {
    if (rho.dim() != 2) throw BadParams("buser_witness_nd: density must be 2D");
    if (theta * rho.lipschitz() > 0.5)
        throw BadParams("buser_witness_nd: need theta * L <= 1/2");
    const Domain& dom = rho.domain();
    Mollifier m(2);
    KernelQuad kq(m, quad_n);

    auto u_theta = [&](const Point& p) {
        const double radius = theta * rho(p);
        if (radius <= 0.0) return indicator(p);
        return kq.apply(indicator, p, radius);
    };

    const double hx = dom.width(0) / domain_n, hy = dom.width(1) / domain_n;
    const double cell = hx * hy;

    double num = 0.0, mass_a = 0.0, sum_u = 0.0, sum_u2_terms = 0.0;
    std::vector<double> uvals(static_cast<std::size_t>(domain_n) * domain_n);
    std::vector<double> wa(uvals.size());
    for (int j = 0; j < domain_n; ++j) {
        const double y = dom.lo(1) + (j + 0.5) * hy;
        for (int i = 0; i < domain_n; ++i) {
            const Point p{dom.lo(0) + (i + 0.5) * hx, y};
            const double r = rho(p);
            const double u = u_theta(p);
            const std::size_t idx = static_cast<std::size_t>(j) * domain_n + i;
            uvals[idx] = u;
            wa[idx] = std::pow(r, exps.alpha);
            mass_a += wa[idx];
            sum_u += wa[idx] * u;

            if (r > 0.0) {
                const double fd = 1e-4 * theta * r;
                const double dudx =
                    (u_theta({p[0] + fd, p[1]}) - u_theta({p[0] - fd, p[1]})) / (2 * fd);
                const double dudy =
                    (u_theta({p[0], p[1] + fd}) - u_theta({p[0], p[1] - fd})) / (2 * fd);
                num += std::pow(r, exps.gamma) * (dudx * dudx + dudy * dudy);
            }
        }
    }
    const double ubar = sum_u / mass_a;
    for (std::size_t k = 0; k < uvals.size(); ++k) {
        const double dev = uvals[k] - ubar;
        sum_u2_terms += wa[k] * dev * dev;
    }
    num *= cell;
    const double den = sum_u2_terms * cell;
    if (den <= 0.0) throw WitnessDegenerate("mollified indicator has zero variance");
    return num / den;
}

}  // namespace densitycut
