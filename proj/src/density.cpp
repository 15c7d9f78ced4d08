#include "densitycut/density.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "densitycut/errors.hpp"

namespace densitycut {

double Density::operator()(double x, double y) const {
    if (reject_outside_ && !dom_.contains({x, y}))
        throw OutsideDomain("tabulated density queried outside its sample box");
    const double v = f_(x, y);
    return v < 0.0 ? 0.0 : v;
}

double Density::sup_pow(double p, int samples_per_axis) const {
    double best = 0.0;
    auto consider = [&](double v) {
        const double w = std::pow(v, p);
        if (std::isnan(w)) return;
        best = std::max(best, w);
    };
    if (dom_.dim == 1) {
        const double a = dom_.lo(0), b = dom_.hi(0);
        const double h = (b - a) / samples_per_axis;
        for (int k = 0; k <= samples_per_axis; ++k) consider((*this)(a + k * h));
        for (double x : kinks_)
            if (x >= a && x <= b) consider((*this)(x));
    } else {
        const int n = std::min(samples_per_axis, 1024);
        const double hx = dom_.width(0) / n, hy = dom_.width(1) / n;
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n; ++i)
                consider((*this)(dom_.lo(0) + i * hx, dom_.lo(1) + j * hy));
        for (double x : kinks_)
            if (x >= dom_.lo(0) && x <= dom_.hi(0))
                for (int j = 0; j <= n; ++j) consider((*this)(x, dom_.lo(1) + j * hy));
    }
    return best;
}

namespace {

double get_param(const std::map<std::string, double>& params, const std::string& key,
                 double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

bool has_param(const std::map<std::string, double>& params, const std::string& key) {
    return params.count(key) > 0;
}

// Distance from p to the circular arc {c + r(cos t, sin t) : t in [t0,t1]}.
double arc_distance(double px, double py, double cx, double cy, double r, double t0,
                    double t1) {
    const double dx = px - cx, dy = py - cy;
    const double nrm = std::hypot(dx, dy);
    double ang = std::atan2(dy, dx);
    if (ang < t0) ang += 2.0 * M_PI;
    if (ang >= t0 && ang <= t1) return std::fabs(nrm - r);
    const double ax = cx + r * std::cos(t0), ay = cy + r * std::sin(t0);
    const double bx = cx + r * std::cos(t1), by = cy + r * std::sin(t1);
    return std::min(std::hypot(px - ax, py - ay), std::hypot(px - bx, py - by));
}

struct Arc {
    double cx, cy, r, t0, t1;
};

Density bump_mixture(Domain dom, std::vector<Arc> arcs, double sigma, double floor_val,
                     std::string family, std::map<std::string, double> params) {
    auto f = [arcs = std::move(arcs), sigma, floor_val](double x, double y) {
        double v = floor_val;
        for (const Arc& a : arcs) {
            const double d = arc_distance(x, y, a.cx, a.cy, a.r, a.t0, a.t1);
            v += std::exp(-0.5 * d * d / (sigma * sigma));
        }
        return v;
    };
    Density rho(dom, f, 0.0, std::move(family), std::move(params));
    const double lip = estimate_lipschitz(rho, 256);
    return Density(rho.domain(), f, lip, rho.family(), rho.params());
}

}  // namespace

Density builtin(const std::string& name, const std::map<std::string, double>& params) {
    if (name == "uniform") {
        const double value = get_param(params, "value", 1.0);
        if (value < 0.0) throw BadParams("uniform: value must be >= 0");
        const double x0 = get_param(params, "x0", 0.0);
        const double x1 = get_param(params, "x1", 1.0);
        const bool two_d = has_param(params, "y0") || has_param(params, "y1") ||
                           get_param(params, "dim", 1.0) == 2.0;
        auto f = [value](double, double) { return value; };
        if (two_d) {
            const double y0 = get_param(params, "y0", 0.0);
            const double y1 = get_param(params, "y1", 1.0);
            return Density(Domain::box(x0, x1, y0, y1), f, 0.0, "uniform", params);
        }
        return Density(Domain::interval(x0, x1), f, 0.0, "uniform", params);
    }

    if (name == "plateau") {
        const double n = get_param(params, "n", 0.0);
        if (n < 1.0) throw BadParams("plateau: n must be >= 1");
        const double half = n / 2.0, height = 1.0 / n;
        auto f = [half, height](double x, double) {
            return std::min(height, std::max(0.0, height - (std::fabs(x) - half)));
        };
        const double edge = half + height;
        return Density(Domain::interval(-edge, edge), f, 1.0, "plateau", params,
                       {-half, half});
    }

    if (name == "abs_eps") {
        const double eps = get_param(params, "eps", 0.0);
        if (eps <= 0.0) throw BadParams("abs_eps: eps must be > 0");
        if (eps >= 0.25)
            std::fprintf(stderr, "warning: abs_eps eps=%g is at/above the intended range (0,1/4)\n",
                         eps);
        auto f = [eps](double x, double) {
            const double ax = std::fabs(x);
            if (ax <= 1.0) return ax + eps;
            return std::max(0.0, 2.0 + eps - ax);
        };
        return Density(Domain::interval(-1.0, 1.0), f, 1.0, "abs_eps", params, {0.0});
    }

    if (name == "smooth_abs_eps") {
        const double eps = get_param(params, "eps", 0.0);
        if (eps <= 0.0) throw BadParams("smooth_abs_eps: eps must be > 0");
        auto f = [eps](double x, double) { return std::sqrt(x * x + eps * eps); };
        return Density(Domain::interval(-1.0, 1.0), f, 1.0, "smooth_abs_eps", params, {0.0});
    }

    if (name == "counterexample2d") {
        const double eps = get_param(params, "eps", 0.0);
        const double n = get_param(params, "n", 0.0);
        if (eps < 0.0) throw BadParams("counterexample2d: eps must be >= 0");
        if (n < 1.0) throw BadParams("counterexample2d: n must be >= 1");
        // Default box follows the construction; proof_scaling=1 selects the
        // shrunken variant. Explicit X/Y override either.
        double X, Y;
        if (get_param(params, "proof_scaling", 0.0) != 0.0) {
            X = 1.0 / (10.0 * std::sqrt(n));
            Y = 10.0 / std::sqrt(n);
        } else {
            X = std::sqrt(n) / 10.0;
            Y = 10.0 * std::sqrt(n);
        }
        X = get_param(params, "X", X);
        Y = get_param(params, "Y", Y);
        if (X <= 0.0 || Y <= 0.0) throw BadParams("counterexample2d: X and Y must be > 0");
        const double cap = 1.0 / n;
        auto f = [eps, cap](double x, double) { return std::min(eps + std::fabs(x), cap); };
        std::vector<double> kinks{0.0};
        const double knee = cap - eps;
        if (knee > 0.0 && knee < X) {
            kinks.push_back(knee);
            kinks.push_back(-knee);
        }
        std::map<std::string, double> full = params;
        full["X"] = X;
        full["Y"] = Y;
        return Density(Domain::box(-X, X, -Y, Y), f, 1.0, "counterexample2d", full, kinks);
    }

    if (name == "half_moons") {
        const double noise = get_param(params, "noise", 0.15);
        if (noise <= 0.0) throw BadParams("half_moons: noise must be > 0");
        std::vector<Arc> arcs{{0.0, 0.0, 1.0, 0.0, M_PI},
                              {1.0, 0.5, 1.0, M_PI, 2.0 * M_PI}};
        return bump_mixture(Domain::box(-1.5, 2.5, -1.75, 1.25), std::move(arcs), noise,
                            0.05, "half_moons", params);
    }

    if (name == "circles") {
        const double noise = get_param(params, "noise", 0.1);
        if (noise <= 0.0) throw BadParams("circles: noise must be > 0");
        std::vector<Arc> arcs{{0.0, 0.0, 0.5, 0.0, 2.0 * M_PI},
                              {0.0, 0.0, 1.0, 0.0, 2.0 * M_PI}};
        return bump_mixture(Domain::box(-1.4, 1.4, -1.4, 1.4), std::move(arcs), noise,
                            0.05, "circles", params);
    }

    if (name == "valley") {
        const double width = get_param(params, "width", 0.12);
        const double floor_val = get_param(params, "floor", 0.05);
        if (width <= 0.0) throw BadParams("valley: width must be > 0");
        // Two ridges running the length of the box with a low channel between.
        auto f = [width, floor_val](double, double y) {
            const double d1 = (y - 0.25) / width, d2 = (y - 0.75) / width;
            return floor_val + std::exp(-0.5 * d1 * d1) + std::exp(-0.5 * d2 * d2);
        };
        Density rho(Domain::box(0.0, 3.0, 0.0, 1.0), f, 0.0, "valley", params);
        const double lip = estimate_lipschitz(rho, 256);
        return Density(rho.domain(), f, lip, "valley", params);
    }

    throw UnknownFamily("unknown density family: " + name);
}

Density tabulated(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadParams("tabulated: cannot open " + path);
    int dim = 0;
    in >> dim;
    if (dim != 1 && dim != 2) throw BadParams("tabulated: dim must be 1 or 2");

    if (dim == 1) {
        long n = 0;
        double h = 0.0, x0 = 0.0;
        in >> n >> h >> x0;
        if (!in || n < 2 || h <= 0.0) throw BadParams("tabulated: bad 1D header");
        auto samples = std::make_shared<std::vector<double>>(n);
        for (long k = 0; k < n; ++k) {
            in >> (*samples)[k];
            if (!in) throw BadParams("tabulated: truncated sample table");
            if ((*samples)[k] < 0.0) throw BadParams("tabulated: negative sample");
        }
        const double x1 = x0 + (n - 1) * h;
        double lip = 0.0;
        for (long k = 0; k + 1 < n; ++k)
            lip = std::max(lip, std::fabs((*samples)[k + 1] - (*samples)[k]) / h);
        std::vector<double> kinks(n);
        for (long k = 0; k < n; ++k) kinks[k] = x0 + k * h;
        auto f = [samples, x0, h, n](double x, double) {
            const double t = (x - x0) / h;
            const long k = std::clamp(static_cast<long>(std::floor(t)), 0L, n - 2);
            const double w = t - k;
            return (1.0 - w) * (*samples)[k] + w * (*samples)[k + 1];
        };
        return Density(Domain::interval(x0, x1), f, lip, "tabulated", {}, kinks, true);
    }

    long n = 0, m = 0;
    double h = 0.0, x0 = 0.0, y0 = 0.0;
    in >> n >> m >> h >> x0 >> y0;
    if (!in || n < 2 || m < 2 || h <= 0.0) throw BadParams("tabulated: bad 2D header");
    auto samples = std::make_shared<std::vector<double>>(n * m);
    for (long k = 0; k < n * m; ++k) {
        in >> (*samples)[k];
        if (!in) throw BadParams("tabulated: truncated sample table");
        if ((*samples)[k] < 0.0) throw BadParams("tabulated: negative sample");
    }
    const double x1 = x0 + (n - 1) * h, y1 = y0 + (m - 1) * h;
    double lip = 0.0;
    for (long j = 0; j < m; ++j)
        for (long i = 0; i < n; ++i) {
            if (i + 1 < n)
                lip = std::max(lip, std::fabs((*samples)[j * n + i + 1] - (*samples)[j * n + i]) / h);
            if (j + 1 < m)
                lip = std::max(lip, std::fabs((*samples)[(j + 1) * n + i] - (*samples)[j * n + i]) / h);
        }
    auto f = [samples, x0, y0, h, n, m](double x, double y) {
        const double tx = (x - x0) / h, ty = (y - y0) / h;
        const long i = std::clamp(static_cast<long>(std::floor(tx)), 0L, n - 2);
        const long j = std::clamp(static_cast<long>(std::floor(ty)), 0L, m - 2);
        const double u = tx - i, v = ty - j;
        const double a = (*samples)[j * n + i], b = (*samples)[j * n + i + 1];
        const double c = (*samples)[(j + 1) * n + i], d = (*samples)[(j + 1) * n + i + 1];
        return (1 - u) * (1 - v) * a + u * (1 - v) * b + (1 - u) * v * c + u * v * d;
    };
    return Density(Domain::box(x0, x1, y0, y1), f, lip, "tabulated", {}, {}, true);
}

double mass(const Density& rho, double p, double lo0, double hi0,
            const QuadratureOptions& opt) {
    if (rho.dim() != 1) throw BadParams("mass(lo,hi): density is not 1D");
    if (p < 0.0) throw BadParams("mass: exponent must be >= 0");
    auto f = [&](double x) { return std::pow(rho(x), p); };
    return integrate_split(f, lo0, hi0, rho.kinks(), opt);
}

double mass(const Density& rho, double p, const Domain& region,
            const QuadratureOptions& opt) {
    if (p < 0.0) throw BadParams("mass: exponent must be >= 0");
    if (region.dim != rho.dim()) throw BadParams("mass: region dimension mismatch");
    for (int a = 0; a < region.dim; ++a)
        if (region.lo(a) < rho.domain().lo(a) - 1e-12 ||
            region.hi(a) > rho.domain().hi(a) + 1e-12)
            throw BadParams("mass: region not contained in the density domain");
    if (rho.dim() == 1) return mass(rho, p, region.lo(0), region.hi(0), opt);
    // Split the x-range at kinks so each strip is smooth.
    std::vector<double> xs{region.lo(0), region.hi(0)};
    for (double k : rho.kinks())
        if (k > region.lo(0) && k < region.hi(0)) xs.push_back(k);
    std::sort(xs.begin(), xs.end());
    double total = 0.0;
    auto f = [&](double x, double y) { return std::pow(rho(x, y), p); };
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        total += integrate2d(f, xs[i], xs[i + 1], region.lo(1), region.hi(1), opt);
    return total;
}

double mass(const Density& rho, double p, const QuadratureOptions& opt) {
    return mass(rho, p, rho.domain(), opt);
}

double estimate_lipschitz(const Density& rho, int resolution) {
    if (resolution == 0) resolution = rho.dim() == 1 ? 4096 : 512;
    if (resolution < 2) throw BadParams("estimate_lipschitz: resolution must be >= 2");
    const Domain& dom = rho.domain();
    double best = 0.0;
    if (rho.dim() == 1) {
        std::vector<double> xs(resolution + 1);
        for (int k = 0; k <= resolution; ++k)
            xs[k] = dom.lo(0) + dom.width(0) * k / resolution;
        for (double k : rho.kinks())
            if (k > dom.lo(0) && k < dom.hi(0)) xs.push_back(k);
        std::sort(xs.begin(), xs.end());
        for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
            const double dx = xs[k + 1] - xs[k];
            if (dx <= 0.0) continue;
            best = std::max(best, std::fabs(rho(xs[k + 1]) - rho(xs[k])) / dx);
        }
        return best;
    }
    const double hx = dom.width(0) / resolution, hy = dom.width(1) / resolution;
    std::vector<double> row(resolution + 1), prev(resolution + 1);
    for (int j = 0; j <= resolution; ++j) {
        const double y = dom.lo(1) + j * hy;
        for (int i = 0; i <= resolution; ++i) row[i] = rho(dom.lo(0) + i * hx, y);
        for (int i = 0; i + 1 <= resolution; ++i)
            best = std::max(best, std::fabs(row[i + 1] - row[i]) / hx);
        if (j > 0)
            for (int i = 0; i <= resolution; ++i)
                best = std::max(best, std::fabs(row[i] - prev[i]) / hy);
        std::swap(row, prev);
    }
    return best;
}

Density scale(const Density& rho, double ell, double a) {
    if (ell <= 0.0 || a <= 0.0) throw BadParams("scale: ell and a must be > 0");
    const Domain& dom = rho.domain();
    Domain scaled = dom;
    for (int ax = 0; ax < dom.dim; ++ax) {
        scaled.bounds[ax][0] = dom.bounds[ax][0] * ell;
        scaled.bounds[ax][1] = dom.bounds[ax][1] * ell;
    }
    auto base = rho;  // value copy keeps the original alive inside the closure
    auto f = [base, ell, a](double x, double y) { return (ell / a) * base(x / ell, y / ell); };
    std::vector<double> kinks;
    for (double k : rho.kinks()) kinks.push_back(k * ell);
    std::map<std::string, double> params = rho.params();
    params["scale_ell"] = ell;
    params["scale_a"] = a;
    return Density(scaled, f, rho.lipschitz() / a, rho.family() + "_scaled", params, kinks);
}

}  // namespace densitycut
