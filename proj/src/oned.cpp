#include "densitycut/oned.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "densitycut/errors.hpp"

namespace densitycut {

Sparsity1DResult sweep_sparsity_1d(const Density& rho, const ExponentTriple& exps,
                                   int n_candidates, const QuadratureOptions& qopt) {
    if (rho.dim() != 1) throw BadParams("sweep_sparsity_1d: density must be 1D");
    if (n_candidates < 3) throw BadParams("sweep_sparsity_1d: need at least 3 candidates");
    const double a = rho.domain().lo(0), b = rho.domain().hi(0);

    std::vector<double> cands;
    cands.reserve(n_candidates + rho.kinks().size());
    for (int k = 1; k <= n_candidates; ++k)
        cands.push_back(a + (b - a) * k / (n_candidates + 1.0));
    for (double x : rho.kinks())
        if (x > a && x < b) cands.push_back(x);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    // One quadrature per gap; cumulative sums give every left mass.
    std::vector<double> left(cands.size());
    auto f = [&](double x) { return std::pow(rho(x), exps.alpha); };
    double acc = 0.0, prev = a;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        acc += integrate_split(f, prev, cands[i], rho.kinks(), qopt);
        left[i] = acc;
        prev = cands[i];
    }
    const double total = acc + integrate_split(f, prev, b, rho.kinks(), qopt);

    Sparsity1DResult best;
    best.phi = std::numeric_limits<double>::infinity();
    bool found = false;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        const double lm = left[i], rm = total - left[i];
        const double small = std::min(lm, rm);
        if (small <= 0.0) continue;
        const double phi = std::pow(rho(cands[i]), exps.beta) / small;
        if (phi < best.phi) {
            best = {cands[i], phi, lm, rm};
            found = true;
        }
    }
    if (!found) throw DegenerateMass("every candidate cut has a zero-mass side");
    return best;
}

Eig1DResult lambda2_1d_fem(const Density& rho, const ExponentTriple& exps, int mesh_n,
                           double tol, std::uint64_t seed) {
    if (rho.dim() != 1) throw BadParams("lambda2_1d_fem: density must be 1D");
    if (mesh_n < 8) throw BadParams("lambda2_1d_fem: mesh_n must be >= 8");
    const double a = rho.domain().lo(0), b = rho.domain().hi(0);
    const double h = (b - a) / mesh_n;
    const int nn = mesh_n + 1;

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(3 * nn);
    Eigen::VectorXd M = Eigen::VectorXd::Zero(nn);
    for (int e = 0; e < mesh_n; ++e) {
        const double mid = a + (e + 0.5) * h;
        const double kw = std::pow(rho(mid), exps.gamma) / h;
        trip.emplace_back(e, e, kw);
        trip.emplace_back(e + 1, e + 1, kw);
        trip.emplace_back(e, e + 1, -kw);
        trip.emplace_back(e + 1, e, -kw);
    }
    for (int i = 0; i < nn; ++i) {
        const double cell = (i == 0 || i == mesh_n) ? h / 2.0 : h;
        M[i] = std::pow(rho(a + i * h), exps.alpha) * cell;
    }
    SparseMat K(nn, nn);
    K.setFromTriplets(trip.begin(), trip.end());

    EigOptions eopt;
    eopt.tol = tol;
    eopt.seed = seed;
    EigenPair pair = second_eigenpair(K, M, eopt);
    return Eig1DResult{pair.lambda, pair.vector, mesh_n, pair.residual};
}

double buser_witness_1d(const Density& rho, const ExponentTriple& exps, double xhat,
                        double theta, const QuadratureOptions& qopt) {
    if (rho.dim() != 1) throw BadParams("buser_witness_1d: density must be 1D");
    const double a = rho.domain().lo(0), b = rho.domain().hi(0);
    if (xhat <= a || xhat >= b) throw BadParams("buser_witness_1d: xhat must be interior");
    if (theta <= 0.0) throw BadParams("buser_witness_1d: theta must be > 0");
    const double delta = theta * rho(xhat);
    if (delta >= b - a)
        throw WitnessDegenerate("transition width exceeds the domain");
    if (delta <= 0.0)
        throw WitnessDegenerate("rho vanishes at xhat; transition has zero width");

    auto fa = [&](double x) { return std::pow(rho(x), exps.alpha); };
    const double mass_left = integrate_split(fa, a, xhat, rho.kinks(), qopt);
    const double mass_right = integrate_split(fa, xhat, b, rho.kinks(), qopt);
    // Plateau at +|A|_alpha left of the transition, -|B|_alpha right of it.
    const double top = mass_left, bottom = -mass_right;
    const double span = top - bottom;  // |Omega|_alpha

    auto witness = [&](double s, double x) {
        if (x <= s) return top;
        if (x >= s + delta) return bottom;
        return top - span * (x - s) / delta;
    };
    auto weighted_mean = [&](double s) {
        auto f = [&](double x) { return fa(x) * witness(s, x); };
        std::vector<double> brk = rho.kinks();
        brk.push_back(s);
        brk.push_back(s + delta);
        return integrate_split(f, a, b, brk, qopt);
    };

    double lo = a, hi = b - delta;
    double glo = weighted_mean(lo), ghi = weighted_mean(hi);
    if (glo * ghi > 0.0)
        throw WitnessDegenerate("cannot center the witness inside the domain");
    for (int i = 0; i < 200 && hi - lo > 1e-12 * (b - a); ++i) {
        const double mid = 0.5 * (lo + hi);
        const double g = weighted_mean(mid);
        if (g == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((g > 0.0) == (glo > 0.0)) {
            lo = mid;
            glo = g;
        } else {
            hi = mid;
        }
    }
    const double s = 0.5 * (lo + hi);

    std::vector<double> brk = rho.kinks();
    brk.push_back(s);
    brk.push_back(s + delta);
    const double slope = span / delta;
    auto num_f = [&](double x) {
        if (x <= s || x >= s + delta) return 0.0;
        return std::pow(rho(x), exps.gamma) * slope * slope;
    };
    auto den_f = [&](double x) {
        const double u = witness(s, x);
        return fa(x) * u * u;
    };
    const double num = integrate_split(num_f, s, s + delta, rho.kinks(), qopt);
    const double den = integrate_split(den_f, a, b, brk, qopt);
    if (den <= 0.0) throw WitnessDegenerate("witness has zero weighted norm");
    return num / den;
}

double buser_theta_1d(const Density& rho, const ExponentTriple& exps, double phi) {
    const double sup1 = rho.sup_pow(exps.alpha + 1.0 - exps.beta);
    const double L = rho.lipschitz();
    const double t1 = 1.0 / (4.0 * phi * sup1);
    if (L <= 0.0 || exps.alpha <= 0.0) return t1;
    return std::min(t1, std::log(1.5) / (exps.alpha * L));
}

double buser_bound_1d(const Density& rho, const ExponentTriple& exps, double phi) {
    const double supg = rho.sup_pow(exps.gamma - 1.0 - exps.beta);
    const double supa = rho.sup_pow(exps.alpha + 1.0 - exps.beta);
    const double L = rho.lipschitz();
    const double lead = 8.0 * std::pow(1.5, exps.gamma / exps.alpha) * supg;
    return lead * std::max(4.0 * supa * phi * phi,
                           exps.alpha / std::log(1.5) * L * phi);
}

MuckenhouptBracket muckenhoupt_bound(const Density& rho, const ExponentTriple& exps,
                                     int scan_points) {
    if (rho.dim() != 1) throw BadParams("muckenhoupt_bound: density must be 1D");
    const double a = rho.domain().lo(0), b = rho.domain().hi(0);
    auto fa = [&](double x) { return std::pow(rho(x), exps.alpha); };
    const double total = integrate_split(fa, a, b, rho.kinks(), {});

    // alpha-median by bisection on the cumulative mass.
    double lo = a, hi = b;
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double m = integrate_split(fa, a, mid, rho.kinks(), {});
        (m < 0.5 * total ? lo : hi) = mid;
    }
    const double median = 0.5 * (lo + hi);

    auto fginv = [&](double x) { return std::pow(rho(x), -exps.gamma); };
    MuckenhouptBracket out;
    double B = 0.0;
    const double divergence_cap = 1e30;

    // Scan each side; the inner integrals accumulate panel by panel.
    for (int side = 0; side < 2; ++side) {
        const double bnd = side == 0 ? b : a;
        const double dir = side == 0 ? 1.0 : -1.0;
        const double len = std::fabs(bnd - median);
        double tail = dir * integrate_split(fa, median, bnd, rho.kinks(), {});
        double inner = 0.0;
        double prev = median;
        for (int k = 1; k <= scan_points; ++k) {
            const double r = median + dir * len * k / (scan_points + 1.0);
            double seg_inner, seg_tail;
            try {
                seg_inner = dir * integrate_split(fginv, prev, r, rho.kinks(), {});
                seg_tail = dir * integrate_split(fa, prev, r, rho.kinks(), {});
            } catch (const NonIntegrable&) {
                out.divergent = true;
                break;
            }
            inner += seg_inner;
            tail -= seg_tail;
            prev = r;
            if (!std::isfinite(inner) || inner > divergence_cap) {
                out.divergent = true;
                break;
            }
            B = std::max(B, tail * inner);
        }
        if (out.divergent) break;
    }

    out.constant = B;
    if (out.divergent || B <= 0.0) {
        out.lower = 0.0;
        out.upper = std::numeric_limits<double>::infinity();
        out.divergent = true;
        return out;
    }
    out.lower = 1.0 / (4.0 * B);
    out.upper = 4.0 / B;
    return out;
}

}  // namespace densitycut
