#include "densitycut/sweepcut.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "densitycut/errors.hpp"

namespace densitycut {

InequalityFlags verify_inequalities(double phi, double lambda2, double L, int d,
                                    const ExponentTriple& exps, const SupFactors& sups,
                                    double slack) {
    if (!(phi >= 0.0) || !(lambda2 >= 0.0) || !(L >= 0.0) || d < 1)
        throw BadParams("verify_inequalities: inputs must be finite and nonnegative");
    InequalityFlags f;
    f.slack = slack;
    f.cheeger_lhs = phi * phi / 4.0;
    f.cheeger_rhs = sups.cheeger * sups.cheeger * lambda2;
    f.cheeger_holds = f.cheeger_lhs <= f.cheeger_rhs * (1.0 + slack);
    f.buser_lhs = lambda2;
    if (sups.general) {
        const double lead = 3.0 * std::pow(2.0, exps.beta + 1.0) * d * sups.grad;
        f.buser_rhs = lead * std::max(L * phi, std::pow(2.0, exps.beta + 1.0) *
                                                   sups.mass * phi * phi);
        f.buser_rhs_variant8 = f.buser_rhs;
        f.constant_variant = "general";
    } else {
        f.buser_rhs = 24.0 * d * std::max(L * phi, 12.0 * phi * phi);
        f.buser_rhs_variant8 = 24.0 * d * std::max(L * phi, 8.0 * phi * phi);
        f.constant_variant = "strong12";
    }
    f.buser_holds = lambda2 <= f.buser_rhs * (1.0 + slack);
    f.buser_holds_variant8 = lambda2 <= f.buser_rhs_variant8 * (1.0 + slack);
    return f;
}

namespace {

struct LocalEdge {
    int u, v;
    double tau;
};

struct SweepResult {
    std::vector<int> members;  // local indices of the best A
    double phi = 0.0;
    double threshold = 0.0;
};

// Level-set sweep over an arbitrary weighted graph given by local indices.
// Values, masses and cut costs are the caller's; O((V+E) log V).
SweepResult sweep_over(const std::vector<double>& x, const std::vector<double>& mu,
                       const std::vector<LocalEdge>& edges) {
    const int n = static_cast<int>(x.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return x[a] > x[b]; });

    std::vector<std::vector<std::pair<int, double>>> adj(n);
    for (const LocalEdge& e : edges) {
        adj[e.u].push_back({e.v, e.tau});
        adj[e.v].push_back({e.u, e.tau});
    }
    const double total = std::accumulate(mu.begin(), mu.end(), 0.0);

    std::vector<char> in_a(n, 0);
    double cut_cost = 0.0, mass_a = 0.0;
    double best_phi = std::numeric_limits<double>::infinity();
    double best_balance = -1.0, best_threshold = 0.0;
    int best_count = -1;

    int distinct = 0;
    int pos = 0, count = 0;
    while (pos < n) {
        const double value = x[order[pos]];
        ++distinct;
        // Add the whole tie group at once; a level set cannot split it.
        while (pos < n && x[order[pos]] == value) {
            const int v = order[pos];
            in_a[v] = 1;
            mass_a += mu[v];
            for (auto [w, tau] : adj[v]) cut_cost += in_a[w] ? -tau : tau;
            ++pos;
            ++count;
        }
        if (pos >= n) break;  // A = everything is not a cut
        const double mass_ac = total - mass_a;
        const double small = std::min(mass_a, mass_ac);
        const double phi = small > 0.0 ? cut_cost / small
                                       : std::numeric_limits<double>::infinity();
        const double threshold = x[order[pos]];  // largest excluded value
        const bool better =
            phi < best_phi ||
            (phi == best_phi &&
             (small > best_balance || (small == best_balance && threshold < best_threshold)));
        if (better) {
            best_phi = phi;
            best_balance = small;
            best_threshold = threshold;
            best_count = count;
        }
    }
    if (distinct < 2) throw ConstantVector("sweep vector has fewer than two distinct values");

    SweepResult out;
    out.phi = best_phi;
    out.threshold = best_threshold;
    out.members.assign(order.begin(), order.begin() + best_count);
    std::sort(out.members.begin(), out.members.end());
    return out;
}

}  // namespace

GridCut sweep_cut(const Grid2D& grid, const Eigen::VectorXd& x) {
    if (x.size() != grid.nv()) throw BadParams("sweep_cut: vector length mismatch");
    std::vector<double> vals(x.data(), x.data() + x.size());
    std::vector<LocalEdge> edges;
    edges.reserve(grid.edges.size());
    for (const GridEdge& e : grid.edges) edges.push_back({e.u, e.v, e.tau});
    SweepResult sr = sweep_over(vals, grid.mu, edges);
    GridCut cut = cut_sparsity(grid, sr.members);
    cut.threshold = sr.threshold;
    return cut;
}

std::pair<GridCut, CutReport> algorithm1(const Density& rho, const ExponentTriple& exps,
                                         double h, double tol, std::uint64_t seed) {
    Grid2D grid = build_grid(rho, exps, h);
    auto [L, M] = laplacian_mass(grid);
    EigOptions eopt;
    eopt.tol = tol;
    eopt.seed = seed;
    EigenPair pair = second_eigenpair(L, M, eopt);
    GridCut cut = sweep_cut(grid, pair.vector);

    CutReport rep;
    rep.exps = exps;
    rep.h = h;
    rep.phi_sweep = cut.phi;
    rep.lambda2 = pair.lambda;
    rep.threshold = cut.threshold;
    rep.cut_cells = cut.members;
    rep.lipschitz_L = rho.lipschitz();
    rep.dim = 2;
    rep.flags = verify_inequalities(cut.phi, pair.lambda, rho.lipschitz(), 2, exps);
    rep.residual = pair.residual;
    rep.iterations = pair.iterations;
    return {std::move(cut), std::move(rep)};
}

IterateResult algorithm2(const Density& rho, const ExponentTriple& exps, double h,
                         double tol, int max_rounds, std::uint64_t seed) {
    if (max_rounds < 1) throw BadParams("algorithm2: max_rounds must be >= 1");
    Grid2D grid = build_grid(rho, exps, h);
    const double total = grid.mu_total();

    std::vector<int> active(grid.nv());
    std::iota(active.begin(), active.end(), 0);
    double active_mass = total;

    IterateResult out;
    out.mass_total = total;
    out.stop_reason = "max_rounds";

    std::vector<char> seen(grid.nv(), 0);
    std::vector<int> stack;
    // Components of a local vertex subset, via base-grid adjacency masked to
    // the active set.
    auto components_within = [&](const std::vector<int>& subset,
                                 const std::vector<char>& in_active) {
        std::vector<char> in_subset(grid.nv(), 0);
        for (int v : subset) in_subset[v] = 1;
        for (int v : subset) seen[v] = 0;
        std::vector<GridComponent> comps;
        for (int s : subset) {
            if (seen[s]) continue;
            GridComponent c;
            seen[s] = 1;
            stack.push_back(s);
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                c.members.push_back(u);
                c.weight += grid.mu[u];
                for (int k = grid.adj_offset[u]; k < grid.adj_offset[u + 1]; ++k) {
                    const GridEdge& e = grid.edges[grid.adj_edge[k]];
                    const int w = e.u == u ? e.v : e.u;
                    if (in_subset[w] && in_active[w] && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            comps.push_back(std::move(c));
        }
        return comps;
    };

    for (int round = 1; round <= max_rounds; ++round) {
        if (active_mass < 0.9 * total) {
            out.stop_reason = "mass_below_threshold";
            break;
        }
        if (active.size() < 4) {
            out.stop_reason = "region_exhausted";
            break;
        }
        auto [L, M] = laplacian_mass_subset(grid, active);
        EigOptions eopt;
        eopt.tol = tol;
        eopt.seed = seed + round;
        EigenPair pair = second_eigenpair(L, M, eopt);

        std::vector<double> vals(pair.vector.data(), pair.vector.data() + pair.vector.size());
        std::vector<int> local(grid.nv(), -1);
        for (std::size_t k = 0; k < active.size(); ++k) local[active[k]] = static_cast<int>(k);
        std::vector<LocalEdge> edges;
        for (const GridEdge& e : grid.edges) {
            if (local[e.u] >= 0 && local[e.v] >= 0)
                edges.push_back({local[e.u], local[e.v], e.tau});
        }
        std::vector<double> mu_local(active.size());
        for (std::size_t k = 0; k < active.size(); ++k) mu_local[k] = grid.mu[active[k]];
        SweepResult sr = sweep_over(vals, mu_local, edges);

        std::vector<char> in_side(active.size(), 0);
        for (int v : sr.members) in_side[v] = 1;
        std::vector<int> side_a, side_b;
        for (std::size_t k = 0; k < active.size(); ++k)
            (in_side[k] ? side_a : side_b).push_back(active[k]);

        std::vector<char> in_active(grid.nv(), 0);
        for (int v : active) in_active[v] = 1;
        auto comps_a = components_within(side_a, in_active);
        auto comps_b = components_within(side_b, in_active);

        const GridComponent* best = nullptr;
        char side = 'A';
        for (const auto& c : comps_a)
            if (!best || c.weight > best->weight) best = &c, side = 'A';
        for (const auto& c : comps_b)
            if (!best || c.weight > best->weight) best = &c, side = 'B';

        RoundInfo info;
        info.round = round;
        info.phi = sr.phi;
        info.lambda2 = pair.lambda;
        info.threshold = sr.threshold;
        info.mass_before = active_mass;
        info.mass_after = best->weight;
        info.component_weight = best->weight;
        info.side_kept = side;
        out.trail.push_back(info);

        if (best->weight >= active_mass) {
            out.stop_reason = "no_progress";
            break;
        }
        active = best->members;
        std::sort(active.begin(), active.end());
        active_mass = best->weight;
    }
    if (out.trail.empty())
        throw NoProgress("algorithm2 performed no rounds");
    if (out.stop_reason == "max_rounds" && active_mass < 0.9 * total)
        out.stop_reason = "mass_below_threshold";

    out.final_region = active;
    out.mass_final = active_mass;
    return out;
}

double rescore_cut(const Density& rho, const ExponentTriple& score_exps, double h,
                   const std::vector<int>& members) {
    Grid2D grid = build_grid(rho, score_exps, h);
    return cut_sparsity(grid, members).phi;
}

}  // namespace densitycut
