#include "densitycut/grid2d.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "densitycut/errors.hpp"

namespace densitycut {

double Grid2D::mu_total() const {
    return std::accumulate(mu.begin(), mu.end(), 0.0);
}

namespace {

// Length of the cell interval for lattice coordinate t (t = i*h relative to
// the axis origin), clipped to [0, width].
double cell_extent(double t, double h, double width) {
    const double lo = std::max(t - 0.5 * h, 0.0);
    const double hi = std::min(t + 0.5 * h, width);
    return std::max(hi - lo, 0.0);
}

}  // namespace

Grid2D build_grid(const Density& rho, const ExponentTriple& exps, double h,
                  std::int64_t max_vertices) {
    if (rho.dim() != 2) throw BadParams("build_grid: density must be 2D");
    if (h <= 0.0) throw BadParams("build_grid: h must be > 0");
    const Domain& dom = rho.domain();
    const double W = dom.width(0), H = dom.width(1);
    if (h > std::min(W, H) / 4.0)
        throw GridTooCoarse("h must be at most a quarter of the shorter side");

    Grid2D g;
    g.h = h;
    g.domain = dom;
    g.exps = exps;
    g.n = static_cast<int>(std::ceil(W / h - 1e-12));
    g.m = static_cast<int>(std::ceil(H / h - 1e-12));
    const std::int64_t nv = static_cast<std::int64_t>(g.n + 1) * (g.m + 1);
    if (nv > max_vertices)
        throw GridTooFine("grid would have " + std::to_string(nv) + " vertices");

    const double x0 = dom.lo(0), y0 = dom.lo(1);
    std::vector<double> wx(g.n + 1), wy(g.m + 1);
    for (int i = 0; i <= g.n; ++i) wx[i] = cell_extent(i * h, h, W);
    for (int j = 0; j <= g.m; ++j) wy[j] = cell_extent(j * h, h, H);

    g.mu.resize(nv);
    g.cell_area.resize(nv);
    for (int j = 0; j <= g.m; ++j) {
        for (int i = 0; i <= g.n; ++i) {
            const int v = g.index(i, j);
            g.cell_area[v] = wx[i] * wy[j];
            g.mu[v] = g.cell_area[v] * std::pow(rho(x0 + i * h, y0 + j * h), exps.alpha);
        }
    }

    g.edges.reserve(2 * nv);
    for (int j = 0; j <= g.m; ++j) {
        for (int i = 0; i <= g.n; ++i) {
            if (i < g.n) {
                // Shared cell boundary has the y-extent of row j.
                const double len = wy[j];
                const double mx = x0 + (i + 0.5) * h, my = y0 + j * h;
                const double r = rho(mx, my);
                g.edges.push_back({g.index(i, j), g.index(i + 1, j),
                                   len / h * std::pow(r, exps.gamma),
                                   len * std::pow(r, exps.beta)});
            }
            if (j < g.m) {
                const double len = wx[i];
                const double mx = x0 + i * h, my = y0 + (j + 0.5) * h;
                const double r = rho(mx, my);
                g.edges.push_back({g.index(i, j), g.index(i, j + 1),
                                   len / h * std::pow(r, exps.gamma),
                                   len * std::pow(r, exps.beta)});
            }
        }
    }

    g.adj_offset.assign(nv + 1, 0);
    for (const GridEdge& e : g.edges) {
        ++g.adj_offset[e.u + 1];
        ++g.adj_offset[e.v + 1];
    }
    std::partial_sum(g.adj_offset.begin(), g.adj_offset.end(), g.adj_offset.begin());
    g.adj_edge.resize(g.adj_offset.back());
    std::vector<int> cursor(g.adj_offset.begin(), g.adj_offset.end() - 1);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        g.adj_edge[cursor[g.edges[e].u]++] = e;
        g.adj_edge[cursor[g.edges[e].v]++] = e;
    }
    return g;
}

std::pair<SparseMat, Eigen::VectorXd> laplacian_mass(const Grid2D& grid) {
    const int nv = grid.nv();
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(4 * grid.edges.size());
    for (const GridEdge& e : grid.edges) {
        trip.emplace_back(e.u, e.u, e.kappa);
        trip.emplace_back(e.v, e.v, e.kappa);
        trip.emplace_back(e.u, e.v, -e.kappa);
        trip.emplace_back(e.v, e.u, -e.kappa);
    }
    SparseMat L(nv, nv);
    L.setFromTriplets(trip.begin(), trip.end());
    Eigen::VectorXd M(nv);
    for (int v = 0; v < nv; ++v) M[v] = grid.mu[v];
    return {std::move(L), std::move(M)};
}

std::pair<SparseMat, Eigen::VectorXd> laplacian_mass_subset(
    const Grid2D& grid, const std::vector<int>& vertices) {
    const int ns = static_cast<int>(vertices.size());
    std::vector<int> local(grid.nv(), -1);
    for (int k = 0; k < ns; ++k) local[vertices[k]] = k;
    std::vector<Eigen::Triplet<double>> trip;
    for (const GridEdge& e : grid.edges) {
        const int lu = local[e.u], lv = local[e.v];
        if (lu < 0 || lv < 0) continue;
        trip.emplace_back(lu, lu, e.kappa);
        trip.emplace_back(lv, lv, e.kappa);
        trip.emplace_back(lu, lv, -e.kappa);
        trip.emplace_back(lv, lu, -e.kappa);
    }
    SparseMat L(ns, ns);
    L.setFromTriplets(trip.begin(), trip.end());
    Eigen::VectorXd M(ns);
    for (int k = 0; k < ns; ++k) M[k] = grid.mu[vertices[k]];
    return {std::move(L), std::move(M)};
}

GridCut cut_sparsity(const Grid2D& grid, const std::vector<int>& members) {
    const int nv = grid.nv();
    if (members.empty()) throw EmptySide("cut side A is empty");
    if (static_cast<int>(members.size()) >= nv) throw EmptySide("cut side A^c is empty");
    std::vector<char> in_a(nv, 0);
    for (int v : members) in_a[v] = 1;

    GridCut cut;
    cut.members = members;
    std::sort(cut.members.begin(), cut.members.end());
    for (int e = 0; e < static_cast<int>(grid.edges.size()); ++e) {
        if (in_a[grid.edges[e].u] != in_a[grid.edges[e].v]) {
            cut.boundary_edges.push_back(e);
            cut.cut_cost += grid.edges[e].tau;
        }
    }
    for (int v = 0; v < nv; ++v) (in_a[v] ? cut.mass_a : cut.mass_ac) += grid.mu[v];
    const double small = std::min(cut.mass_a, cut.mass_ac);
    cut.phi = small > 0.0 ? cut.cut_cost / small
                          : std::numeric_limits<double>::infinity();
    return cut;
}

std::vector<GridComponent> connected_components(const Grid2D& grid,
                                                const std::vector<int>& members) {
    std::vector<char> in_a(grid.nv(), 0);
    for (int v : members) in_a[v] = 1;
    std::vector<char> seen(grid.nv(), 0);
    std::vector<GridComponent> comps;
    std::vector<int> stack;
    for (int s : members) {
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
                if (in_a[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(c.members.begin(), c.members.end());
        comps.push_back(std::move(c));
    }
    std::sort(comps.begin(), comps.end(),
              [](const GridComponent& a, const GridComponent& b) {
                  return a.weight > b.weight;
              });
    return comps;
}

void write_grid_dump(const Grid2D& grid, std::ostream& out) {
    out << grid.n << ' ' << grid.m << ' ' << grid.h << '\n';
    for (int j = 0; j <= grid.m; ++j) {
        for (int i = 0; i <= grid.n; ++i)
            out << grid.mu[grid.index(i, j)] << (i == grid.n ? '\n' : ' ');
    }
    for (const GridEdge& e : grid.edges) {
        out << grid.col(e.u) << ' ' << grid.row(e.u) << ' ' << grid.col(e.v) << ' '
            << grid.row(e.v) << ' ' << e.kappa << ' ' << e.tau << '\n';
    }
}

}  // namespace densitycut
