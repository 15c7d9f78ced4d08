#pragma once

#include <iosfwd>
#include <vector>

#include "densitycut/density.hpp"
#include "densitycut/eigensolve.hpp"

namespace densitycut {

struct GridEdge {
    int u = 0, v = 0;      // vertex indices, u < v
    double kappa = 0.0;    // conductance (|E|/h) rho^gamma(midpoint)
    double tau = 0.0;      // cut cost |E| rho^beta(midpoint)
};

// Discretization of a 2D density: vertex (i,j) sits at (x0+ih, y0+jh) and
// represents the h x h square centered there, clipped to the domain.
// Vertex weights mu approximate the alpha-mass of the cell; 4-neighbor
// edges carry a conductance and a cut cost sampled at the edge midpoint.
// Immutable after build; queries are read-only.
struct Grid2D {
    int n = 0, m = 0;  // max cell indices; vertices are (n+1) x (m+1)
    double h = 0.0;
    Domain domain;
    ExponentTriple exps;
    std::vector<double> mu;
    std::vector<double> cell_area;
    std::vector<GridEdge> edges;
    // CSR adjacency: edge ids incident to each vertex.
    std::vector<int> adj_offset;
    std::vector<int> adj_edge;

    int nv() const { return (n + 1) * (m + 1); }
    int index(int i, int j) const { return j * (n + 1) + i; }
    int col(int v) const { return v % (n + 1); }
    int row(int v) const { return v / (n + 1); }
    Point coord(int v) const {
        return {domain.lo(0) + col(v) * h, domain.lo(1) + row(v) * h};
    }
    double mu_total() const;
};

struct GridCut {
    std::vector<int> members;          // sorted vertex ids of side A
    std::vector<int> boundary_edges;   // edge ids of E(A, A^c)
    double phi = 0.0;
    double cut_cost = 0.0;
    double mass_a = 0.0;
    double mass_ac = 0.0;
    double threshold = 0.0;  // filled by sweep_cut
};

// Vertex count is capped at 4e6 (GridTooFine); h must be at most a quarter
// of the shorter side (GridTooCoarse).
Grid2D build_grid(const Density& rho, const ExponentTriple& exps, double h,
                  std::int64_t max_vertices = 4'000'000);

// Graph Laplacian with edge weights kappa (L = D - W, L1 = 0) and the
// diagonal mass mu.
std::pair<SparseMat, Eigen::VectorXd> laplacian_mass(const Grid2D& grid);

// Same, restricted to the induced subgraph on `vertices` (renumbered in the
// given order). Edges leaving the subset are dropped.
std::pair<SparseMat, Eigen::VectorXd> laplacian_mass_subset(
    const Grid2D& grid, const std::vector<int>& vertices);

// Sparsity of the cut (A, A^c): sum of tau over boundary edges divided by
// the smaller side's mu. Symmetric in A <-> A^c.
GridCut cut_sparsity(const Grid2D& grid, const std::vector<int>& members);

struct GridComponent {
    std::vector<int> members;
    double weight = 0.0;  // mu(component)
};

// 4-neighbor connected components of the vertex set A, heaviest first.
std::vector<GridComponent> connected_components(const Grid2D& grid,
                                                const std::vector<int>& members);

// Test/debug dump: header "n m h", mu table, then one line per edge
// "i j i' j' kappa tau".
void write_grid_dump(const Grid2D& grid, std::ostream& out);

}  // namespace densitycut
