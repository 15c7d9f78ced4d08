#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace densitycut {

struct PointCloud {
    Eigen::MatrixXd points;  // n x d
    int n() const { return static_cast<int>(points.rows()); }
    int d() const { return static_cast<int>(points.cols()); }
};

struct ClusterResult {
    std::vector<int> labels;  // 1 or 2 per point; cluster 1 is {u > t}
    double threshold = 0.0;
    double conductance = 0.0;
    Eigen::VectorXd eigvec;
};

// Gaussian affinity A_ij = exp(-b ||s_i - s_j||^2) with zero diagonal.
// The bandwidth b defaults to n^{2/d}; pass a positive value to override.
// Entries below 1e-12 are dropped when n > 2000.
Eigen::MatrixXd affinity(const PointCloud& cloud, double bandwidth = -1.0);

// Two-way spectral clustering that feeds the Laplacian of D^{1/2} A D^{1/2}
// to the Fiedler solve, then sweeps thresholds of the eigenvector minimizing
// graph conductance w(boundary S) / min(vol S, vol S^c), volumes taken from
// the reweighted adjacency. Throws DisconnectedGraph when the positive
// affinity graph is not connected.
ClusterResult cluster_13(const PointCloud& cloud, double tol = 1e-10,
                         std::uint64_t seed = 42, double bandwidth = -1.0);

// Classical variant with W = D^{-1/2} A D^{-1/2}, for side-by-side runs.
ClusterResult cluster_baseline(const PointCloud& cloud, double tol = 1e-10,
                               std::uint64_t seed = 42, double bandwidth = -1.0);

}  // namespace densitycut
