#include "densitycut/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "densitycut/eigensolve.hpp"
#include "densitycut/errors.hpp"

namespace densitycut {

Eigen::MatrixXd affinity(const PointCloud& cloud, double bandwidth) {
    const int n = cloud.n();
    if (n < 2) throw BadParams("affinity: need at least 2 points");
    if (!cloud.points.allFinite()) throw BadParams("affinity: coordinates must be finite");
    const double b = bandwidth > 0.0 ? bandwidth
                                     : std::pow(static_cast<double>(n), 2.0 / cloud.d());
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    const double prune = n > 2000 ? 1e-12 : 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d2 = (cloud.points.row(i) - cloud.points.row(j)).squaredNorm();
            const double w = std::exp(-b * d2);
            if (w > prune) {
                A(i, j) = w;
                A(j, i) = w;
            }
        }
    }
    return A;
}

namespace {

void check_connected(const Eigen::MatrixXd& A) {
    const int n = static_cast<int>(A.rows());
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (!seen[v] && A(u, v) > 0.0) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    if (count != n)
        throw DisconnectedGraph("positive-affinity graph is not connected");
}

ClusterResult cluster_with(const Eigen::MatrixXd& A, double exponent_half, double tol,
                           std::uint64_t seed) {
    const int n = static_cast<int>(A.rows());
    check_connected(A);

    Eigen::VectorXd deg = A.rowwise().sum();
    Eigen::VectorXd dpow(n);
    for (int i = 0; i < n; ++i) dpow[i] = std::pow(deg[i], exponent_half);
    Eigen::MatrixXd W = dpow.asDiagonal() * A * dpow.asDiagonal();

    Eigen::VectorXd vol = W.rowwise().sum();
    SparseMat L(n, n);
    {
        std::vector<Eigen::Triplet<double>> trip;
        trip.reserve(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j)
                    trip.emplace_back(i, i, vol[i]);
                else if (W(i, j) != 0.0)
                    trip.emplace_back(i, j, -W(i, j));
            }
        }
        L.setFromTriplets(trip.begin(), trip.end());
    }

    EigOptions eopt;
    eopt.tol = tol;
    eopt.seed = seed;
    EigenPair pair = second_eigenpair(L, Eigen::VectorXd::Ones(n), eopt);
    const Eigen::VectorXd& u = pair.vector;

    // Conductance sweep over level sets {u > t}.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return u[a] > u[b]; });
    const double vol_total = vol.sum();

    std::vector<char> in_s(n, 0);
    double cut = 0.0, vol_s = 0.0;
    double best = std::numeric_limits<double>::infinity();
    double best_threshold = 0.0;
    int best_count = -1;
    int pos = 0, count = 0;
    while (pos < n) {
        const double value = u[order[pos]];
        while (pos < n && u[order[pos]] == value) {
            const int v = order[pos];
            in_s[v] = 1;
            vol_s += vol[v];
            for (int w = 0; w < n; ++w)
                if (w != v && W(v, w) != 0.0) cut += in_s[w] ? -W(v, w) : W(v, w);
            ++pos;
            ++count;
        }
        if (pos >= n) break;
        const double small = std::min(vol_s, vol_total - vol_s);
        if (small <= 0.0) continue;
        const double cond = cut / small;
        if (cond < best) {
            best = cond;
            best_threshold = u[order[pos]];
            best_count = count;
        }
    }
    if (best_count < 0) throw ConstantVector("eigenvector is constant; no cut available");

    ClusterResult out;
    out.labels.assign(n, 2);
    for (int k = 0; k < best_count; ++k) out.labels[order[k]] = 1;
    out.threshold = best_threshold;
    out.conductance = best;
    out.eigvec = u;
    return out;
}

}  // namespace

ClusterResult cluster_13(const PointCloud& cloud, double tol, std::uint64_t seed,
                         double bandwidth) {
    return cluster_with(affinity(cloud, bandwidth), 0.5, tol, seed);
}

ClusterResult cluster_baseline(const PointCloud& cloud, double tol, std::uint64_t seed,
                               double bandwidth) {
    return cluster_with(affinity(cloud, bandwidth), -0.5, tol, seed);
}

}  // namespace densitycut
