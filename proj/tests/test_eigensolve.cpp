#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "densitycut/eigensolve.hpp"
#include "densitycut/errors.hpp"

using namespace densitycut;

namespace {

SparseMat laplacian_from_edges(int n, const std::vector<std::tuple<int, int, double>>& edges) {
    std::vector<Eigen::Triplet<double>> trip;
    for (auto [u, v, w] : edges) {
        trip.emplace_back(u, u, w);
        trip.emplace_back(v, v, w);
        trip.emplace_back(u, v, -w);
        trip.emplace_back(v, u, -w);
    }
    SparseMat K(n, n);
    K.setFromTriplets(trip.begin(), trip.end());
    return K;
}

// Independent oracle: dense eigensolve of M^{-1/2} K M^{-1/2}, second
// smallest eigenvalue. Requires M > 0.
double dense_lambda2(const SparseMat& K, const Eigen::VectorXd& M) {
    const int n = static_cast<int>(K.rows());
    Eigen::VectorXd s = M.array().rsqrt();
    Eigen::MatrixXd C = s.asDiagonal() * Eigen::MatrixXd(K) * s.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (C + C.transpose()));
    return es.eigenvalues()[1];
}

}  // namespace

TEST_CASE("single edge pencil has lambda = 2") {
    SparseMat K = laplacian_from_edges(2, {{0, 1, 1.0}});
    EigenPair p = second_eigenpair(K, Eigen::VectorXd::Ones(2));
    CHECK(p.lambda == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(std::fabs(p.vector[0] - p.vector[1]) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
    CHECK(p.residual <= 1e-10);
}

TEST_CASE("path of three has spectrum {0,1,3}") {
    SparseMat K = laplacian_from_edges(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    EigenPair p = second_eigenpair(K, Eigen::VectorXd::Ones(3));
    CHECK(p.lambda == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("4-cycle has a degenerate lambda2 = 2") {
    SparseMat K = laplacian_from_edges(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 3, 1.0}});
    EigenPair p = second_eigenpair(K, Eigen::VectorXd::Ones(4));
    CHECK(p.lambda == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("returned pair is M-normalized, M-orthogonal to constants, Rayleigh-consistent") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unif(0.1, 10.0);
    const int n = 60;
    std::vector<std::tuple<int, int, double>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, unif(rng)});
    for (int k = 0; k < 40; ++k) {
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u != v) edges.push_back({std::min(u, v), std::max(u, v), unif(rng)});
    }
    SparseMat K = laplacian_from_edges(n, edges);
    Eigen::VectorXd M(n);
    for (int i = 0; i < n; ++i) M[i] = unif(rng);

    EigenPair p = second_eigenpair(K, M);
    const Eigen::VectorXd Mv = M.asDiagonal() * p.vector;
    CHECK(std::fabs(Mv.sum()) <= 1e-10 * Mv.cwiseAbs().sum());
    CHECK(p.vector.dot(Mv) == doctest::Approx(1.0).epsilon(1e-10));
    const double rayleigh = p.vector.dot(K * p.vector) / p.vector.dot(Mv);
    CHECK(p.lambda == doctest::Approx(rayleigh).epsilon(1e-10));
    CHECK(p.lambda == doctest::Approx(dense_lambda2(K, M)).epsilon(1e-8));
}

TEST_CASE("matches the dense oracle on random pencils") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> wdist(0.05, 20.0);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 20 + static_cast<int>(rng() % 100);
        std::vector<std::tuple<int, int, double>> edges;
        // Random spanning tree keeps it connected.
        for (int v = 1; v < n; ++v)
            edges.push_back({static_cast<int>(rng() % v), v, wdist(rng)});
        for (int k = 0; k < n; ++k) {
            int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            if (u != v) edges.push_back({std::min(u, v), std::max(u, v), wdist(rng)});
        }
        SparseMat K = laplacian_from_edges(n, edges);
        Eigen::VectorXd M(n);
        for (int i = 0; i < n; ++i) M[i] = wdist(rng);
        EigenPair p = second_eigenpair(K, M);
        const double oracle = dense_lambda2(K, M);
        CHECK(p.lambda == doctest::Approx(oracle).epsilon(1e-8));
    }
}

TEST_CASE("zero-mass interior row takes its harmonic value") {
    // Path 0-1-2 with no mass at the middle vertex: the finite pencil
    // reduces to lambda = 1 with an odd vector vanishing at the middle.
    SparseMat K = laplacian_from_edges(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    Eigen::VectorXd M(3);
    M << 1.0, 0.0, 1.0;
    EigenPair p = second_eigenpair(K, M);
    CHECK(p.lambda == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::fabs(p.vector[1]) <= 1e-8);
    const Eigen::VectorXd Mv = M.asDiagonal() * p.vector;
    CHECK(std::fabs(Mv.sum()) <= 1e-10 * Mv.cwiseAbs().sum());
}

TEST_CASE("decreasing tol never raises lambda materially") {
    SparseMat K = laplacian_from_edges(
        8, {{0, 1, 2.0}, {1, 2, 0.5}, {2, 3, 1.0}, {3, 4, 3.0}, {4, 5, 0.7},
            {5, 6, 1.1}, {6, 7, 0.9}, {0, 4, 0.2}});
    Eigen::VectorXd M = Eigen::VectorXd::Constant(8, 1.3);
    EigOptions loose, tight;
    loose.tol = 1e-6;
    tight.tol = 1e-12;
    const double l1 = second_eigenpair(K, M, loose).lambda;
    const double l2 = second_eigenpair(K, M, tight).lambda;
    CHECK(l2 <= l1 + 1e-6);
}

TEST_CASE("two massive components report lambda = 0") {
    SparseMat K = laplacian_from_edges(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    EigenPair p = second_eigenpair(K, Eigen::VectorXd::Ones(4));
    CHECK(p.lambda == 0.0);
    const Eigen::VectorXd Mv = p.vector;
    CHECK(std::fabs(Mv.sum()) <= 1e-12 * Mv.cwiseAbs().sum());
}

TEST_CASE("a massless multi-vertex component is a singular pencil") {
    SparseMat K = laplacian_from_edges(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    Eigen::VectorXd M(4);
    M << 1.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(second_eigenpair(K, M), SingularPencil);
}

TEST_CASE("fewer than two positive masses is rejected") {
    SparseMat K = laplacian_from_edges(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    Eigen::VectorXd M(3);
    M << 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(second_eigenpair(K, M), SingularPencil);
}

TEST_CASE("deterministic for a fixed seed") {
    SparseMat K = laplacian_from_edges(5, {{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 1.5}, {3, 4, 0.5}});
    Eigen::VectorXd M = Eigen::VectorXd::Ones(5);
    EigenPair a = second_eigenpair(K, M);
    EigenPair b = second_eigenpair(K, M);
    CHECK(a.lambda == b.lambda);
    CHECK((a.vector - b.vector).cwiseAbs().maxCoeff() == 0.0);
}
