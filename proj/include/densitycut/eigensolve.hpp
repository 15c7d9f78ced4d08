#pragma once

#include <cstdint>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace densitycut {

using SparseMat = Eigen::SparseMatrix<double>;

struct EigenPair {
    double lambda = 0.0;
    Eigen::VectorXd vector;  // spans all rows, including zero-mass ones
    double residual = 0.0;   // ||K v - lambda M v||_2 / ||M v||_2
    int iterations = 0;
};

struct EigOptions {
    double tol = 1e-10;
    int max_iter = 500;
    std::uint64_t seed = 42;
    int block = 4;
};

// Smallest nonzero eigenpair of the pencil K v = lambda M v, where K is a
// symmetric PSD Laplacian-like matrix (K 1 = 0) and M is a nonnegative
// diagonal (passed as its diagonal) with at least two positive entries.
//
// Method: shift-invert block iteration. K + sigma*M is factored once
// (sparse Cholesky, sigma = 1e-8 * tr(K)/tr(M)), the constant nullvector is
// deflated in the M-inner product each step, and Rayleigh-Ritz on the block
// extracts the smallest Ritz pair of the original pencil. Deterministic for
// a fixed seed.
//
// Zero-mass rows (M_ii = 0) are retained: eigenvectors take their K-harmonic
// values there, and M-orthogonality involves only positive-mass entries.
// If the positive-conductance graph splits into two or more components that
// each carry mass, the pencil's second eigenvalue is exactly 0 and the
// M-orthogonal two-component indicator is returned. A component carrying no
// mass at all raises SingularPencil.
//
// The returned vector is M-normalized (v' M v = 1) and sign-fixed so that
// its mu-weighted median is <= 0.
EigenPair second_eigenpair(const SparseMat& K, const Eigen::VectorXd& M_diag,
                           const EigOptions& opt = {});

}  // namespace densitycut
