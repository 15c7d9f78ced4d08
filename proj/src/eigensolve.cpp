#include "densitycut/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/SparseCholesky>

#include "densitycut/errors.hpp"

namespace densitycut {

namespace {

// Connected components over the nonzero off-diagonal pattern of K.
std::vector<int> components(const SparseMat& K) {
    const int n = static_cast<int>(K.rows());
    std::vector<int> comp(n, -1);
    std::vector<int> stack;
    int c = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (SparseMat::InnerIterator it(K, u); it; ++it) {
                const int v = static_cast<int>(it.row());
                if (v != u && it.value() != 0.0 && comp[v] < 0) {
                    comp[v] = c;
                    stack.push_back(v);
                }
            }
        }
        ++c;
    }
    return comp;
}

void deflate_constant(Eigen::VectorXd& v, const Eigen::VectorXd& m, double m_total) {
    const double proj = m.dot(v) / m_total;
    v.array() -= proj;
}

// Fix sign so the mu-weighted median of the entries is <= 0, then normalize
// v' M v = 1. Keeps sweep-cut output stable across runs.
void canonicalize(Eigen::VectorXd& v, const Eigen::VectorXd& m) {
    std::vector<int> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return v[a] < v[b]; });
    const double half = 0.5 * m.sum();
    double acc = 0.0;
    double median = v[order.back()];
    for (int idx : order) {
        acc += m[idx];
        if (acc >= half) {
            median = v[idx];
            break;
        }
    }
    if (median > 0.0) v = -v;
    const double nrm = std::sqrt(v.dot(m.asDiagonal() * v));
    if (nrm > 0.0) v /= nrm;
}

}  // namespace

EigenPair second_eigenpair(const SparseMat& K_in, const Eigen::VectorXd& M_diag,
                           const EigOptions& opt) {
    const int n = static_cast<int>(K_in.rows());
    if (n != K_in.cols() || n != M_diag.size())
        throw BadParams("second_eigenpair: dimension mismatch");
    int positive_mass = 0;
    for (int i = 0; i < n; ++i) {
        if (M_diag[i] < 0.0) throw BadParams("second_eigenpair: M must be nonnegative");
        if (M_diag[i] > 0.0) ++positive_mass;
    }
    if (positive_mass < 2)
        throw SingularPencil("mass matrix has fewer than two positive entries");

    SparseMat K = K_in;
    K.makeCompressed();

    const auto comp = components(K);
    const int ncomp = 1 + *std::max_element(comp.begin(), comp.end());
    std::vector<double> comp_mass(ncomp, 0.0);
    std::vector<int> comp_size(ncomp, 0);
    for (int i = 0; i < n; ++i) {
        comp_mass[comp[i]] += M_diag[i];
        ++comp_size[comp[i]];
    }
    int massive = 0;
    for (int c = 0; c < ncomp; ++c) {
        if (comp_mass[c] > 0.0)
            ++massive;
        else if (comp_size[c] > 1)
            throw SingularPencil("a connected component carries no mass");
        // size-1 zero-mass components are isolated vertices; they decouple.
    }

    if (massive >= 2) {
        // The pencil has a second zero eigenvalue; report it exactly.
        int first = -1;
        for (int c = 0; c < ncomp; ++c)
            if (comp_mass[c] > 0.0) {
                first = c;
                break;
            }
        double ma = 0.0, mb = 0.0;
        for (int i = 0; i < n; ++i) (comp[i] == first ? ma : mb) += M_diag[i];
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v[i] = comp[i] == first ? 1.0 / ma : -1.0 / mb;
        canonicalize(v, M_diag);
        return EigenPair{0.0, v, 0.0, 0};
    }

    const double trK = K.diagonal().sum();
    const double trM = M_diag.sum();
    if (!(trK > 0.0)) throw SingularPencil("stiffness matrix is identically zero");

    EigenPair out;
    Eigen::SimplicialLLT<SparseMat> llt;
    double sigma = 1e-8 * trK / trM;
    for (int attempt = 0;; ++attempt) {
        SparseMat A = K;
        for (int i = 0; i < n; ++i) A.coeffRef(i, i) += sigma * M_diag[i];
        llt.compute(A);
        if (llt.info() == Eigen::Success) break;
        if (attempt >= 6) throw SolverError("Cholesky factorization of K + sigma*M failed");
        sigma *= 100.0;
    }

    // The usable subspace (M-positive directions orthogonal to constants)
    // has dimension positive_mass - 1; a larger block cannot be orthonormal.
    const int block =
        std::min({std::max(opt.block, 1), std::max(1, n - 1), positive_mass - 1});
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Eigen::MatrixXd V(n, block);
    for (int j = 0; j < block; ++j)
        for (int i = 0; i < n; ++i) V(i, j) = unif(rng);

    auto apply_Binv = [&](Eigen::MatrixXd& W) {
        for (int j = 0; j < W.cols(); ++j) {
            Eigen::VectorXd rhs = M_diag.asDiagonal() * W.col(j);
            W.col(j) = llt.solve(rhs);
        }
    };

    // Modified Gram-Schmidt in the M-inner product; re-randomizes columns
    // that collapse (common when the block exceeds the usable subspace).
    auto m_orthonormalize = [&](Eigen::MatrixXd& W) {
        for (int j = 0; j < W.cols(); ++j) {
            Eigen::VectorXd wj = W.col(j);
            deflate_constant(wj, M_diag, trM);
            for (int k = 0; k < j; ++k) {
                const double proj = W.col(k).dot(M_diag.asDiagonal() * wj);
                wj -= proj * W.col(k);
            }
            double nrm = std::sqrt(wj.dot(M_diag.asDiagonal() * wj));
            if (!(nrm > 1e-14)) {
                for (int i = 0; i < n; ++i) wj[i] = unif(rng);
                Eigen::VectorXd rhs = M_diag.asDiagonal() * wj;
                wj = llt.solve(rhs);
                deflate_constant(wj, M_diag, trM);
                for (int k = 0; k < j; ++k) {
                    const double proj = W.col(k).dot(M_diag.asDiagonal() * wj);
                    wj -= proj * W.col(k);
                }
                nrm = std::sqrt(wj.dot(M_diag.asDiagonal() * wj));
                if (!(nrm > 0.0)) throw SolverError("eigensolver basis collapsed");
            }
            W.col(j) = wj / nrm;
        }
    };

    apply_Binv(V);
    double lambda = 0.0, resid = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best;
    int it = 0;
    for (it = 1; it <= opt.max_iter; ++it) {
        m_orthonormalize(V);
        Eigen::MatrixXd S = V.transpose() * (K * V);
        S = 0.5 * (S + S.transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
        // Rotate the block to Ritz vectors; column 0 approximates lambda_2.
        V = V * es.eigenvectors();
        lambda = es.eigenvalues()[0];
        best = V.col(0);
        Eigen::VectorXd r = K * best - lambda * (M_diag.asDiagonal() * best);
        const double mnorm = (M_diag.asDiagonal() * best).norm();
        resid = mnorm > 0.0 ? r.norm() / mnorm : std::numeric_limits<double>::infinity();
        if (resid <= opt.tol) break;
        apply_Binv(V);
    }
    if (resid > opt.tol) throw SolverNoConverge(resid, it);

    canonicalize(best, M_diag);
    out.lambda = lambda;
    out.vector = best;
    out.residual = resid;
    out.iterations = it;
    return out;
}

}  // namespace densitycut
