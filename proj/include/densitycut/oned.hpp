#pragma once

#include <vector>

#include "densitycut/density.hpp"
#include "densitycut/domain.hpp"
#include "densitycut/eigensolve.hpp"

namespace densitycut {

// Best point cut found by a 1D sparsity sweep. In one dimension a cut is a
// single point xhat; its sparsity is rho^beta(xhat) over the smaller side's
// integral of rho^alpha.
struct Sparsity1DResult {
    double xhat = 0.0;
    double phi = 0.0;
    double left_mass = 0.0;
    double right_mass = 0.0;
};

struct Eig1DResult {
    double lambda2 = 0.0;
    Eigen::VectorXd eigvec;
    int mesh_n = 0;
    double residual = 0.0;
};

// Minimizes rho^beta(x)/min(|left|_alpha, |right|_alpha) over n_candidates
// equispaced interior points plus the density's kinks.
Sparsity1DResult sweep_sparsity_1d(const Density& rho, const ExponentTriple& exps,
                                   int n_candidates = 1024,
                                   const QuadratureOptions& qopt = {});

// Piecewise-linear FEM with lumped mass on a uniform mesh: stiffness weight
// rho^gamma at element midpoints, mass weight rho^alpha at nodes. Returns
// the smallest nonzero eigenvalue of K v = lambda M v.
Eig1DResult lambda2_1d_fem(const Density& rho, const ExponentTriple& exps, int mesh_n,
                           double tol = 1e-10, std::uint64_t seed = 42);

// Rayleigh quotient of the explicit Buser witness: constant plateaus at
// |A|_alpha and -|B|_alpha joined by a linear transition of width
// delta = theta * rho(xhat), shifted so the rho^alpha-weighted integral is
// zero. Always an upper bound on lambda2.
double buser_witness_1d(const Density& rho, const ExponentTriple& exps, double xhat,
                        double theta, const QuadratureOptions& qopt = {});

// The theta selection used by the explicit 1D bound:
//   theta = min(1 / (4 Phi ||rho^{alpha+1-beta}||_inf), ln(3/2) / (alpha L)).
double buser_theta_1d(const Density& rho, const ExponentTriple& exps, double phi);

// Right-hand side of the explicit 1D Buser bound:
//   8 (3/2)^{gamma/alpha} ||rho^{gamma-1-beta}||_inf
//     * max(4 ||rho^{alpha+1-beta}||_inf Phi^2, alpha/ln(3/2) L Phi).
double buser_bound_1d(const Density& rho, const ExponentTriple& exps, double phi);

struct MuckenhouptBracket {
    double lower = 0.0;     // 1/(4B)
    double upper = 0.0;     // 4/B
    double constant = 0.0;  // B itself
    bool divergent = false; // integral of rho^{-gamma} diverged on a side
};

// Weighted-Hardy bracket for lambda2: B is the larger of the two one-sided
// Muckenhoupt constants about the alpha-median m,
//   B_side = sup_r (int_r^boundary rho^alpha) * (int_m^r rho^{-gamma}).
// When rho^{-gamma} is non-integrable the lower bound degrades to 0 and the
// bracket carries no upper information (divergent flag set).
MuckenhouptBracket muckenhoupt_bound(const Density& rho, const ExponentTriple& exps,
                                     int scan_points = 2048);

}  // namespace densitycut
