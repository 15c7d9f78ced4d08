#pragma once

#include <string>
#include <vector>

#include "densitycut/grid2d.hpp"

namespace densitycut {

// Outcome of checking the two-sided eigenvalue/sparsity inequalities at 5%
// default slack. With unit sup factors (the admissible regime) the reference
// forms are
//   cheeger:  phi^2/4 <= lambda2
//   buser:    lambda2 <= 24 d max(L phi, 12 phi^2)
// and the 8-constant variant of the Buser right side is logged alongside.
// Supplying the sup factors switches to the general-exponent forms
//   phi^2/4 <= s_c^2 lambda2
//   lambda2 <= 3 * 2^{beta+1} d s_g max(L phi, 2^{beta+1} s_a phi^2).
struct SupFactors {
    double cheeger = 1.0;  // ||rho^{beta-(alpha+gamma)/2}||_inf
    double grad = 1.0;     // ||rho^{gamma-beta-1}||_inf
    double mass = 1.0;     // ||rho^{alpha+1-beta}||_inf
    bool general = false;
};

struct InequalityFlags {
    double cheeger_lhs = 0.0;
    double cheeger_rhs = 0.0;
    bool cheeger_holds = false;
    double buser_lhs = 0.0;
    double buser_rhs = 0.0;
    double buser_rhs_variant8 = 0.0;
    bool buser_holds = false;
    bool buser_holds_variant8 = false;
    std::string constant_variant;  // "strong12" or "general"
    double slack = 0.05;
};

InequalityFlags verify_inequalities(double phi, double lambda2, double L, int d,
                                    const ExponentTriple& exps,
                                    const SupFactors& sups = {}, double slack = 0.05);

struct CutReport {
    ExponentTriple exps;
    double h = 0.0;
    double phi_sweep = 0.0;
    double lambda2 = 0.0;
    double threshold = 0.0;
    std::vector<int> cut_cells;
    double lipschitz_L = 0.0;
    int dim = 2;
    InequalityFlags flags;
    double residual = 0.0;
    int iterations = 0;
};

// Best cut among the level sets A_t = {v : x_v > t}. Runs the sorted sweep
// with incremental boundary and mass updates; ties go to the more
// mass-balanced cut, then to the lower threshold. Throws ConstantVector
// when x takes fewer than two distinct values.
GridCut sweep_cut(const Grid2D& grid, const Eigen::VectorXd& x);

// Single spectral cut: grid -> pencil -> second eigenvector -> sweep.
std::pair<GridCut, CutReport> algorithm1(const Density& rho, const ExponentTriple& exps,
                                         double h, double tol = 1e-9,
                                         std::uint64_t seed = 42);

struct RoundInfo {
    int round = 0;
    double phi = 0.0;
    double lambda2 = 0.0;
    double threshold = 0.0;
    double mass_before = 0.0;
    double mass_after = 0.0;
    double component_weight = 0.0;
    char side_kept = 'A';  // which side of the cut the kept component lay in
};

struct IterateResult {
    std::vector<int> final_region;
    std::vector<RoundInfo> trail;
    std::string stop_reason;  // "mass_below_threshold" | "max_rounds" | "no_progress"
    double mass_total = 0.0;
    double mass_final = 0.0;
};

// Iterated cutting: while the surviving region keeps at least 9/10 of the
// total weight, cut it with algorithm1 restricted to the region and keep the
// heaviest connected component over both sides of the cut.
IterateResult algorithm2(const Density& rho, const ExponentTriple& exps, double h,
                         double tol = 1e-9, int max_rounds = 50,
                         std::uint64_t seed = 42);

// Sparsity of an existing cut re-scored with different exponents (the grid
// is rebuilt with the same h, so vertex ids carry over).
double rescore_cut(const Density& rho, const ExponentTriple& score_exps, double h,
                   const std::vector<int>& members);

}  // namespace densitycut
