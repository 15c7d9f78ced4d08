#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "densitycut/domain.hpp"
#include "densitycut/quadrature.hpp"

namespace densitycut {

// A nonnegative weight on a box domain with a declared Lipschitz bound.
// Every builtin family's formula extends past the box (the ramped families
// drop Lipschitz-ly to zero), so evaluation outside the box is allowed;
// tabulated densities reject such queries. Values are immutable after
// construction, so a Density is safe to share across threads.
class Density {
  public:
    using EvalFn = std::function<double(double, double)>;

    Density() = default;
    Density(Domain dom, EvalFn f, double lipschitz, std::string family,
            std::map<std::string, double> params = {}, std::vector<double> kinks = {},
            bool reject_outside = false)
        : dom_(dom), f_(std::move(f)), lip_(lipschitz), family_(std::move(family)),
          params_(std::move(params)), kinks_(std::move(kinks)),
          reject_outside_(reject_outside) {}

    double operator()(double x, double y = 0.0) const;
    double operator()(const Point& p) const { return (*this)(p[0], p[1]); }

    const Domain& domain() const { return dom_; }
    int dim() const { return dom_.dim; }
    double lipschitz() const { return lip_; }
    const std::string& family() const { return family_; }
    const std::map<std::string, double>& params() const { return params_; }

    // x-coordinates where the density has a kink (candidate sweep points).
    const std::vector<double>& kinks() const { return kinks_; }

    // sup of rho^p over the domain, by dense sampling plus kink points.
    double sup_pow(double p, int samples_per_axis = 4096) const;

  private:
    Domain dom_;
    EvalFn f_;
    double lip_ = 0.0;
    std::string family_;
    std::map<std::string, double> params_;
    std::vector<double> kinks_;
    bool reject_outside_ = false;
};

// Construct one of the builtin families:
//   uniform [value, x0, x1 (, y0, y1 for dim=2)]
//   plateau {n}
//   abs_eps {eps}
//   smooth_abs_eps {eps}
//   counterexample2d {eps, n, X, Y}
//   half_moons {noise}
//   circles {noise}
//   valley {}
// Throws UnknownFamily / BadParams.
Density builtin(const std::string& name, const std::map<std::string, double>& params = {});

// Load a tabulated density from a text file:
//   line 1: "dim n h x0"           (1D)  or  "dim n m h x0 y0"  (2D)
//   then row-major whitespace-separated samples (n, or n*m, values).
// Queries between samples use multilinear interpolation; queries outside the
// sampled box throw OutsideDomain.
Density tabulated(const std::string& path);

// integral of rho^p over [lo0,hi0] (1D) or the sub-box (2D).
double mass(const Density& rho, double p, double lo0, double hi0,
            const QuadratureOptions& opt = {});
double mass(const Density& rho, double p, const Domain& region,
            const QuadratureOptions& opt = {});
double mass(const Density& rho, double p, const QuadratureOptions& opt = {});

// Maximum finite-difference slope over a sample grid; a lower estimate of
// the true Lipschitz constant.
double estimate_lipschitz(const Density& rho, int resolution = 0);

// Scaled density rho_hat on the domain stretched by ell, satisfying
// a * rho_hat(ell * x) = ell * rho(x) pointwise. Lipschitz bound becomes L/a.
Density scale(const Density& rho, double ell, double a);

}  // namespace densitycut
