#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "densitycut/density.hpp"
#include "densitycut/errors.hpp"

using namespace densitycut;

TEST_CASE("uniform density evaluates to its constant") {
    Density rho = builtin("uniform");
    CHECK(rho(0.3) == doctest::Approx(1.0));
    CHECK(rho.lipschitz() == 0.0);
    CHECK(rho.dim() == 1);
}

TEST_CASE("abs_eps evaluates |x| + eps and extends past the box") {
    Density rho = builtin("abs_eps", {{"eps", 0.01}});
    CHECK(rho(0.5) == doctest::Approx(0.51));
    CHECK(rho(-0.5) == doctest::Approx(0.51));
    CHECK(rho(0.0) == doctest::Approx(0.01));
    CHECK(rho.lipschitz() == 1.0);
    // Outside (-1,1) the weight drops linearly to zero.
    CHECK(rho(1.5) == doctest::Approx(2.01 - 1.5));
    CHECK(rho(3.0) == 0.0);
}

TEST_CASE("counterexample2d is the capped valley around x = 0") {
    Density rho = builtin("counterexample2d",
                          {{"eps", 1e-3}, {"n", 16.0}, {"X", 0.5}, {"Y", 1.0}});
    CHECK(rho(0.01, 0.3) == doctest::Approx(1e-3 + 0.01));
    CHECK(rho(-0.01, -0.9) == doctest::Approx(1e-3 + 0.01));  // even in x
    CHECK(rho(0.4, 0.0) == doctest::Approx(1.0 / 16.0));      // capped
    CHECK(rho(0.0, 0.5) == doctest::Approx(1e-3));
    CHECK(rho.lipschitz() == 1.0);
}

TEST_CASE("plateau has height 1/n and unit-slope ramps") {
    Density rho = builtin("plateau", {{"n", 100.0}});
    CHECK(rho(0.0) == doctest::Approx(0.01));
    CHECK(rho(49.0) == doctest::Approx(0.01));
    CHECK(rho(50.005) == doctest::Approx(0.005));
    CHECK(rho(50.01) == doctest::Approx(0.0));
    CHECK(rho(60.0) == 0.0);
    CHECK(rho.domain().hi(0) == doctest::Approx(50.01));
}

TEST_CASE("unknown family and bad params are rejected") {
    CHECK_THROWS_AS(builtin("no_such_family"), UnknownFamily);
    CHECK_THROWS_AS(builtin("abs_eps", {{"eps", -1.0}}), BadParams);
    CHECK_THROWS_AS(builtin("abs_eps", {{"eps", 0.0}}), BadParams);
    CHECK_THROWS_AS(builtin("plateau", {{"n", 0.5}}), BadParams);
    CHECK_THROWS_AS(builtin("counterexample2d", {{"eps", 1e-3}, {"n", 0.0}}), BadParams);
}

TEST_CASE("mass of the unit constant is one") {
    Density rho = builtin("uniform");
    CHECK(mass(rho, 1.0, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("mass matches closed-form antiderivatives on abs_eps") {
    Density rho = builtin("abs_eps", {{"eps", 0.01}});
    CHECK(mass(rho, 1.0, 0.0, 1.0) == doctest::Approx(0.51).epsilon(1e-8));
    // int_{-1}^{0} (|x|+eps)^2 dx = ((1+eps)^3 - eps^3)/3
    const double expect = (std::pow(1.01, 3) - std::pow(0.01, 3)) / 3.0;
    CHECK(mass(rho, 2.0, -1.0, 0.0) == doctest::Approx(expect).epsilon(1e-8));
}

TEST_CASE("mass is additive over disjoint regions and monotone") {
    Density rho = builtin("smooth_abs_eps", {{"eps", 0.1}});
    const double whole = mass(rho, 1.5, -1.0, 1.0);
    const double split = mass(rho, 1.5, -1.0, 0.3) + mass(rho, 1.5, 0.3, 1.0);
    CHECK(whole == doctest::Approx(split).epsilon(1e-9));
    CHECK(mass(rho, 1.5, -0.5, 0.5) < whole);
}

TEST_CASE("2D mass of the unit square") {
    Density rho = builtin("uniform", {{"dim", 2}});
    CHECK(mass(rho, 1.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(mass(rho, 7.0) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("lipschitz estimates approach the analytic constants") {
    CHECK(estimate_lipschitz(builtin("uniform")) == 0.0);
    CHECK(estimate_lipschitz(builtin("abs_eps", {{"eps", 0.1}})) ==
          doctest::Approx(1.0).epsilon(0.05));
    // sup |x| / sqrt(x^2 + eps^2) on (-1,1) is 1/sqrt(1+eps^2)
    CHECK(estimate_lipschitz(builtin("smooth_abs_eps", {{"eps", 0.1}})) ==
          doctest::Approx(1.0 / std::sqrt(1.01)).epsilon(0.05));
    CHECK_THROWS_AS(estimate_lipschitz(builtin("uniform"), 1), BadParams);
}

TEST_CASE("every builtin is nonnegative at random points") {
    std::mt19937_64 rng(7);
    auto check_family = [&](const Density& rho) {
        std::uniform_real_distribution<double> ux(rho.domain().lo(0), rho.domain().hi(0));
        std::uniform_real_distribution<double> uy(
            rho.dim() == 2 ? rho.domain().lo(1) : 0.0,
            rho.dim() == 2 ? rho.domain().hi(1) : 1.0);
        for (int k = 0; k < 100000; ++k) {
            const double v = rho.dim() == 2 ? rho(ux(rng), uy(rng)) : rho(ux(rng));
            if (!(v >= 0.0)) return false;
        }
        return true;
    };
    CHECK(check_family(builtin("uniform")));
    CHECK(check_family(builtin("plateau", {{"n", 10.0}})));
    CHECK(check_family(builtin("abs_eps", {{"eps", 0.01}})));
    CHECK(check_family(builtin("smooth_abs_eps", {{"eps", 0.01}})));
    CHECK(check_family(builtin("counterexample2d", {{"eps", 0.0}, {"n", 16.0}})));
    CHECK(check_family(builtin("half_moons")));
    CHECK(check_family(builtin("circles")));
    CHECK(check_family(builtin("valley")));
}

TEST_CASE("scale is the identity at (1,1)") {
    Density rho = builtin("abs_eps", {{"eps", 0.05}});
    Density same = scale(rho, 1.0, 1.0);
    for (double x : {-0.7, -0.1, 0.0, 0.4, 0.9})
        CHECK(same(x) == doctest::Approx(rho(x)).epsilon(1e-14));
    CHECK(same.lipschitz() == doctest::Approx(rho.lipschitz()));
}

TEST_CASE("scale rule: a * rho_hat(ell x) = ell * rho(x)") {
    SUBCASE("uniform stretched by two") {
        Density rho = builtin("uniform");
        Density hat = scale(rho, 2.0, 1.0);
        CHECK(hat.domain().hi(0) == doctest::Approx(2.0));
        CHECK(hat(1.3) == doctest::Approx(2.0));
    }
    SUBCASE("abs_eps halved in amplitude") {
        Density rho = builtin("abs_eps", {{"eps", 0.05}});
        Density hat = scale(rho, 1.0, 2.0);
        CHECK(hat(0.3) == doctest::Approx((0.3 + 0.05) / 2.0));
        CHECK(hat.lipschitz() == doctest::Approx(0.5));
    }
    SUBCASE("pointwise relation for a generic pair") {
        Density rho = builtin("smooth_abs_eps", {{"eps", 0.2}});
        Density hat = scale(rho, 3.0, 0.5);
        for (double x : {-0.9, -0.2, 0.1, 0.6}) {
            CHECK(0.5 * hat(3.0 * x) == doctest::Approx(3.0 * rho(x)).epsilon(1e-13));
        }
    }
}

TEST_CASE("tabulated densities interpolate and reject outside queries") {
    const char* path = "tab1d.txt";
    {
        std::ofstream out(path);
        out << "1 5 0.25 0.0\n";
        out << "1.0 2.0 1.5 1.0 3.0\n";
    }
    Density rho = tabulated(path);
    CHECK(rho(0.0) == doctest::Approx(1.0));
    CHECK(rho(0.25) == doctest::Approx(2.0));
    CHECK(rho(0.125) == doctest::Approx(1.5));
    CHECK(rho(1.0) == doctest::Approx(3.0));
    CHECK(rho.lipschitz() == doctest::Approx(8.0));  // steepest gap (1->3)/0.25
    CHECK_THROWS_AS(rho(1.25), OutsideDomain);
    std::remove(path);

    const char* path2 = "tab2d.txt";
    {
        std::ofstream out(path2);
        out << "2 3 2 0.5 0.0 0.0\n";
        out << "1 2 3\n4 5 6\n";
    }
    Density rho2 = tabulated(path2);
    CHECK(rho2(0.0, 0.0) == doctest::Approx(1.0));
    CHECK(rho2(1.0, 0.5) == doctest::Approx(6.0));
    CHECK(rho2(0.5, 0.25) == doctest::Approx(3.5));  // bilinear center
    CHECK_THROWS_AS(rho2(0.0, 0.75), OutsideDomain);
    std::remove(path2);
}

TEST_CASE("sup_pow finds extremes including kinks") {
    Density rho = builtin("abs_eps", {{"eps", 0.01}});
    CHECK(rho.sup_pow(1.0) == doctest::Approx(1.01));
    CHECK(rho.sup_pow(-1.0) == doctest::Approx(100.0));  // 1/eps at the kink
    CHECK(rho.sup_pow(0.0) == doctest::Approx(1.0));
}
