#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "densitycut/cluster.hpp"
#include "densitycut/density.hpp"
#include "densitycut/errors.hpp"
#include "densitycut/mollify.hpp"
#include "densitycut/oned.hpp"
#include "densitycut/report.hpp"
#include "densitycut/sweepcut.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace densitycut;

PYBIND11_MODULE(_densitycut, m) {
    m.doc() = "Sparse cuts and principal eigenfunctions of density functions";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

    py::class_<Domain>(m, "Domain")
        .def_static("interval", &Domain::interval, py::arg("lo"), py::arg("hi"))
        .def_static("box", &Domain::box, py::arg("x0"), py::arg("x1"), py::arg("y0"),
                    py::arg("y1"))
        .def_readonly("dim", &Domain::dim)
        .def("lo", &Domain::lo)
        .def("hi", &Domain::hi)
        .def("width", &Domain::width);

    py::class_<ExponentTriple>(m, "ExponentTriple")
        .def(py::init<double, double, double>(), py::arg("alpha"), py::arg("beta"),
             py::arg("gamma"))
        .def_readonly("alpha", &ExponentTriple::alpha)
        .def_readonly("beta", &ExponentTriple::beta)
        .def_readonly("gamma", &ExponentTriple::gamma)
        .def("admissible", &ExponentTriple::admissible);

    py::class_<Density>(m, "Density")
        .def("__call__",
             [](const Density& d, double x, double y) { return d(x, y); }, py::arg("x"),
             py::arg("y") = 0.0)
        .def_property_readonly("dim", &Density::dim)
        .def_property_readonly("domain", &Density::domain)
        .def_property_readonly("lipschitz", &Density::lipschitz)
        .def_property_readonly("family", &Density::family)
        .def_property_readonly("kinks", &Density::kinks)
        .def("sup_pow", &Density::sup_pow, py::arg("p"), py::arg("samples_per_axis") = 4096);

    m.def("builtin", &builtin, py::arg("name"),
          py::arg("params") = std::map<std::string, double>{});
    m.def("tabulated", &tabulated, py::arg("path"));
    m.def(
        "mass",
        [](const Density& rho, double p, double lo, double hi) {
            return mass(rho, p, lo, hi);
        },
        py::arg("rho"), py::arg("p"), py::arg("lo"), py::arg("hi"));
    m.def(
        "total_mass", [](const Density& rho, double p) { return mass(rho, p); },
        py::arg("rho"), py::arg("p"));
    m.def("estimate_lipschitz", &estimate_lipschitz, py::arg("rho"),
          py::arg("resolution") = 0);
    m.def("scale", &scale, py::arg("rho"), py::arg("ell"), py::arg("a"));

    py::class_<Sparsity1DResult>(m, "Sparsity1DResult")
        .def_readonly("xhat", &Sparsity1DResult::xhat)
        .def_readonly("phi", &Sparsity1DResult::phi)
        .def_readonly("left_mass", &Sparsity1DResult::left_mass)
        .def_readonly("right_mass", &Sparsity1DResult::right_mass);

    py::class_<Eig1DResult>(m, "Eig1DResult")
        .def_readonly("lambda2", &Eig1DResult::lambda2)
        .def_readonly("eigvec", &Eig1DResult::eigvec)
        .def_readonly("mesh_n", &Eig1DResult::mesh_n)
        .def_readonly("residual", &Eig1DResult::residual);

    m.def(
        "sweep_sparsity_1d",
        [](const Density& rho, const ExponentTriple& e, int n) {
            return sweep_sparsity_1d(rho, e, n);
        },
        py::arg("rho"), py::arg("exponents"), py::arg("n_candidates") = 1024);
    m.def(
        "lambda2_1d_fem",
        [](const Density& rho, const ExponentTriple& e, int mesh_n, double tol,
           std::uint64_t seed) { return lambda2_1d_fem(rho, e, mesh_n, tol, seed); },
        py::arg("rho"), py::arg("exponents"), py::arg("mesh_n"), py::arg("tol") = 1e-10,
        py::arg("seed") = 42);
    m.def(
        "buser_witness_1d",
        [](const Density& rho, const ExponentTriple& e, double xhat, double theta) {
            return buser_witness_1d(rho, e, xhat, theta);
        },
        py::arg("rho"), py::arg("exponents"), py::arg("xhat"), py::arg("theta"));
    m.def("buser_theta_1d", &buser_theta_1d, py::arg("rho"), py::arg("exponents"),
          py::arg("phi"));
    m.def("buser_bound_1d", &buser_bound_1d, py::arg("rho"), py::arg("exponents"),
          py::arg("phi"));

    py::class_<MuckenhouptBracket>(m, "MuckenhouptBracket")
        .def_readonly("lower", &MuckenhouptBracket::lower)
        .def_readonly("upper", &MuckenhouptBracket::upper)
        .def_readonly("constant", &MuckenhouptBracket::constant)
        .def_readonly("divergent", &MuckenhouptBracket::divergent);
    m.def(
        "muckenhoupt_bound",
        [](const Density& rho, const ExponentTriple& e) { return muckenhoupt_bound(rho, e); },
        py::arg("rho"), py::arg("exponents"));

    py::class_<GridEdge>(m, "GridEdge")
        .def_readonly("u", &GridEdge::u)
        .def_readonly("v", &GridEdge::v)
        .def_readonly("kappa", &GridEdge::kappa)
        .def_readonly("tau", &GridEdge::tau);

    py::class_<Grid2D>(m, "Grid2D")
        .def_readonly("n", &Grid2D::n)
        .def_readonly("m", &Grid2D::m)
        .def_readonly("h", &Grid2D::h)
        .def_readonly("mu", &Grid2D::mu)
        .def_readonly("edges", &Grid2D::edges)
        .def("nv", &Grid2D::nv)
        .def("index", &Grid2D::index)
        .def("mu_total", &Grid2D::mu_total);

    py::class_<GridCut>(m, "GridCut")
        .def_readonly("members", &GridCut::members)
        .def_readonly("boundary_edges", &GridCut::boundary_edges)
        .def_readonly("phi", &GridCut::phi)
        .def_readonly("cut_cost", &GridCut::cut_cost)
        .def_readonly("mass_a", &GridCut::mass_a)
        .def_readonly("mass_ac", &GridCut::mass_ac)
        .def_readonly("threshold", &GridCut::threshold);

    m.def(
        "build_grid",
        [](const Density& rho, const ExponentTriple& e, double h) {
            return build_grid(rho, e, h);
        },
        py::arg("rho"), py::arg("exponents"), py::arg("h"));
    m.def("cut_sparsity", &cut_sparsity, py::arg("grid"), py::arg("members"));
    m.def(
        "laplacian_mass",
        [](const Grid2D& g) {
            auto [L, M] = laplacian_mass(g);
            return py::make_tuple(Eigen::MatrixXd(L), M);
        },
        py::arg("grid"));

    py::class_<EigenPair>(m, "EigenPair")
        .def_readonly("lambda2", &EigenPair::lambda)
        .def_readonly("vector", &EigenPair::vector)
        .def_readonly("residual", &EigenPair::residual)
        .def_readonly("iterations", &EigenPair::iterations);
    m.def(
        "second_eigenpair",
        [](const Eigen::MatrixXd& K, const Eigen::VectorXd& M, double tol,
           std::uint64_t seed) {
            EigOptions opt;
            opt.tol = tol;
            opt.seed = seed;
            return second_eigenpair(K.sparseView(), M, opt);
        },
        py::arg("K"), py::arg("M"), py::arg("tol") = 1e-10, py::arg("seed") = 42);

    py::class_<InequalityFlags>(m, "InequalityFlags")
        .def_readonly("cheeger_lhs", &InequalityFlags::cheeger_lhs)
        .def_readonly("cheeger_rhs", &InequalityFlags::cheeger_rhs)
        .def_readonly("cheeger_holds", &InequalityFlags::cheeger_holds)
        .def_readonly("buser_lhs", &InequalityFlags::buser_lhs)
        .def_readonly("buser_rhs", &InequalityFlags::buser_rhs)
        .def_readonly("buser_holds", &InequalityFlags::buser_holds);
    m.def(
        "verify_inequalities",
        [](double phi, double lambda2, double L, int d, const ExponentTriple& e,
           double slack) { return verify_inequalities(phi, lambda2, L, d, e, {}, slack); },
        py::arg("phi"), py::arg("lambda2"), py::arg("L"), py::arg("d"),
        py::arg("exponents"), py::arg("slack") = 0.05);

    py::class_<CutReport>(m, "CutReport")
        .def_readonly("phi_sweep", &CutReport::phi_sweep)
        .def_readonly("lambda2", &CutReport::lambda2)
        .def_readonly("threshold", &CutReport::threshold)
        .def_readonly("cut_cells", &CutReport::cut_cells)
        .def_readonly("flags", &CutReport::flags)
        .def_readonly("residual", &CutReport::residual);

    m.def(
        "sweep_cut",
        [](const Grid2D& g, const Eigen::VectorXd& x) { return sweep_cut(g, x); },
        py::arg("grid"), py::arg("x"));
    m.def(
        "algorithm1",
        [](const Density& rho, const ExponentTriple& e, double h, double tol,
           std::uint64_t seed) { return algorithm1(rho, e, h, tol, seed); },
        py::arg("rho"), py::arg("exponents"), py::arg("h"), py::arg("tol") = 1e-9,
        py::arg("seed") = 42);

    py::class_<RoundInfo>(m, "RoundInfo")
        .def_readonly("round", &RoundInfo::round)
        .def_readonly("phi", &RoundInfo::phi)
        .def_readonly("mass_before", &RoundInfo::mass_before)
        .def_readonly("mass_after", &RoundInfo::mass_after)
        .def_readonly("side_kept", &RoundInfo::side_kept);
    py::class_<IterateResult>(m, "IterateResult")
        .def_readonly("final_region", &IterateResult::final_region)
        .def_readonly("trail", &IterateResult::trail)
        .def_readonly("stop_reason", &IterateResult::stop_reason)
        .def_readonly("mass_total", &IterateResult::mass_total)
        .def_readonly("mass_final", &IterateResult::mass_final);
    m.def(
        "algorithm2",
        [](const Density& rho, const ExponentTriple& e, double h, double tol,
           int max_rounds, std::uint64_t seed) {
            return algorithm2(rho, e, h, tol, max_rounds, seed);
        },
        py::arg("rho"), py::arg("exponents"), py::arg("h"), py::arg("tol") = 1e-9,
        py::arg("max_rounds") = 50, py::arg("seed") = 42);

    py::class_<Mollifier>(m, "Mollifier")
        .def(py::init<int>(), py::arg("dim"))
        .def_readonly("d", &Mollifier::d)
        .def_readonly("c", &Mollifier::c)
        .def("__call__", [](const Mollifier& mm, double x, double y) {
            return mm(Point{x, y});
        }, py::arg("x"), py::arg("y") = 0.0);
    m.def("grad_l1_norm", &grad_l1_norm, py::arg("mollifier"), py::arg("rtol") = 1e-6);
    m.def(
        "mollify",
        [](const std::function<double(double, double)>& u, const Density& rho,
           double theta, double x, double y, int quad_n) {
            auto wrapped = [&u](const Point& p) { return u(p[0], p[1]); };
            return mollify(wrapped, rho, theta, Point{x, y}, quad_n);
        },
        py::arg("u"), py::arg("rho"), py::arg("theta"), py::arg("x"), py::arg("y") = 0.0,
        py::arg("quad_n") = 64);

    py::class_<PointCloud>(m, "PointCloud")
        .def(py::init([](const Eigen::MatrixXd& pts) {
            PointCloud c;
            c.points = pts;
            return c;
        }))
        .def_readonly("points", &PointCloud::points);
    py::class_<ClusterResult>(m, "ClusterResult")
        .def_readonly("labels", &ClusterResult::labels)
        .def_readonly("threshold", &ClusterResult::threshold)
        .def_readonly("conductance", &ClusterResult::conductance)
        .def_readonly("eigvec", &ClusterResult::eigvec);
    m.def("affinity", &affinity, py::arg("cloud"), py::arg("bandwidth") = -1.0);
    m.def("cluster_13", &cluster_13, py::arg("cloud"), py::arg("tol") = 1e-10,
          py::arg("seed") = 42, py::arg("bandwidth") = -1.0);
    m.def("cluster_baseline", &cluster_baseline, py::arg("cloud"), py::arg("tol") = 1e-10,
          py::arg("seed") = 42, py::arg("bandwidth") = -1.0);

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
