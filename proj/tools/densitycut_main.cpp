// Command-line front end: density analysis, 2D partitioning, clustering and
// the inequality/scaling verification harnesses. Reports are JSON with a
// stable key order; masks are ASCII PGM; sweeps aggregate to CSV.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "densitycut/cluster.hpp"
#include "densitycut/density.hpp"
#include "densitycut/errors.hpp"
#include "densitycut/mollify.hpp"
#include "densitycut/oned.hpp"
#include "densitycut/report.hpp"
#include "densitycut/sweepcut.hpp"

namespace dc = densitycut;
namespace fs = std::filesystem;

namespace {

struct Options {
    std::string command;
    std::string density_name = "uniform";
    std::map<std::string, double> density_params;
    std::string density_file;
    std::vector<double> abg{1.0, 2.0, 3.0};
    double h = 0.02;
    double tol = 1e-9;
    std::uint64_t seed = 42;
    std::string out_dir;
    std::vector<double> sweep_eps;
    int max_rounds = 50;
    int mesh = 2048;
    int candidates = 1024;
    std::string points_file;
    bool timings = false;
    std::vector<double> counterexample_n{32.0, 64.0};
};

int thread_cap() {
    if (const char* env = std::getenv("DENSITYCUT_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 4;
}

dc::Density make_density(const Options& opt, std::optional<double> eps_override = {}) {
    if (opt.density_name == "tabulated") {
        if (opt.density_file.empty())
            throw dc::BadParams("tabulated density requires --file");
        return dc::tabulated(opt.density_file);
    }
    auto params = opt.density_params;
    if (eps_override) params["eps"] = *eps_override;
    return dc::builtin(opt.density_name, params);
}

dc::Json density_config(const Options& opt, const dc::Density& rho) {
    dc::Json cfg;
    cfg["family"] = rho.family();
    dc::Json p = dc::Json::object();
    for (const auto& [k, v] : rho.params()) p[k] = v;
    cfg["params"] = p;
    if (!opt.density_file.empty()) cfg["file"] = opt.density_file;
    return cfg;
}

dc::Json base_config(const Options& opt, const dc::Density& rho) {
    dc::Json cfg;
    cfg["command"] = opt.command;
    cfg["density"] = density_config(opt, rho);
    cfg["abg"] = opt.abg;
    cfg["h"] = opt.h;
    cfg["tol"] = opt.tol;
    cfg["seed"] = opt.seed;
    cfg["mesh"] = opt.mesh;
    cfg["version"] = dc::kVersion;
    return cfg;
}

void emit(const Options& opt, const dc::Json& report, const std::string& name = "report.json") {
    if (opt.out_dir.empty()) {
        std::cout << report.dump(2) << '\n';
        return;
    }
    fs::create_directories(opt.out_dir);
    std::ofstream out(fs::path(opt.out_dir) / name);
    out << report.dump(2) << '\n';
}

void maybe_add_timings(dc::Json& report, const Options& opt, double ms) {
    if (opt.timings) report["timings_ms"] = ms;
}

class Stopwatch {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

  private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

dc::ExponentTriple triple(const Options& opt) {
    if (opt.abg.size() != 3) throw dc::JobConfigError("--abg needs three values");
    return {opt.abg[0], opt.abg[1], opt.abg[2]};
}

// One 1D verification pass: sweep sparsity, FEM eigenvalue, inequality flags.
dc::Json verify_1d(const Options& opt, const dc::Density& rho,
                   const dc::ExponentTriple& exps) {
    auto sparsity = dc::sweep_sparsity_1d(rho, exps, opt.candidates);
    auto eig = dc::lambda2_1d_fem(rho, exps, opt.mesh, opt.tol, opt.seed);
    auto flags = dc::verify_inequalities(sparsity.phi, eig.lambda2, rho.lipschitz(), 1, exps);

    dc::Json j;
    j["phi"] = sparsity.phi;
    j["xhat"] = sparsity.xhat;
    j["left_mass"] = sparsity.left_mass;
    j["right_mass"] = sparsity.right_mass;
    j["lambda2"] = eig.lambda2;
    j["residual"] = eig.residual;
    dc::Json f = dc::flags_to_json(flags);
    j["cheeger"] = f["cheeger"];
    j["buser"] = f["buser"];
    j["slack"] = f["slack"];
    return j;
}

int cmd_analyze1d(const Options& opt) {
    dc::Density rho = make_density(opt);
    if (rho.dim() != 1) throw dc::BadParams("analyze1d needs a 1D density");
    const dc::ExponentTriple exps = triple(opt);
    Stopwatch sw;

    dc::Json j;
    j["config"] = base_config(opt, rho);
    dc::Json core = verify_1d(opt, rho, exps);
    for (auto& [k, v] : core.items()) j[k] = v;

    const double phi = core["phi"];
    const double theta = dc::buser_theta_1d(rho, exps, phi);
    const double xhat = core["xhat"];
    dc::Json witness;
    witness["theta"] = theta;
    try {
        witness["rayleigh"] = dc::buser_witness_1d(rho, exps, xhat, theta);
        witness["bound"] = dc::buser_bound_1d(rho, exps, phi);
    } catch (const dc::Error& e) {
        witness["error"] = e.what();
    }
    j["witness"] = witness;

    auto mk = dc::muckenhoupt_bound(rho, exps);
    j["muckenhoupt"] = {{"lower", mk.lower},
                        {"upper", mk.upper},
                        {"constant", mk.constant},
                        {"divergent", mk.divergent}};
    j["version"] = dc::kVersion;
    maybe_add_timings(j, opt, sw.ms());
    emit(opt, j);
    return 0;
}

int cmd_verify(const Options& opt) {
    const dc::ExponentTriple exps = triple(opt);

    if (!opt.sweep_eps.empty()) {
        // Fan the eps list out to parallel jobs and aggregate one CSV row per
        // point plus a JSON summary.
        const int cap = thread_cap();
        std::vector<std::vector<double>> rows(opt.sweep_eps.size());
        std::vector<std::future<void>> busy;
        std::size_t next = 0;
        auto run_one = [&](std::size_t idx) {
            Options o = opt;
            dc::Density rho = make_density(o, opt.sweep_eps[idx]);
            dc::Json r = verify_1d(o, rho, exps);
            rows[idx] = {opt.sweep_eps[idx],
                         r["phi"].get<double>(),
                         r["lambda2"].get<double>(),
                         r["cheeger"]["lhs"].get<double>(),
                         r["cheeger"]["holds"].get<bool>() ? 1.0 : 0.0,
                         r["buser"]["rhs"].get<double>(),
                         r["buser"]["holds"].get<bool>() ? 1.0 : 0.0};
        };
        while (next < opt.sweep_eps.size() || !busy.empty()) {
            while (next < opt.sweep_eps.size() && static_cast<int>(busy.size()) < cap)
                busy.push_back(std::async(std::launch::async, run_one, next++));
            busy.front().get();
            busy.erase(busy.begin());
        }

        std::ostringstream csv;
        dc::write_csv(csv,
                      {"eps", "phi", "lambda2", "cheeger_lhs", "cheeger_holds",
                       "buser_rhs", "buser_holds"},
                      rows);
        if (opt.out_dir.empty()) {
            std::cout << csv.str();
        } else {
            fs::create_directories(opt.out_dir);
            std::ofstream out(fs::path(opt.out_dir) / "sweep.csv");
            out << csv.str();
        }
        return 0;
    }

    dc::Density rho = make_density(opt);
    Stopwatch sw;
    dc::Json j;
    j["config"] = base_config(opt, rho);
    if (rho.dim() == 1) {
        dc::Json core = verify_1d(opt, rho, exps);
        for (auto& [k, v] : core.items()) j[k] = v;
    } else {
        auto [cut, rep] = dc::algorithm1(rho, exps, opt.h, opt.tol, opt.seed);
        dc::Json r = dc::cut_report_to_json(rep, j["config"]);
        for (auto& [k, v] : r.items())
            if (k != "config") j[k] = v;
    }
    j["version"] = dc::kVersion;
    maybe_add_timings(j, opt, sw.ms());
    emit(opt, j);
    return 0;
}

int cmd_partition2d(const Options& opt) {
    dc::Density rho = make_density(opt);
    if (rho.dim() != 2) throw dc::BadParams("partition2d needs a 2D density");
    const dc::ExponentTriple exps = triple(opt);
    Stopwatch sw;
    auto [cut, rep] = dc::algorithm1(rho, exps, opt.h, opt.tol, opt.seed);
    dc::Json j = dc::cut_report_to_json(rep, base_config(opt, rho));
    j["mass_a"] = cut.mass_a;
    j["mass_ac"] = cut.mass_ac;
    maybe_add_timings(j, opt, sw.ms());
    if (!opt.out_dir.empty()) {
        fs::create_directories(opt.out_dir);
        dc::Grid2D grid = dc::build_grid(rho, exps, opt.h);
        std::ofstream pgm(fs::path(opt.out_dir) / "mask.pgm");
        dc::write_pgm_mask(grid, cut.members, pgm);
    }
    emit(opt, j);
    return 0;
}

int cmd_iterate2d(const Options& opt) {
    dc::Density rho = make_density(opt);
    if (rho.dim() != 2) throw dc::BadParams("iterate2d needs a 2D density");
    const dc::ExponentTriple exps = triple(opt);
    Stopwatch sw;
    dc::IterateResult res = dc::algorithm2(rho, exps, opt.h, opt.tol, opt.max_rounds, opt.seed);

    dc::Json j;
    j["config"] = base_config(opt, rho);
    j["config"]["max_rounds"] = opt.max_rounds;
    j["mass_total"] = res.mass_total;
    j["mass_final"] = res.mass_final;
    j["stop_reason"] = res.stop_reason;
    dc::Json trail = dc::Json::array();
    for (const auto& r : res.trail) {
        trail.push_back({{"round", r.round},
                         {"phi", r.phi},
                         {"lambda2", r.lambda2},
                         {"threshold", r.threshold},
                         {"mass_before", r.mass_before},
                         {"mass_after", r.mass_after},
                         {"side_kept", std::string(1, r.side_kept)}});
    }
    j["trail"] = trail;
    j["version"] = dc::kVersion;
    maybe_add_timings(j, opt, sw.ms());
    if (!opt.out_dir.empty()) {
        fs::create_directories(opt.out_dir);
        dc::Grid2D grid = dc::build_grid(rho, exps, opt.h);
        std::ofstream pgm(fs::path(opt.out_dir) / "mask.pgm");
        dc::write_pgm_mask(grid, res.final_region, pgm);
    }
    emit(opt, j);
    return 0;
}

int cmd_cluster(const Options& opt) {
    if (opt.points_file.empty()) throw dc::JobConfigError("cluster requires --points CSV");
    std::ifstream in(opt.points_file);
    if (!in) throw dc::BadParams("cannot open " + opt.points_file);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw dc::BadParams("no points in " + opt.points_file);
    dc::PointCloud cloud;
    cloud.points.resize(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw dc::BadParams("ragged rows in points CSV");
        for (std::size_t k = 0; k < rows[i].size(); ++k) cloud.points(i, k) = rows[i][k];
    }

    Stopwatch sw;
    dc::ClusterResult main_res = dc::cluster_13(cloud, opt.tol, opt.seed);
    dc::ClusterResult base_res = dc::cluster_baseline(cloud, opt.tol, opt.seed);

    dc::Json j;
    j["config"] = {{"command", opt.command},
                   {"points", opt.points_file},
                   {"n", cloud.n()},
                   {"d", cloud.d()},
                   {"tol", opt.tol},
                   {"seed", opt.seed},
                   {"version", dc::kVersion}};
    j["variant_13"] = {{"threshold", main_res.threshold},
                       {"conductance", main_res.conductance}};
    j["variant_baseline"] = {{"threshold", base_res.threshold},
                             {"conductance", base_res.conductance}};
    j["version"] = dc::kVersion;
    maybe_add_timings(j, opt, sw.ms());

    if (!opt.out_dir.empty()) {
        fs::create_directories(opt.out_dir);
        std::ofstream labels(fs::path(opt.out_dir) / "labels.csv");
        labels << "index,label\n";
        for (int i = 0; i < cloud.n(); ++i)
            labels << i << ',' << main_res.labels[i] << '\n';
    }
    emit(opt, j);
    return 0;
}

int cmd_mollify_check(const Options& opt) {
    Stopwatch sw;
    dc::Json j;
    j["config"] = {{"command", opt.command}, {"seed", opt.seed}, {"version", dc::kVersion}};
    dc::Json grad = dc::Json::array();
    bool all_ok = true;
    for (int d = 1; d <= 5; ++d) {
        dc::Mollifier m(d);
        const double v = dc::grad_l1_norm(m);
        const bool ok = v <= 2.0 * d;
        all_ok = all_ok && ok;
        grad.push_back({{"d", d}, {"value", v}, {"bound", 2.0 * d}, {"holds", ok}});
    }
    j["grad_l1"] = grad;

    // Randomized sandwich batch mirroring the library test generator.
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    dc::Json sandwich = dc::Json::array();
    for (double c : {0.1, 0.3, 0.5}) {
        int pass = 0;
        const int trials = 6;
        for (int t = 0; t < trials; ++t) {
            const double center = -0.5 + unif(rng);
            const double width = 0.3 + 0.5 * unif(rng);
            const double amp = 0.5 + unif(rng);
            auto f = [=](const dc::Point& p) {
                const double z = (p[0] - center) / width;
                if (std::fabs(z) >= 1.0) return 0.0;
                return amp * std::exp(-1.0 / (1.0 - z * z));
            };
            const double omega = 1.0 + 3.0 * unif(rng);
            const double phase = 2.0 * M_PI * unif(rng);
            const double base = 0.2 + 0.3 * unif(rng);
            auto delta = [=](const dc::Point& p) {
                return base + (c / omega) * std::sin(omega * p[0] + phase);
            };
            auto res = dc::l1_sandwich_check(f, delta, c, 1,
                                             dc::Domain::interval(center - width, center + width),
                                             base + c / omega, 2048, 192);
            if (res.pass) ++pass;
        }
        sandwich.push_back({{"c", c}, {"trials", trials}, {"passed", pass}});
        all_ok = all_ok && pass == trials;
    }
    j["sandwich"] = sandwich;
    j["all_hold"] = all_ok;
    j["version"] = dc::kVersion;
    maybe_add_timings(j, opt, sw.ms());
    emit(opt, j);
    return 0;
}

int cmd_scaling_check(const Options& opt) {
    Stopwatch sw;
    const std::vector<std::pair<double, double>> cases{{2.0, 1.0}, {1.0, 2.0}, {3.0, 0.5}};
    dc::Json results = dc::Json::array();
    double worst = 0.0;

    for (const char* fam : {"uniform", "abs_eps"}) {
        std::map<std::string, double> params;
        if (std::string(fam) == "abs_eps") params["eps"] = 0.01;
        dc::Density rho = dc::builtin(fam, params);
        const double a0 = rho.domain().lo(0), b0 = rho.domain().hi(0);
        const double xhat = a0 + 0.37 * (b0 - a0);
        const dc::ExponentTriple exps = triple(opt);

        auto phi_at = [&](const dc::Density& r, double cut) {
            const double left = dc::mass(r, exps.alpha, r.domain().lo(0), cut);
            const double right = dc::mass(r, exps.alpha, cut, r.domain().hi(0));
            return std::pow(r(cut), exps.beta) / std::min(left, right);
        };
        // Smooth mean-zero-ish test function for the Rayleigh side.
        auto rayleigh_of = [&](const dc::Density& r, double ell) {
            auto u = [&](double x) { return std::cos(M_PI * (x / ell - a0) / (b0 - a0)); };
            auto du = [&](double x) {
                return -M_PI / ((b0 - a0) * ell) * std::sin(M_PI * (x / ell - a0) / (b0 - a0));
            };
            auto num = [&](double x) { return std::pow(r(x), exps.gamma) * du(x) * du(x); };
            auto den = [&](double x) { return std::pow(r(x), exps.alpha) * u(x) * u(x); };
            const double lo = r.domain().lo(0), hi = r.domain().hi(0);
            return dc::integrate_split(num, lo, hi, r.kinks(), {}) /
                   dc::integrate_split(den, lo, hi, r.kinks(), {});
        };

        const double phi0 = phi_at(rho, xhat);
        const double r0 = rayleigh_of(rho, 1.0);
        for (auto [ell, a] : cases) {
            dc::Density scaled = dc::scale(rho, ell, a);
            const double phi1 = phi_at(scaled, ell * xhat);
            const double r1 = rayleigh_of(scaled, ell);
            const double err_phi = std::fabs(phi0 - a * phi1) / std::fabs(phi0);
            const double err_r = std::fabs(r0 - a * a * r1) / std::fabs(r0);
            worst = std::max({worst, err_phi, err_r});
            results.push_back({{"family", fam},
                               {"ell", ell},
                               {"a", a},
                               {"phi_rel_err", err_phi},
                               {"rayleigh_rel_err", err_r}});
        }
    }

    dc::Json j;
    j["config"] = {{"command", opt.command}, {"abg", opt.abg}, {"version", dc::kVersion}};
    j["cases"] = results;
    j["max_rel_err"] = worst;
    j["pass"] = worst <= 1e-6;
    j["version"] = dc::kVersion;
    maybe_add_timings(j, opt, sw.ms());
    emit(opt, j);
    return 0;
}

// Orientation fraction: share of boundary edges that cross a vertical
// (axis='x') or horizontal (axis='y') line, i.e. connect adjacent columns
// (rows).
double orientation_fraction(const dc::Grid2D& grid, const dc::GridCut& cut, char axis) {
    if (cut.boundary_edges.empty()) return 0.0;
    int hits = 0;
    for (int e : cut.boundary_edges) {
        const auto& ed = grid.edges[e];
        const bool horizontal_edge = grid.row(ed.u) == grid.row(ed.v);
        if ((axis == 'x') == horizontal_edge) ++hits;
    }
    return static_cast<double>(hits) / cut.boundary_edges.size();
}

int cmd_counterexample(const Options& opt) {
    Stopwatch sw;
    dc::Json runs = dc::Json::array();

    for (double nval : opt.counterexample_n) {
        // Feasible shape family: box and valley floor shrink with n so the
        // (1,2)/(1,3) orientation split sharpens while the grid stays small.
        std::map<std::string, double> params = opt.density_params;
        params["n"] = nval;
        if (!params.count("X")) params["X"] = 8.0 / nval;
        if (!params.count("Y")) params["Y"] = 16.0 * std::sqrt(nval / 32.0) / nval;
        if (!params.count("eps")) params["eps"] = 0.0;
        dc::Density rho = dc::builtin("counterexample2d", params);
        const double h = params.count("h") ? params.at("h") : 4.0 / (nval * nval / 8.0);

        const dc::ExponentTriple e13{1.0, 2.0, 3.0};
        const dc::ExponentTriple e12{1.0, 2.0, 2.0};
        auto [cut13, rep13] = dc::algorithm1(rho, e13, h, opt.tol, opt.seed);
        auto [cut12, rep12] = dc::algorithm1(rho, e12, h, opt.tol, opt.seed);

        dc::Grid2D grid = dc::build_grid(rho, e13, h);
        const double frac13_x = orientation_fraction(grid, cut13, 'x');
        const double frac12_y = orientation_fraction(grid, cut12, 'y');
        const double phi12_of_13cut = cut13.phi;  // grid beta = 2 already
        const double phi12_of_12cut = dc::rescore_cut(rho, e13, h, cut12.members);

        runs.push_back({{"n", nval},
                        {"X", params["X"]},
                        {"Y", params["Y"]},
                        {"eps", params["eps"]},
                        {"h", h},
                        {"lambda2_13", rep13.lambda2},
                        {"lambda2_12", rep12.lambda2},
                        {"frac_13_crosses_x", frac13_x},
                        {"frac_12_crosses_y", frac12_y},
                        {"phi12_of_13_cut", phi12_of_13cut},
                        {"phi12_of_12_cut", phi12_of_12cut},
                        {"sparsity_ratio", phi12_of_12cut / phi12_of_13cut}});
    }

    dc::Json j;
    j["config"] = {{"command", opt.command},
                   {"n_values", opt.counterexample_n},
                   {"seed", opt.seed},
                   {"version", dc::kVersion}};
    j["runs"] = runs;
    if (runs.size() >= 2) {
        j["ratio_growth"] = runs.back()["sparsity_ratio"].get<double>() /
                            runs.front()["sparsity_ratio"].get<double>();
    }
    j["version"] = dc::kVersion;
    maybe_add_timings(j, opt, sw.ms());
    emit(opt, j);
    return 0;
}

void load_config(Options& opt, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw dc::JobConfigError("cannot open config " + path);
    dc::Json cfg;
    try {
        in >> cfg;
    } catch (const std::exception& e) {
        throw dc::JobConfigError(std::string("config parse error: ") + e.what());
    }
    for (auto& [key, value] : cfg.items()) {
        if (key == "command") opt.command = value.get<std::string>();
        else if (key == "density") {
            if (value.contains("family")) opt.density_name = value["family"].get<std::string>();
            if (value.contains("file")) opt.density_file = value["file"].get<std::string>();
            if (value.contains("params"))
                for (auto& [pk, pv] : value["params"].items())
                    opt.density_params[pk] = pv.get<double>();
        } else if (key == "abg") opt.abg = value.get<std::vector<double>>();
        else if (key == "h") opt.h = value.get<double>();
        else if (key == "tol") opt.tol = value.get<double>();
        else if (key == "seed") opt.seed = value.get<std::uint64_t>();
        else if (key == "out") opt.out_dir = value.get<std::string>();
        else if (key == "sweep_eps") opt.sweep_eps = value.get<std::vector<double>>();
        else if (key == "max_rounds") opt.max_rounds = value.get<int>();
        else if (key == "mesh") opt.mesh = value.get<int>();
        else if (key == "candidates") opt.candidates = value.get<int>();
        else if (key == "points") opt.points_file = value.get<std::string>();
        else if (key == "timings") opt.timings = value.get<bool>();
        else throw dc::JobConfigError("unknown config key: " + key);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"densitycut: sparse cuts and principal eigenfunctions of densities"};
    app.require_subcommand(1);

    Options opt;
    std::string config_path;
    double eps = -1.0, nparam = -1.0, noise = -1.0, Xparam = -1.0, Yparam = -1.0;
    double value = -1.0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON job config (flags override)");
        sub->add_option("--density", opt.density_name, "density family");
        sub->add_option("--file", opt.density_file, "tabulated density file");
        sub->add_option("--eps", eps, "family parameter eps");
        sub->add_option("--n", nparam, "family parameter n");
        sub->add_option("--noise", noise, "family parameter noise");
        sub->add_option("--X", Xparam, "counterexample box half-width");
        sub->add_option("--Y", Yparam, "counterexample box half-height");
        sub->add_option("--value", value, "uniform family value");
        sub->add_option("--abg", opt.abg, "alpha beta gamma")->expected(3);
        sub->add_option("--h", opt.h, "grid size");
        sub->add_option("--tol", opt.tol, "solver tolerance");
        sub->add_option("--seed", opt.seed, "random seed");
        sub->add_option("--out", opt.out_dir, "output directory");
        sub->add_option("--mesh", opt.mesh, "1D FEM mesh size");
        sub->add_option("--candidates", opt.candidates, "1D sweep candidates");
        sub->add_option("--max-rounds", opt.max_rounds, "iteration cap");
        sub->add_flag("--timings", opt.timings, "include timings in the report");
        return sub;
    };

    auto* analyze1d = add_common(app.add_subcommand("analyze1d", "1D sweep, eigenvalue, witness"));
    auto* partition2d = add_common(app.add_subcommand("partition2d", "single 2D spectral cut"));
    auto* iterate2d = add_common(app.add_subcommand("iterate2d", "iterated 2D cuts"));
    auto* cluster = add_common(app.add_subcommand("cluster", "two-way point clustering"));
    cluster->add_option("--points", opt.points_file, "input CSV, one point per row");
    auto* verify = add_common(app.add_subcommand("verify", "inequality flags for a density"));
    verify->add_option("--sweep-eps", opt.sweep_eps, "fan out over eps values");
    auto* mollify_check = add_common(app.add_subcommand("mollify-check", "mollifier bounds"));
    auto* scaling_check = add_common(app.add_subcommand("scaling-check", "scaling identities"));
    auto* counterexample =
        add_common(app.add_subcommand("counterexample", "orientation flip demo"));
    counterexample->add_option("--n-values", opt.counterexample_n, "two or more n values");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) load_config(opt, config_path);
        if (eps >= 0.0) opt.density_params["eps"] = eps;
        if (nparam >= 0.0) opt.density_params["n"] = nparam;
        if (noise >= 0.0) opt.density_params["noise"] = noise;
        if (Xparam > 0.0) opt.density_params["X"] = Xparam;
        if (Yparam > 0.0) opt.density_params["Y"] = Yparam;
        if (value >= 0.0) opt.density_params["value"] = value;

        if (analyze1d->parsed()) return opt.command = "analyze1d", cmd_analyze1d(opt);
        if (partition2d->parsed()) return opt.command = "partition2d", cmd_partition2d(opt);
        if (iterate2d->parsed()) return opt.command = "iterate2d", cmd_iterate2d(opt);
        if (cluster->parsed()) return opt.command = "cluster", cmd_cluster(opt);
        if (verify->parsed()) return opt.command = "verify", cmd_verify(opt);
        if (mollify_check->parsed()) return opt.command = "mollify-check", cmd_mollify_check(opt);
        if (scaling_check->parsed()) return opt.command = "scaling-check", cmd_scaling_check(opt);
        if (counterexample->parsed())
            return opt.command = "counterexample", cmd_counterexample(opt);
    } catch (const dc::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const dc::SolverError& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
