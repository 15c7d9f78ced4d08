#include "densitycut/report.hpp"

#include <ostream>

namespace densitycut {

Json flags_to_json(const InequalityFlags& flags) {
    Json j;
    j["cheeger"] = {{"lhs", flags.cheeger_lhs},
                    {"rhs", flags.cheeger_rhs},
                    {"holds", flags.cheeger_holds}};
    j["buser"] = {{"lhs", flags.buser_lhs},
                  {"rhs", flags.buser_rhs},
                  {"holds", flags.buser_holds},
                  {"constant_variant", flags.constant_variant},
                  {"rhs_variant8", flags.buser_rhs_variant8},
                  {"holds_variant8", flags.buser_holds_variant8}};
    j["slack"] = flags.slack;
    return j;
}

Json cut_report_to_json(const CutReport& rep, const Json& config) {
    Json j;
    j["config"] = config;
    j["phi"] = rep.phi_sweep;
    j["lambda2"] = rep.lambda2;
    j["threshold"] = rep.threshold;
    Json f = flags_to_json(rep.flags);
    j["cheeger"] = f["cheeger"];
    j["buser"] = f["buser"];
    j["slack"] = f["slack"];
    j["residual"] = rep.residual;
    j["iterations"] = rep.iterations;
    j["lipschitz_L"] = rep.lipschitz_L;
    j["dim"] = rep.dim;
    j["cut_cell_count"] = rep.cut_cells.size();
    j["version"] = kVersion;
    return j;
}

void write_pgm_mask(const Grid2D& grid, const std::vector<int>& members,
                    std::ostream& out) {
    std::vector<char> in_a(grid.nv(), 0);
    for (int v : members) in_a[v] = 1;
    out << "P2\n" << (grid.n + 1) << ' ' << (grid.m + 1) << "\n255\n";
    for (int j = grid.m; j >= 0; --j) {
        for (int i = 0; i <= grid.n; ++i) {
            out << (in_a[grid.index(i, j)] ? 0 : 255);
            out << (i == grid.n ? '\n' : ' ');
        }
    }
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    for (std::size_t k = 0; k < header.size(); ++k)
        out << header[k] << (k + 1 == header.size() ? '\n' : ',');
    out.precision(17);
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k)
            out << row[k] << (k + 1 == row.size() ? '\n' : ',');
    }
}

}  // namespace densitycut
