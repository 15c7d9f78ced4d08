#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "densitycut/sweepcut.hpp"

namespace densitycut {

inline constexpr const char* kVersion = "0.1.0";

// Reports use ordered JSON so identical runs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json flags_to_json(const InequalityFlags& flags);

// Stable report schema:
// {config, phi, lambda2, threshold, cheeger:{lhs,rhs,holds},
//  buser:{lhs,rhs,holds,constant_variant}, residual, version[, timings_ms]}
Json cut_report_to_json(const CutReport& rep, const Json& config);

// P2 ASCII mask, one pixel per grid cell: 0 on side A, 255 on the complement.
void write_pgm_mask(const Grid2D& grid, const std::vector<int>& members,
                    std::ostream& out);

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace densitycut
