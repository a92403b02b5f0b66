#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sextic/gridrun.hpp"
#include "sextic/kernel.hpp"

namespace sextic {

enum class EntryStatus { pass, fail, report_only };

struct ResidualEntry {
    std::string id;
    BigReal r;
    BigReal residual;   // scale-relative where the identity has a scale
    BigReal tolerance;  // 0 for report-only entries
    EntryStatus status;
};

struct ResidualReport {
    std::string suite;
    int digits = 0;
    std::vector<BigReal> grid;
    std::vector<ResidualEntry> entries;
    bool all_passed() const;
    std::vector<const ResidualEntry*> failures() const;
};

/// Asserted identities evaluated on a grid of r values: the RRCF product
/// link, the period-ratio definition of k_r, the modulus-pair form of A_r,
/// the A-j cubic, the modulus form of j, the fifth-degree modular equation,
/// the duplication cubic, the RRCF derivative identity (finite-difference
/// tolerance), and the fifth-base bridge.
ResidualReport identity_suite(const std::vector<BigReal>& grid, const PrecCtx& ctx,
                              RunMode mode = RunMode::parallel);

/// Closed-form Y values (asserted) plus report-only residuals for the
/// conjectural relations (the Y product law and the N(q) doubling/tripling
/// and X doubling relations) on the grid.
ResidualReport conjecture_suite(const std::vector<BigReal>& grid, const PrecCtx& ctx,
                                RunMode mode = RunMode::parallel);

nlohmann::ordered_json report_to_json(const ResidualReport& report);

}  // namespace sextic
