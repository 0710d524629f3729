#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace newtoncomm {

struct AcceptanceOptions {
    std::uint64_t seed = 20240917;
    /// Perturbs the T_{m-2k} multiplier so the obstruction criterion must fail.
    bool inject_pm_fault = false;
};

struct CriterionResult {
    std::string id;     ///< e.g. "ac1_rank_one_certificate"
    std::string title;
    bool passed = false;
    double seconds = 0;
    double time_limit = 0;
    std::string detail;
};

/// The seven acceptance criteria, in order. A criterion also fails when it exceeds
/// its time limit or throws.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

nlohmann::json acceptance_json(const std::vector<CriterionResult>& results, const AcceptanceOptions& options);

} // namespace newtoncomm
