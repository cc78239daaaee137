#pragma once

// Check records and reports shared by the CLI, the acceptance suite and the
// Python module.
//
// Report JSON (schema "dcrit.report/1"):
//   {"tool": "dcrit", "version": "...", "schema": "dcrit.report/1",
//    "config": {"n": 2, "prime": 2147483647, "seed": 1, "samples": 20},
//    "checks": [{"name": ..., "operation": ..., "claim": ..., "verdict":
//                "pass" | "fail" | "warning", "seconds": ..., "details": {...},
//                "counterexample": {...} | null}],
//    "summary": {"pass": k, "fail": k, "warning": k}}

#include "dcrit/moduli_points.hpp"
#include "dcrit/toric.hpp"

#include "json.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dcrit {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "dcrit.report/1";

enum class CheckVerdict { pass, fail, warning };
const char* verdict_name(CheckVerdict v);

struct CheckRecord {
    std::string name;
    std::string operation;  // module operation that produced the verdict
    std::string claim;      // the statement being checked
    CheckVerdict verdict = CheckVerdict::fail;
    double seconds = 0;
    nlohmann::json details = nlohmann::json::object();
    nlohmann::json counterexample;  // null unless failed
};

struct RunConfig {
    int n = 2;
    std::uint64_t prime = 2147483647;
    std::uint64_t seed = 1;
    int samples = 20;
};

struct Report {
    RunConfig config;
    std::vector<CheckRecord> checks;

    bool all_passed() const;
    void append(const Report& other);
    nlohmann::json to_json(bool with_timing = true) const;
    std::string to_text(bool with_timing = true) const;
};

/// Runs `body`, timing it and turning an exception into a failed record.
CheckRecord timed_check(std::string name, std::string operation, std::string claim,
                        const std::function<void(CheckRecord&)>& body);

// One runner per subcommand.
Report verify_cdga(const RunConfig& cfg);
Report verify_superpotential(const RunConfig& cfg);
Report verify_family(const RunConfig& cfg);
Report verify_resolution(const RunConfig& cfg);
Report verify_chainmap(const RunConfig& cfg);
/// Ext dims of L against the Koszul oracle on the partition points of size
/// <= cfg.n plus cfg.samples random conjugates.
Report ext_report(const RunConfig& cfg);
/// Same, on an explicit list of points.
Report ext_report(const RunConfig& cfg, const std::vector<MatrixPoint>& points, const std::string& label);
Report partitions_report(const RunConfig& cfg);
Report toric_chart_report(const RunConfig& cfg, const SurfaceSpec& surface, const std::vector<CoxPoint>& points);
/// cfg.samples trials per surface (at least 1) of 4 points each.
Report toric_cover_report(const RunConfig& cfg, const std::vector<SurfaceSpec>& surfaces);
/// The standard surfaces: P2, F0, F2 and P2 blown up at cones 0 then 1.
std::vector<SurfaceSpec> standard_surfaces();
Report run_all(const RunConfig& cfg);

}  // namespace dcrit
