#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace tkk {

using ReportJson = nlohmann::ordered_json;

enum class Status { pass, fail, skipped };
std::string status_name(Status s);

/// One executable check inside a claim. Checks above the tier budget are recorded as skipped.
struct CheckResult {
    std::string name;
    int tier = 0;
    Status status = Status::skipped;
    ReportJson witness;  ///< dimensions, type labels and index values needed to re-verify the check
};

struct ClaimResult {
    std::string id;
    std::string title;
    int tier = 0;
    Status status = Status::skipped;
    std::vector<CheckResult> checks;
    double runtime_seconds = 0;  ///< wall time; not part of emitted reports
};

struct RunOptions {
    int tier_budget = 0;
    std::uint64_t seed = 0;
};

class ClaimRun;

struct Claim {
    std::string id;
    std::string title;
    std::string anchor;  ///< the statement the claim checks, in the tool's own words
    int tier = 0;        ///< lowest budget at which the claim runs
    std::function<void(ClaimRun&)> procedure;
};

/// Collects check results for one claim under a tier budget.
class ClaimRun {
public:
    explicit ClaimRun(const RunOptions& opts) : opts_(opts) {}
    const RunOptions& options() const { return opts_; }
    /// Runs body (returning pass/fail and filling the witness) unless tier exceeds the budget.
    /// Exceptions become failures with the message in the witness.
    void check(const std::string& name, int tier, const std::function<bool(ReportJson&)>& body);
    std::vector<CheckResult> take() { return std::move(checks_); }

private:
    RunOptions opts_;
    std::vector<CheckResult> checks_;
};

/// Full registry C1..C10 in numeric order.
const std::vector<Claim>& list_claims();
/// Claims of exactly the given tier.
std::vector<Claim> list_claims(int tier);
/// Claims whose id matches; unknown ids give an empty list.
std::vector<Claim> list_claims(const std::string& id);

/// Runs one claim. Throws std::invalid_argument for an unknown id.
ClaimResult run_claim(const std::string& id, const RunOptions& opts);

enum class ReportFormat { json, text };
/// Report with results sorted by numeric claim id, rationals as "n/d" strings, runtimes omitted.
std::string emit_report(std::vector<ClaimResult> results, ReportFormat format, int tier_budget);

extern const char* const tool_version;

}  // namespace tkk
