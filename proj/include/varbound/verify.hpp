#ifndef VARBOUND_VERIFY_HPP
#define VARBOUND_VERIFY_HPP

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace varbound {

struct CheckResult {
    std::string id;
    int pass = 0;
    int fail = 0;
    double worst_slack = 0.0;
    /// first failing location, else the location of the worst slack
    std::optional<std::string> witness;
};

struct VerifyOptions {
    std::string suite = "all";  // scalar | norms | radii | commutator | all
    int trials = 100;
    int dim_max = 8;
    std::uint64_t seed = 0;
    /// slack for the plain inequality checks; checks with their own pinned tolerance keep it
    double tol = 1e-9;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;
    long long elapsed_ms = 0;

    int failures() const;
    bool ok() const { return failures() == 0; }
    nlohmann::json to_json() const;
};

std::vector<std::string> verify_suites();

/// Runs the property suite(s); each check records exactly one outcome per trial.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace varbound

#endif
