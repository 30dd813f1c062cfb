#pragma once
// Randomized property suites shared by the CLI `verify` command.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace tate {

struct VerifyOptions {
    std::uint64_t seed = 0;
    int cases = 20;
    /// Series coefficients used when inverting automorphisms.
    int precision = 16;
};

struct CheckTally {
    long passed = 0;
    long failed = 0;
};

struct VerifyFailure {
    int case_id = 0;
    std::string check;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::map<std::string, CheckTally> checks;
    std::vector<VerifyFailure> failures;

    bool all_pass() const { return failures.empty(); }
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<SuiteResult> suites;

    bool all_pass() const;
    /// Keys sorted; identical for identical options.
    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// lattice, index, family, detline, simplicial.
const std::vector<std::string>& suite_names();

/// `suite` is one of suite_names() or "all"; ParseError otherwise.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& options);

}  // namespace tate
