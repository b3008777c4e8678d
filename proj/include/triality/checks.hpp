#pragma once

// Registry of named verification checks shared by the CLI, the concordance
// generator and the acceptance tests.

#include "triality/random.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace triality {

struct CheckContext {
    std::uint64_t seed = 0;
    int trials = 100;

    /// Generator private to one check, so results do not depend on scheduling.
    Rng rng(const std::string& check_name) const;
};

struct CheckOutcome {
    bool pass = false;
    std::string detail;
};

struct CheckSpec {
    std::string name;
    std::string suite;
    std::string module;
    std::string operation;
    std::function<CheckOutcome(const CheckContext&)> run;
};

enum class CheckStatus { pass, fail, error };
const char* to_string(CheckStatus s);

struct CheckReport {
    std::string check_name;
    std::string location;
    CheckStatus status = CheckStatus::error;
    std::string detail;
    double elapsed_ms = 0;
};

const std::vector<CheckSpec>& check_registry();
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

/// Runs every check whose suite matches (`all` matches everything), possibly
/// concurrently; reports come back in registration order.
std::vector<CheckReport> run_checks(const std::string& suite, const CheckContext& ctx, bool parallel = true);

}  // namespace triality
