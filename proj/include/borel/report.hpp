#pragma once

#include <functional>
#include <string>
#include <vector>

#include "borel/ideal.hpp"
#include "borel/json_io.hpp"

namespace borel {

enum class CheckStatus { Pass, Fail, Skipped, Capped };
std::string status_name(CheckStatus s);

struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    json witness;       // reproduction data; mandatory for failures
    double seconds = 0; // reported outside the deterministic body
};

struct RunConfig {
    std::string command;
    int n = 0;
    uint64_t seed = 1;
    int trials = 25;
    GroebnerCaps caps;
    std::string format = "json"; // json | text
    std::string output;          // empty = stdout
    json extra;                  // command-specific flag echo

    /// Echo of the semantic fields (format/output are presentation, left out).
    json to_json() const;
};

/// Outcome of a verification run. Records are kept sorted by check name so
/// reports do not depend on completion order; duplicate names are refused.
/// Exit code: 0 all pass (skips allowed), 1 some check failed, 3 nothing
/// failed but a cap was hit. Usage errors exit 2 before any report exists.
/// Per-check seconds live in a separate "timing" section so the rest of the
/// JSON body is byte-deterministic for equal configs.
class Report {
public:
    explicit Report(RunConfig config) : config_(std::move(config)) {}

    void add(CheckRecord rec);
    const std::vector<CheckRecord>& checks() const { return checks_; }
    const RunConfig& config() const { return config_; }

    int count(CheckStatus s) const;
    int exit_code() const;

    json to_json() const;
    /// "json" (pretty, trailing newline) or "text" (one line per check).
    std::string render(const std::string& format) const;

private:
    RunConfig config_;
    std::vector<CheckRecord> checks_;
};

/// Runs body with timing; a CapExceededError becomes a capped record and any
/// other toolkit error a failing record carrying the message as witness.
CheckRecord timed_check(const std::string& name, const std::function<CheckRecord()>& body);

} // namespace borel
