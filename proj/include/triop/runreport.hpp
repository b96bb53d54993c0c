#pragma once

#include <string>
#include <vector>

namespace triop {

enum class RunStatus { Pass, Fail, Finding };

struct RunItem {
    std::string name;
    RunStatus status = RunStatus::Pass;
    std::string residual_summary;  // empty on pass
    long long duration_millis = 0;
};

// Report for one CLI command. Overall status is fail if any item fails,
// otherwise finding if any item is a finding, otherwise pass. Findings mark
// expected-discrepancy results (reference-table defects, grid anomalies)
// distinctly from hard failures.
struct RunReport {
    std::string command;
    std::vector<RunItem> items;
    std::vector<std::string> notes;
    long d = 3;
    std::string version;
    unsigned long long seed = 0;

    RunStatus status() const;
    // 0 pass, 1 failures, 3 findings only (2 is reserved for input errors)
    int exit_code() const;

    void add(std::string name, RunStatus status, std::string summary = "",
             long long millis = 0);
};

extern const char* kVersion;

// Deterministic rendering: items in insertion order, no timing output unless
// with_timings is set.
std::string render_text(const RunReport& report, bool with_timings = false);
std::string render_json(const RunReport& report, bool with_timings = false);

}  // namespace triop
