#include "triop/runreport.hpp"

#include <json.hpp>

namespace triop {

const char* kVersion = "0.1.0";

namespace {
const char* status_name(RunStatus s) {
    switch (s) {
        case RunStatus::Pass: return "pass";
        case RunStatus::Fail: return "FAIL";
        case RunStatus::Finding: return "finding";
    }
    return "?";
}
}  // namespace

RunStatus RunReport::status() const {
    bool finding = false;
    for (const auto& item : items) {
        if (item.status == RunStatus::Fail) return RunStatus::Fail;
        if (item.status == RunStatus::Finding) finding = true;
    }
    return finding ? RunStatus::Finding : RunStatus::Pass;
}

int RunReport::exit_code() const {
    switch (status()) {
        case RunStatus::Pass: return 0;
        case RunStatus::Fail: return 1;
        case RunStatus::Finding: return 3;
    }
    return 1;
}

void RunReport::add(std::string name, RunStatus status, std::string summary, long long millis) {
    items.push_back({std::move(name), status, std::move(summary), millis});
}

std::string render_text(const RunReport& report, bool with_timings) {
    std::string out = "triop " + report.command + " (d=" + std::to_string(report.d) +
                      ", version " + report.version + ", seed " + std::to_string(report.seed) +
                      ")\n";
    int pass = 0, fail = 0, findings = 0;
    for (const auto& item : report.items) {
        out += "  [" + std::string(status_name(item.status)) + "] " + item.name;
        if (with_timings) out += " (" + std::to_string(item.duration_millis) + " ms)";
        if (!item.residual_summary.empty()) out += ": " + item.residual_summary;
        out += "\n";
        if (item.status == RunStatus::Pass) ++pass;
        if (item.status == RunStatus::Fail) ++fail;
        if (item.status == RunStatus::Finding) ++findings;
    }
    for (const auto& n : report.notes) out += "  note: " + n + "\n";
    out += std::to_string(report.items.size()) + " item(s): " + std::to_string(pass) +
           " pass, " + std::to_string(fail) + " fail, " + std::to_string(findings) +
           " finding(s); status " + status_name(report.status()) + "\n";
    return out;
}

std::string render_json(const RunReport& report, bool with_timings) {
    nlohmann::json doc;
    doc["command"] = report.command;
    doc["status"] = status_name(report.status());
    doc["metadata"] = {{"d", report.d}, {"version", report.version}, {"seed", report.seed}};
    nlohmann::json items = nlohmann::json::array();
    for (const auto& item : report.items) {
        nlohmann::json j;
        j["name"] = item.name;
        j["status"] = status_name(item.status);
        j["residualSummary"] = item.residual_summary;
        if (with_timings) j["durationMillis"] = item.duration_millis;
        items.push_back(j);
    }
    doc["items"] = items;
    if (!report.notes.empty()) doc["notes"] = report.notes;
    return doc.dump(2) + "\n";
}

}  // namespace triop
