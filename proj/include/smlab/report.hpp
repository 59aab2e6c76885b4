#pragma once
// Deterministic serialization of theorem-suite reports (JSON and text).

#include "smlab/theorems.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace smlab {

using ordered_json = nlohmann::ordered_json;

inline const char* status_name(CheckReport::Status s) {
    switch (s) {
        case CheckReport::Status::pass: return "pass";
        case CheckReport::Status::fail: return "fail";
        default: return "skipped";
    }
}

inline ordered_json report_to_json(const CheckReport& r) {
    ordered_json j;
    j["theorem"] = r.theorem;
    j["instances_scanned"] = r.instances_scanned;
    j["hypothesis_satisfied"] = r.hypothesis_satisfied;
    j["vacuous"] = r.vacuous;
    j["status"] = status_name(r.status);
    j["witness"] = r.status == CheckReport::Status::skipped && !r.skip_reason.empty()
                       ? "# skipped: " + r.skip_reason
                       : r.witness;
    j["wall_time_ms"] = r.wall_time_ms;
    j["seed"] = r.seed;
    return j;
}

/// Full suite report: per-theorem objects plus a summary section.  The
/// summary lists every check whose hypotheses were never satisfied on the
/// catalog so vacuous passes are visible at a glance.
inline ordered_json reports_to_json(const std::vector<CheckReport>& reports,
                                    std::uint64_t seed) {
    ordered_json j;
    j["reports"] = ordered_json::array();
    bool all_pass = true;
    std::vector<std::string> wholly_vacuous;
    for (const CheckReport& r : reports) {
        j["reports"].push_back(report_to_json(r));
        if (r.status != CheckReport::Status::pass) all_pass = false;
        if (r.hypothesis_satisfied == 0) wholly_vacuous.push_back(r.theorem);
    }
    ordered_json summary;
    summary["total"] = reports.size();
    summary["all_pass"] = all_pass;
    summary["wholly_vacuous"] = wholly_vacuous;
    summary["seed"] = seed;
    j["summary"] = summary;
    return j;
}

inline std::string reports_to_text(const std::vector<CheckReport>& reports,
                                   std::uint64_t seed) {
    std::string out;
    char buf[256];
    bool all_pass = true;
    std::vector<std::string> wholly_vacuous;
    for (const CheckReport& r : reports) {
        std::snprintf(buf, sizeof(buf), "%-24s %-7s scanned=%-6lld hyp=%-6lld vacuous=%-6lld\n",
                      r.theorem.c_str(), status_name(r.status),
                      (long long)r.instances_scanned, (long long)r.hypothesis_satisfied,
                      (long long)r.vacuous);
        out += buf;
        if (r.status == CheckReport::Status::fail && !r.witness.empty()) {
            out += "  witness (replayable workspace fragment):\n";
            std::size_t pos = 0;
            while (pos < r.witness.size()) {
                std::size_t nl = r.witness.find('\n', pos);
                if (nl == std::string::npos) nl = r.witness.size();
                out += "    " + r.witness.substr(pos, nl - pos) + "\n";
                pos = nl + 1;
            }
        }
        if (r.status != CheckReport::Status::pass) all_pass = false;
        if (r.hypothesis_satisfied == 0) wholly_vacuous.push_back(r.theorem);
    }
    std::snprintf(buf, sizeof(buf), "summary: total=%zu all_pass=%s seed=%llu\n",
                  reports.size(), all_pass ? "true" : "false",
                  (unsigned long long)seed);
    out += buf;
    out += "wholly_vacuous:";
    if (wholly_vacuous.empty()) out += " none";
    for (const std::string& id : wholly_vacuous) out += " " + id;
    out += "\n";
    return out;
}

}  // namespace smlab
