#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace x13e8 {

enum class CheckStatus { pass, fail, error };
enum class CheckMethod { symbolic, schwartz_zippel, qseries, numeric };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::error: return "error";
    }
    return "?";
}
inline const char* to_string(CheckMethod m) {
    switch (m) {
        case CheckMethod::symbolic: return "symbolic";
        case CheckMethod::schwartz_zippel: return "schwartz_zippel";
        case CheckMethod::qseries: return "qseries";
        case CheckMethod::numeric: return "numeric";
    }
    return "?";
}

/// Outcome record of one named check. A check passes only if every
/// assertion held; failures carry at least one concrete counter-datum in
/// the details.
struct CheckResult {
    std::string name;
    CheckMethod method = CheckMethod::symbolic;
    CheckStatus status = CheckStatus::pass;
    std::vector<std::pair<std::string, std::string>> details;
    double elapsed_ms = 0.0;
    std::optional<long> seed;

    void note(const std::string& key, const std::string& value) { details.emplace_back(key, value); }

    /// Record an assertion; on failure flips the status and keeps the datum.
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            status = CheckStatus::fail;
            details.emplace_back("FAILED", what);
        }
    }
};

struct VerifyConfig {
    long order = 30;
    long seed = 42;
    std::string suite = "all";
    double tolerance = 1e-9;
    bool heavy_symbolic = false;
};

struct Report {
    std::string suite;
    VerifyConfig config;
    std::vector<CheckResult> results;

    bool all_passed() const {
        for (const auto& r : results)
            if (r.status != CheckStatus::pass) return false;
        return true;
    }
    bool any_error() const {
        for (const auto& r : results)
            if (r.status == CheckStatus::error) return true;
        return false;
    }
};

inline nlohmann::ordered_json report_to_json(const Report& rep, bool include_elapsed = true) {
    nlohmann::ordered_json j;
    j["suite"] = rep.suite;
    j["config"] = {{"order", rep.config.order}, {"seed", rep.config.seed}, {"tolerance", rep.config.tolerance}};
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : rep.results) {
        nlohmann::ordered_json jr;
        jr["name"] = r.name;
        jr["method"] = to_string(r.method);
        jr["status"] = to_string(r.status);
        nlohmann::ordered_json det = nlohmann::ordered_json::array();
        for (const auto& [k, v] : r.details) det.push_back({{"key", k}, {"value", v}});
        jr["details"] = det;
        if (include_elapsed) jr["elapsed_ms"] = r.elapsed_ms;
        if (r.seed) jr["seed"] = *r.seed;
        j["results"].push_back(jr);
    }
    return j;
}

inline std::string report_to_text(const Report& rep) {
    std::ostringstream os;
    os << "suite: " << rep.suite << "  (order " << rep.config.order << ", seed " << rep.config.seed << ", tolerance "
       << rep.config.tolerance << ")\n";
    for (const auto& r : rep.results) {
        os << "  [" << to_string(r.status) << "] " << r.name << " (" << to_string(r.method) << ", " << r.elapsed_ms
           << " ms)\n";
        for (const auto& [k, v] : r.details) os << "      " << k << ": " << v << "\n";
    }
    os << (rep.all_passed() ? "ALL CHECKS PASSED" : "CHECKS FAILED") << "\n";
    return os.str();
}

}  // namespace x13e8
