/**
 * @file report.hpp
 * @brief Verification records and report emission (JSON / markdown).
 */
#pragma once

#include <chrono>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace oddcat {

inline constexpr const char* kReportSchemaVersion = "1";

struct VerificationRecord {
    std::string suite;
    std::string check;
    std::string citation;  // source pointer or "plumbing"
    std::map<std::string, int> params;
    bool skipped = false;
    bool passed = false;
    std::string witness;  // counterexample term or certificate summary
    double wall_seconds = 0.0;

    std::string status() const { return skipped ? "skipped" : passed ? "pass" : "fail"; }
};

class RecordSink {
public:
    void add(VerificationRecord r) { records_.push_back(std::move(r)); }
    void merge(std::vector<VerificationRecord> rs) {
        for (auto& r : rs) records_.push_back(std::move(r));
    }
    const std::vector<VerificationRecord>& records() const { return records_; }
    bool all_passed() const {
        for (const auto& r : records_)
            if (!r.skipped && !r.passed) return false;
        return true;
    }

private:
    std::vector<VerificationRecord> records_;
};

/** Stopwatch helper for record timing. */
class Timed {
public:
    Timed() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline nlohmann::json report_json(const std::vector<VerificationRecord>& records,
                                  bool include_timing = true) {
    nlohmann::json out;
    out["schema_version"] = kReportSchemaVersion;
    out["records"] = nlohmann::json::array();
    // deterministic ordering: by (suite, check, params)
    std::vector<const VerificationRecord*> sorted;
    for (const auto& r : records) sorted.push_back(&r);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const VerificationRecord* a, const VerificationRecord* b) {
                         if (a->suite != b->suite) return a->suite < b->suite;
                         if (a->check != b->check) return a->check < b->check;
                         return a->params < b->params;
                     });
    int passed = 0, failed = 0, skipped = 0;
    for (const auto* r : sorted) {
        nlohmann::json j;
        j["suite"] = r->suite;
        j["check"] = r->check;
        j["citation"] = r->citation;
        j["params"] = r->params;
        j["status"] = r->status();
        if (!r->witness.empty()) j["witness"] = r->witness;
        if (include_timing) j["wall_seconds"] = r->wall_seconds;
        out["records"].push_back(std::move(j));
        if (r->skipped) ++skipped;
        else if (r->passed) ++passed;
        else ++failed;
    }
    out["summary"] = {{"passed", passed}, {"failed", failed}, {"skipped", skipped}};
    return out;
}

inline std::string report_markdown(const std::vector<VerificationRecord>& records) {
    std::map<std::string, std::vector<const VerificationRecord*>> by_suite;
    for (const auto& r : records) by_suite[r.suite].push_back(&r);
    std::ostringstream os;
    os << "# Verification report\n\n";
    int passed = 0, failed = 0, skipped = 0;
    for (const auto& r : records) {
        if (r.skipped) ++skipped;
        else if (r.passed) ++passed;
        else ++failed;
    }
    os << "**" << passed << " passed, " << failed << " failed, " << skipped
       << " skipped.**\n";
    for (const auto& [suite, rs] : by_suite) {
        os << "\n## " << suite << "\n\n";
        os << "| check | source | params | status | witness |\n";
        os << "|---|---|---|---|---|\n";
        for (const auto* r : rs) {
            os << "| " << r->check << " | " << r->citation << " | ";
            bool first = true;
            for (const auto& [k, v] : r->params) {
                if (!first) os << ", ";
                os << k << "=" << v;
                first = false;
            }
            os << " | " << r->status() << " | " << r->witness << " |\n";
        }
    }
    return os.str();
}

inline void write_report_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open report file for writing: " + path);
    f << content;
    if (!f.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace oddcat
