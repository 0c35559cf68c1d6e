#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace exls {

/// Outcome of one verification run.
struct VerifyReport {
    struct Failure {
        std::string inputs, expected, got;
    };

    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    long attempted = 0;
    long passed = 0;
    std::vector<Failure> failures;
    bool inconclusive = false;
    std::string note;
    double seconds = 0;

    explicit VerifyReport(std::string id = "") : check(std::move(id)) {}

    void param(const std::string &k, const std::string &v) { params.emplace_back(k, v); }
    void param(const std::string &k, long v) { param(k, std::to_string(v)); }
    /// Counts one instance; failures keep at most 20 witnesses.
    void record(bool ok, const std::string &inputs, const std::string &expected = "", const std::string &got = "");
    long failed() const { return attempted - passed; }
    bool ok() const { return failed() == 0 && !inconclusive; }
    /// Adds counts and witnesses of a sub-check.
    void absorb(const VerifyReport &o);

    std::string to_json(int indent = 2) const;
    std::string human() const;
};

/// Sets `seconds` on destruction.
class ReportTimer {
public:
    explicit ReportTimer(VerifyReport &r) : r_(r), start_(std::chrono::steady_clock::now()) {}
    ~ReportTimer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

private:
    VerifyReport &r_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace exls
