#include "exls/report.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>

namespace exls {

namespace {
constexpr std::size_t kMaxWitnesses = 20;
}

void VerifyReport::record(bool ok, const std::string &inputs, const std::string &expected, const std::string &got) {
    ++attempted;
    if (ok) {
        ++passed;
    } else if (failures.size() < kMaxWitnesses) {
        failures.push_back({inputs, expected, got});
    }
}

void VerifyReport::absorb(const VerifyReport &o) {
    attempted += o.attempted;
    passed += o.passed;
    inconclusive = inconclusive || o.inconclusive;
    for (const auto &f : o.failures)
        if (failures.size() < kMaxWitnesses) failures.push_back({o.check + ": " + f.inputs, f.expected, f.got});
}

std::string VerifyReport::to_json(int indent) const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto &[k, v] : params) j["params"][k] = v;
    j["attempted"] = attempted;
    j["passed"] = passed;
    j["failed"] = failed();
    j["inconclusive"] = inconclusive;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto &f : failures) j["failures"].push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
    if (!note.empty()) j["note"] = note;
    j["seconds"] = seconds;
    return j.dump(indent);
}

std::string VerifyReport::human() const {
    std::ostringstream os;
    os << check << ": " << passed << "/" << attempted << " passed";
    if (inconclusive) os << " (inconclusive)";
    os << std::fixed << std::setprecision(2) << " in " << seconds << "s";
    if (!params.empty()) {
        os << " [";
        for (std::size_t i = 0; i < params.size(); ++i) os << (i ? ", " : "") << params[i].first << "=" << params[i].second;
        os << "]";
    }
    os << "\n";
    if (!note.empty()) os << "  " << note << "\n";
    for (const auto &f : failures) {
        os << "  FAIL " << f.inputs << "\n";
        if (!f.expected.empty() || !f.got.empty()) os << "    expected: " << f.expected << "\n    got:      " << f.got << "\n";
    }
    return os.str();
}

}  // namespace exls
