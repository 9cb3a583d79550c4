#include "leavitt/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace leavitt {

bool Report::passed() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

std::string Report::to_json(bool include_timing) const
{
    nlohmann::ordered_json j;
    j["command"] = command;
    j["quiver_digest"] = quiver_digest;
    j["field"] = field;
    j["seed"] = seed;
    auto& params = j["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : parameters)
        params[k] = v;
    auto& out = j["output"] = nlohmann::ordered_json::array();
    for (const auto& [k, v] : output)
        out.push_back({{"key", k}, {"value", v}});
    auto& arr = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json r;
        r["name"] = c.name;
        r["status"] = c.passed ? "pass" : "fail";
        r["cases"] = c.cases;
        r["failures"] = c.failures;
        if (!c.passed)
            r["counterexample"] = c.counterexample;
        arr.push_back(std::move(r));
    }
    j["passed"] = passed();
    if (include_timing)
        j["timing_ms"] = elapsed_ms;
    return j.dump(2) + "\n";
}

std::string Report::to_text(bool include_timing) const
{
    std::ostringstream s;
    s << "command: " << command << "\n";
    s << "quiver: " << quiver_digest << "\n";
    s << "field: " << field << "\n";
    s << "seed: " << seed << "\n";
    for (const auto& [k, v] : parameters)
        s << "param " << k << " = " << v << "\n";
    for (const auto& [k, v] : output)
        s << k << ": " << v << "\n";
    for (const auto& c : checks) {
        s << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases";
        if (!c.passed)
            s << ", " << c.failures << " failures";
        s << ")\n";
        if (!c.passed)
            s << "  counterexample: " << c.counterexample << "\n";
    }
    if (!checks.empty())
        s << (passed() ? "result: pass" : "result: fail") << "\n";
    if (include_timing) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1f", elapsed_ms);
        s << "time_ms: " << buf << "\n";
    }
    return s.str();
}

std::string fnv1a_hex(const std::string& text)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace leavitt
