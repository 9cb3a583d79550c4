#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace leavitt {

struct CheckRecord {
    std::string name;
    bool passed = true;
    long cases = 0;
    long failures = 0;
    std::string counterexample;  // first failure, serialized
};

// Counts cases for one named property and keeps the first counterexample.
class Check {
public:
    explicit Check(std::string name) { record_.name = std::move(name); }

    void pass() { ++record_.cases; }
    void fail(const std::string& counterexample)
    {
        ++record_.cases;
        ++record_.failures;
        if (record_.passed) {
            record_.passed = false;
            record_.counterexample = counterexample;
        }
    }
    void expect(bool ok, const std::string& counterexample)
    {
        if (ok)
            pass();
        else
            fail(counterexample);
    }
    template <class Describe>
    void expect_lazy(bool ok, Describe&& describe)
    {
        if (ok)
            pass();
        else
            fail(describe());
    }

    bool passed() const { return record_.passed; }
    const CheckRecord& record() const { return record_; }

private:
    CheckRecord record_;
};

struct Report {
    std::string command;
    std::string quiver_digest;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string field;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;
    std::vector<std::pair<std::string, std::string>> output;  // command results, in order
    double elapsed_ms = 0;

    bool passed() const;
    std::string to_json(bool include_timing = true) const;
    std::string to_text(bool include_timing = true) const;
};

std::string fnv1a_hex(const std::string& text);

}  // namespace leavitt
