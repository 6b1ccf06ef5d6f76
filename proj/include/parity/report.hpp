#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <utility>
#include <vector>

namespace paritygroups {

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Check> checks;
    double elapsed_ms = 0;

    bool pass() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }

    void expect(const std::string& name, const std::string& expected, const std::string& actual)
    {
        checks.push_back({name, expected, actual, expected == actual});
    }
    void expect_true(const std::string& name, bool ok)
    {
        checks.push_back({name, "true", ok ? "true" : "false", ok});
    }
    template <typename T>
    void expect_eq(const std::string& name, const T& expected, const T& actual)
    {
        expect(name, std::to_string(expected), std::to_string(actual));
    }
};

std::string emit_table(const Report& r);
nlohmann::json emit_json(const Report& r);
std::string emit(const Report& r, const std::string& format); // "table" | "json"

} // namespace paritygroups
