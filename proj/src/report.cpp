#include "parity/report.hpp"

#include <nlohmann/json.hpp>

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace paritygroups {

std::string emit_table(const Report& r)
{
    std::ostringstream out;
    out << "== " << r.command;
    for (const auto& [k, v] : r.params)
        out << " " << k << "=" << v;
    out << "\n";
    std::size_t width = 4;
    for (const auto& c : r.checks)
        width = std::max(width, c.name.size());
    for (const auto& c : r.checks) {
        out << (c.pass ? "  ok   " : "  FAIL ") << std::left << std::setw(static_cast<int>(width))
            << c.name << "  expected " << c.expected;
        if (!c.pass)
            out << "  got " << c.actual;
        out << "\n";
    }
    out << (r.pass() ? "PASS" : "FAIL") << " (" << r.checks.size() << " checks, " << std::fixed
        << std::setprecision(1) << r.elapsed_ms << " ms)\n";
    return out.str();
}

nlohmann::json emit_json(const Report& r)
{
    nlohmann::json j;
    j["command"] = r.command;
    j["params"] = nlohmann::json::object();
    for (const auto& [k, v] : r.params)
        j["params"][k] = v;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks)
        j["checks"].push_back({{"name", c.name},
                               {"expected", c.expected},
                               {"actual", c.actual},
                               {"pass", c.pass}});
    j["pass"] = r.pass();
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::string emit(const Report& r, const std::string& format)
{
    if (format == "table")
        return emit_table(r);
    if (format == "json")
        return emit_json(r).dump(2) + "\n";
    throw std::invalid_argument("format must be table or json");
}

} // namespace paritygroups
