#include "sqspiral/report.hpp"

#include <fmt/format.h>

namespace sqspiral {

Check &Report::check(std::string name, bool passed, std::string expected, std::string actual, std::string detail)
{
    checks.push_back({std::move(name), passed, false, std::move(expected), std::move(actual), std::move(detail)});
    return checks.back();
}

Check &Report::info(std::string name, std::string actual, std::string detail)
{
    checks.push_back({std::move(name), true, true, {}, std::move(actual), std::move(detail)});
    return checks.back();
}

size_t Report::failed() const
{
    size_t n = 0;
    for (const auto &c : checks)
        n += !c.informational && !c.passed;
    return n;
}

Json Report::to_json() const
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["inputs"] = inputs;
    Json cs = Json::array();
    size_t info = 0;
    for (const auto &c : checks) {
        info += c.informational;
        Json e;
        e["name"] = c.name;
        e["status"] = c.informational ? "info" : (c.passed ? "pass" : "fail");
        e["expected"] = c.expected;
        e["actual"] = c.actual;
        if (!c.detail.empty())
            e["detail"] = c.detail;
        cs.push_back(std::move(e));
    }
    j["checks"] = std::move(cs);
    j["results"] = results;
    j["notes"] = notes;
    j["summary"] = {{"checks", checks.size() - info},
                    {"passed", checks.size() - info - failed()},
                    {"failed", failed()},
                    {"informational", info}};
    return j;
}

std::string Report::to_text() const
{
    Json j = to_json();
    std::string out = fmt::format("{}\n", command);
    for (auto &[k, v] : j["inputs"].items())
        out += fmt::format("  {} = {}\n", k, v.is_string() ? v.get<std::string>() : v.dump());
    for (const auto &c : checks) {
        const char *tag = c.informational ? "INFO" : (c.passed ? "PASS" : "FAIL");
        out += fmt::format("[{}] {}: {}", tag, c.name, c.actual);
        if (!c.expected.empty())
            out += fmt::format(" (expected {})", c.expected);
        out += '\n';
        if (!c.detail.empty())
            out += fmt::format("       {}\n", c.detail);
    }
    for (auto &[k, v] : j["results"].items())
        out += fmt::format("{}: {}\n", k, v.dump());
    for (const auto &n : notes)
        out += fmt::format("note: {}\n", n);
    const Json &s = j["summary"];
    out += fmt::format("{} checks, {} passed, {} failed, {} informational\n", s["checks"].get<size_t>(),
                       s["passed"].get<size_t>(), s["failed"].get<size_t>(), s["informational"].get<size_t>());
    return out;
}

} // namespace sqspiral
