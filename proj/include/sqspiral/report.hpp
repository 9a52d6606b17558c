#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace sqspiral {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct Check {
    std::string name;
    bool passed = false;
    bool informational = false; // reported, never fails the run
    std::string expected;
    std::string actual;
    std::string detail;
};

struct Report {
    std::string command;
    Json inputs = Json::object();
    std::vector<Check> checks;
    Json results = Json::object(); // command-specific payload
    std::vector<std::string> notes;

    Check &check(std::string name, bool passed, std::string expected, std::string actual, std::string detail = {});
    Check &info(std::string name, std::string actual, std::string detail = {});

    size_t failed() const;
    bool passed() const { return failed() == 0; }
    // 0 when every non-informational check passes, else 1
    int exit_code() const { return passed() ? 0 : 1; }

    Json to_json() const;
    std::string to_text() const;
};

} // namespace sqspiral
