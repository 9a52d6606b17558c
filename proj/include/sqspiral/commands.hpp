#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqspiral/factorlab.hpp"
#include "sqspiral/fixtures.hpp"
#include "sqspiral/report.hpp"

namespace sqspiral {

// bad arguments or configuration; the CLI maps it to exit code 2
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CommandContext {
    std::filesystem::path data_dir = default_data_dir();
    std::optional<std::filesystem::path> out; // CSV or SVG destination
    uint64_t seed = 20260101;
    unsigned threads = 1;

    FixtureSet fixtures() const;
    std::vector<Table1Row> table1() const;
};

Report cmd_constants(const CommandContext &ctx, std::optional<int64_t> raw_k = std::nullopt);

// which: 6A, 6B, 6C, 7 or all
Report cmd_verify_tables(const CommandContext &ctx, const std::string &which);

struct FactorsOptions {
    std::string target;
    uint64_t bound = 100;
    std::optional<std::string> window; // "a..b", inclusive
    std::optional<std::string> compare;
};
Report cmd_factors(const CommandContext &ctx, const FactorsOptions &opt);

struct DensityOptions {
    std::string arm;
    std::string at = "start"; // start, 2.5e6, 2.5e7, 2.5e8, 2.5e9 or any value
    int64_t len = 8;
};
Report cmd_density(const CommandContext &ctx, const DensityOptions &opt);
std::string density_csv(const DensityReport &rep);

struct ResiduesOptions {
    std::string target;
    std::vector<int64_t> moduli{2, 3, 5, 6, 10};
    int terms = 25;
};
Report cmd_residues(const CommandContext &ctx, const ResiduesOptions &opt);

struct DetectOptions {
    int64_t seed = 11;
    int64_t d2 = 18;
    size_t length = 6;
    size_t show = 5;
};
Report cmd_detect(const CommandContext &ctx, const DetectOptions &opt);

struct PlotOptions {
    std::string what; // sqrt-spiral, number-spiral, ulam, arms, fig7
    std::optional<int64_t> n;
    std::string system = "P18-A";
    std::string arm = "N22-K5";
    std::vector<uint64_t> primes{7, 11, 17};
};
Report cmd_plot(const CommandContext &ctx, const PlotOptions &opt);

// "1..6" -> {1, 6}
std::pair<int64_t, int64_t> parse_window(const std::string &text);

} // namespace sqspiral
