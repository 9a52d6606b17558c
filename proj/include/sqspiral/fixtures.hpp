#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sqspiral/quadpoly.hpp"

namespace sqspiral {

class FixtureError : public std::runtime_error {
public:
    FixtureError(size_t line, std::string row, const std::string &what);
    size_t line() const { return line_; }
    const std::string &row() const { return row_; }

private:
    size_t line_;
    std::string row_;
};

struct ArmRecord {
    size_t line = 0;
    std::string table; // 6A, 6B, 6C, 7C
    std::string system;
    std::string arm;
    int64_t d2 = 0;
    Rotation rotation = Rotation::Unspecified;
    std::array<QuadPoly, 4> fits;
    std::vector<int64_t> terms; // f1(1), f1(2), ...

    // "P18-B3": system prefix up to the first '-', then the arm
    std::string qualified() const;
};

struct SeqRecord {
    size_t line = 0;
    std::string source;
    std::string name;
    std::vector<int64_t> terms;
};

struct FactorRecord {
    size_t line = 0;
    std::string source;
    std::string name;
    uint64_t value = 0;
    std::vector<uint64_t> primes; // with repetition, as printed
};

struct Comment {
    std::string text;
};

using FixtureEntry = std::variant<Comment, ArmRecord, SeqRecord, FactorRecord>;

class FixtureSet {
public:
    static FixtureSet parse(std::string_view text);
    static FixtureSet load(const std::filesystem::path &file);

    std::string serialize() const;

    const std::vector<FixtureEntry> &entries() const { return entries_; }
    std::vector<const ArmRecord *> arms(std::string_view table = {}) const;
    std::vector<const SeqRecord *> sequences(std::string_view name = {}) const;
    std::vector<const FactorRecord *> factors() const;
    std::vector<std::string> notes() const; // header comments

    // grouped by system, in file order; empty table selects all
    std::vector<ArmSystem> systems(std::string_view table = {}) const;
    std::optional<ArmSystem> system(std::string_view name) const;

    // "P18-B3", "P18-B/B3", "B3" when unique
    const ArmRecord *find_arm(std::string_view name) const;
    // arm name, sequence name (fitted on its first three terms at x = 1), or a literal polynomial
    QuadPoly resolve(std::string_view name_or_poly) const;

private:
    std::vector<FixtureEntry> entries_;
};

struct Table1Row {
    size_t line = 0;
    std::string arm;
    std::string window;
    int64_t x = 0;
    int64_t value = 0;
    std::string factors; // empty when prime
};

std::vector<Table1Row> load_table1(const std::filesystem::path &file);
std::vector<Table1Row> parse_table1(std::string_view text);

// SQSPIRAL_DATA env var, else the source tree's data/ directory
std::filesystem::path default_data_dir();
inline constexpr const char *kArmsFile = "arms-v1.txt";
inline constexpr const char *kTable1File = "table1-v1.txt";

} // namespace sqspiral
