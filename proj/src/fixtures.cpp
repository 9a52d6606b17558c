#include "sqspiral/fixtures.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#ifndef SQSPIRAL_DATA_DIR
#define SQSPIRAL_DATA_DIR "data"
#endif

namespace sqspiral {

FixtureError::FixtureError(size_t line, std::string row, const std::string &what)
    : std::runtime_error(fmt::format("fixture line {} ({}): {}", line, row, what)), line_(line), row_(std::move(row))
{
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    size_t start = 0;
    for (;;) {
        size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

template <typename T>
T number(std::string_view s, size_t line, const std::string &row, const char *field)
{
    T v{};
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size())
        throw FixtureError(line, row, fmt::format("bad {} '{}'", field, s));
    return v;
}

QuadPoly poly_field(std::string_view s, size_t line, const std::string &row)
{
    auto parts = split(s, ',');
    if (parts.size() != 3)
        throw FixtureError(line, row, fmt::format("polynomial '{}' needs three coefficients", s));
    return {number<int64_t>(parts[0], line, row, "coefficient"), number<int64_t>(parts[1], line, row, "coefficient"),
            number<int64_t>(parts[2], line, row, "coefficient")};
}

std::vector<int64_t> terms_field(std::string_view s, size_t line, const std::string &row)
{
    std::vector<int64_t> out;
    for (auto t : split(s, ','))
        out.push_back(number<int64_t>(t, line, row, "term"));
    return out;
}

std::string join(const std::vector<int64_t> &v, char sep)
{
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string poly_text(const QuadPoly &p)
{
    return fmt::format("{},{},{}", p.a, p.b, p.c);
}

std::string read_file(const std::filesystem::path &file)
{
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw FixtureError(0, file.string(), "cannot open fixture file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string prefix_of(const std::string &system)
{
    return system.substr(0, system.find('-'));
}

} // namespace

std::string ArmRecord::qualified() const
{
    return prefix_of(system) + "-" + arm;
}

FixtureSet FixtureSet::parse(std::string_view text)
{
    FixtureSet fs;
    auto lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty())
        lines.pop_back();
    for (size_t i = 0; i < lines.size(); ++i) {
        size_t ln = i + 1;
        std::string_view line = lines[i];
        if (line.empty() || line.front() == '#') {
            fs.entries_.push_back(Comment{std::string(line)});
            continue;
        }
        auto f = split(line, '|');
        std::string kind(f[0]);
        std::string row = f.size() > 3 ? std::string(f[2]) + "/" + std::string(f[3]) : std::string(line);
        if (kind == "arm") {
            if (f.size() != 11)
                throw FixtureError(ln, row, fmt::format("arm record needs 11 fields, found {}", f.size()));
            ArmRecord a;
            a.line = ln;
            a.table = f[1];
            a.system = f[2];
            a.arm = f[3];
            a.d2 = number<int64_t>(f[4], ln, row, "second difference");
            if (f[5].size() != 1 || (f[5][0] != 'P' && f[5][0] != 'N' && f[5][0] != '-'))
                throw FixtureError(ln, row, fmt::format("bad rotation '{}'", f[5]));
            a.rotation = rotation_from_char(f[5][0]);
            for (size_t m = 0; m < 4; ++m)
                a.fits[m] = poly_field(f[6 + m], ln, row);
            a.terms = terms_field(f[10], ln, row);
            fs.entries_.push_back(std::move(a));
        } else if (kind == "seq") {
            if (f.size() != 4)
                throw FixtureError(ln, row, "seq record needs 4 fields");
            SeqRecord s{ln, std::string(f[1]), std::string(f[2]), terms_field(f[3], ln, row)};
            fs.entries_.push_back(std::move(s));
        } else if (kind == "factor") {
            if (f.size() != 5)
                throw FixtureError(ln, row, "factor record needs 5 fields");
            FactorRecord r{ln, std::string(f[1]), std::string(f[2]), number<uint64_t>(f[3], ln, row, "value"), {}};
            for (auto p : split(f[4], '*'))
                r.primes.push_back(number<uint64_t>(p, ln, row, "prime factor"));
            fs.entries_.push_back(std::move(r));
        } else {
            throw FixtureError(ln, std::string(line), fmt::format("unknown record kind '{}'", kind));
        }
    }
    return fs;
}

FixtureSet FixtureSet::load(const std::filesystem::path &file)
{
    return parse(read_file(file));
}

std::string FixtureSet::serialize() const
{
    std::string out;
    for (const auto &e : entries_) {
        if (auto c = std::get_if<Comment>(&e)) {
            out += c->text;
        } else if (auto a = std::get_if<ArmRecord>(&e)) {
            out += fmt::format("arm|{}|{}|{}|{}|{}", a->table, a->system, a->arm, a->d2, to_char(a->rotation));
            for (const auto &p : a->fits)
                out += "|" + poly_text(p);
            out += "|" + join(a->terms, ',');
        } else if (auto s = std::get_if<SeqRecord>(&e)) {
            out += fmt::format("seq|{}|{}|{}", s->source, s->name, join(s->terms, ','));
        } else if (auto r = std::get_if<FactorRecord>(&e)) {
            out += fmt::format("factor|{}|{}|{}|", r->source, r->name, r->value);
            for (size_t i = 0; i < r->primes.size(); ++i)
                out += (i ? "*" : "") + std::to_string(r->primes[i]);
        }
        out += '\n';
    }
    return out;
}

std::vector<const ArmRecord *> FixtureSet::arms(std::string_view table) const
{
    std::vector<const ArmRecord *> out;
    for (const auto &e : entries_)
        if (auto a = std::get_if<ArmRecord>(&e); a && (table.empty() || a->table == table))
            out.push_back(a);
    return out;
}

std::vector<const SeqRecord *> FixtureSet::sequences(std::string_view name) const
{
    std::vector<const SeqRecord *> out;
    for (const auto &e : entries_)
        if (auto s = std::get_if<SeqRecord>(&e); s && (name.empty() || s->name == name))
            out.push_back(s);
    return out;
}

std::vector<const FactorRecord *> FixtureSet::factors() const
{
    std::vector<const FactorRecord *> out;
    for (const auto &e : entries_)
        if (auto r = std::get_if<FactorRecord>(&e))
            out.push_back(r);
    return out;
}

std::vector<std::string> FixtureSet::notes() const
{
    std::vector<std::string> out;
    for (const auto &e : entries_) {
        auto c = std::get_if<Comment>(&e);
        if (!c || c->text.empty())
            continue;
        auto start = c->text.find_first_not_of("# ");
        if (start != std::string::npos)
            out.push_back(c->text.substr(start));
    }
    return out;
}

std::vector<ArmSystem> FixtureSet::systems(std::string_view table) const
{
    std::vector<ArmSystem> out;
    for (const ArmRecord *a : arms(table)) {
        auto it = std::find_if(out.begin(), out.end(), [&](const ArmSystem &s) { return s.name == a->system; });
        if (it == out.end()) {
            out.push_back({a->system, a->d2, a->rotation, {}});
            it = out.end() - 1;
        }
        it->arms.push_back({a->arm, a->fits, a->terms});
    }
    return out;
}

std::optional<ArmSystem> FixtureSet::system(std::string_view name) const
{
    for (auto &s : systems())
        if (s.name == name)
            return s;
    return std::nullopt;
}

const ArmRecord *FixtureSet::find_arm(std::string_view name) const
{
    auto all = arms();
    for (const ArmRecord *a : all)
        if (a->qualified() == name || a->system + "/" + a->arm == name)
            return a;
    const ArmRecord *bare = nullptr;
    for (const ArmRecord *a : all) {
        if (a->arm != name)
            continue;
        if (bare)
            return nullptr; // ambiguous
        bare = a;
    }
    return bare;
}

QuadPoly FixtureSet::resolve(std::string_view name) const
{
    if (const ArmRecord *a = find_arm(name))
        return a->fits[0];
    size_t bare_arms = 0;
    for (const ArmRecord *a : arms())
        bare_arms += a->arm == name;
    if (bare_arms > 1)
        throw std::invalid_argument(fmt::format("arm name '{}' is ambiguous; qualify it with its system prefix", name));

    // sequence names match in full or after their system prefix, the latter only when unique
    const SeqRecord *exact = nullptr, *suffix = nullptr;
    bool suffix_ambiguous = false;
    for (const SeqRecord *s : sequences()) {
        if (s->name == name && !exact)
            exact = s;
        auto dash = s->name.find('-');
        if (dash != std::string::npos && s->name.substr(dash + 1) == name) {
            if (suffix && suffix->name != s->name)
                suffix_ambiguous = true;
            if (!suffix)
                suffix = s;
        }
    }
    if (!exact && suffix_ambiguous)
        throw std::invalid_argument(fmt::format("sequence name '{}' is ambiguous", name));
    if (const SeqRecord *s = exact ? exact : suffix) {
        if (s->terms.size() < 3)
            throw std::invalid_argument(fmt::format("sequence '{}' has fewer than three terms", s->name));
        return newton_fit(1, s->terms[0], s->terms[1], s->terms[2]);
    }
    try {
        return parse_poly(name);
    } catch (const std::invalid_argument &) {
        throw std::invalid_argument(fmt::format("'{}' is neither a fixture arm, a fixture sequence nor a polynomial", name));
    }
}

std::vector<Table1Row> parse_table1(std::string_view text)
{
    std::vector<Table1Row> rows;
    auto lines = split(text, '\n');
    for (size_t i = 0; i < lines.size(); ++i) {
        std::string_view line = lines[i];
        if (line.empty() || line.front() == '#')
            continue;
        size_t ln = i + 1;
        auto f = split(line, '|');
        if (f.size() != 6 || f[0] != "row")
            throw FixtureError(ln, std::string(line), "table row needs 6 fields");
        std::string row = fmt::format("{}@{}", f[1], f[2]);
        rows.push_back({ln, std::string(f[1]), std::string(f[2]), number<int64_t>(f[3], ln, row, "index"),
                        number<int64_t>(f[4], ln, row, "value"), std::string(f[5])});
    }
    return rows;
}

std::vector<Table1Row> load_table1(const std::filesystem::path &file)
{
    return parse_table1(read_file(file));
}

std::filesystem::path default_data_dir()
{
    if (const char *env = std::getenv("SQSPIRAL_DATA"); env && *env)
        return env;
    return SQSPIRAL_DATA_DIR;
}

} // namespace sqspiral
