#include "sqspiral/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "sqspiral/primes.hpp"
#include "sqspiral/residues.hpp"
#include "sqspiral/spiral.hpp"
#include "sqspiral/spirals.hpp"
#include "sqspiral/svg.hpp"

namespace sqspiral {

namespace {

std::string read_text(const std::filesystem::path &file)
{
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw FixtureError(0, file.string(), "cannot open fixture file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::filesystem::path &file, const std::string &text)
{
    std::ofstream out(file, std::ios::binary);
    if (!out || !(out << text) || !out.flush())
        throw std::runtime_error(fmt::format("cannot write {}", file.string()));
}

QuadPoly resolve_or_usage(const FixtureSet &fs, const std::string &name)
{
    try {
        return fs.resolve(name);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

std::vector<uint64_t> expand(const Factorization &f)
{
    std::vector<uint64_t> out;
    for (auto [p, e] : f.factors)
        out.insert(out.end(), static_cast<size_t>(e), p);
    return out;
}

std::vector<uint64_t> parse_factor_list(const std::string &s)
{
    std::vector<uint64_t> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '*'))
        out.push_back(std::stoull(part));
    std::sort(out.begin(), out.end());
    return out;
}

template <typename T>
std::string list(const std::vector<T> &v)
{
    return fmt::format("{{{}}}", fmt::join(v, ","));
}

// smallest x >= 1 with f(x) >= target, for f increasing on x >= 1
int64_t first_index_at_least(const QuadPoly &f, double target)
{
    if (f.a <= 0)
        throw UsageError("--at with a value needs an arm with positive leading coefficient");
    int64_t lo = 1, hi = 1;
    while (static_cast<double>(f(hi)) < target) {
        lo = hi;
        hi *= 2;
        if (hi > (int64_t(1) << 31))
            throw UsageError("--at value out of range");
    }
    if (static_cast<double>(f(lo)) >= target)
        return lo;
    while (hi - lo > 1) {
        int64_t mid = lo + (hi - lo) / 2;
        (static_cast<double>(f(mid)) >= target ? hi : lo) = mid;
    }
    return hi;
}

// 7-A families and the polynomial each column is drawn from
const std::map<std::string, QuadPoly> &base_families()
{
    static const std::map<std::string, QuadPoly> m{
        {"S", {1, 0, 0}}, {"S+1", {1, 0, 1}}, {"P", {1, 1, 0}}, {"P-1", {1, 1, -1}}};
    return m;
}

std::optional<int64_t> run_start(const QuadPoly &p, const std::vector<int64_t> &terms, int64_t max_t0)
{
    for (int64_t t0 = 0; t0 <= max_t0; ++t0) {
        bool ok = true;
        for (size_t i = 0; ok && i < terms.size(); ++i)
            ok = p(t0 + static_cast<int64_t>(i)) == terms[i];
        if (ok)
            return t0;
    }
    return std::nullopt;
}

void verify_arm(Report &r, const ArmRecord &a, const std::vector<RulesReport> &rules)
{
    std::vector<std::string> problems;
    if (a.terms.size() < 3) {
        problems.push_back("fewer than three terms");
    } else {
        try {
            QuadPoly fit = newton_fit(1, a.terms[0], a.terms[1], a.terms[2]);
            if (fit != a.fits[0])
                problems.push_back(fmt::format("fit of the first terms is {}, row has {}", to_string(fit), to_string(a.fits[0])));
        } catch (const NonIntegral &) {
            problems.push_back("first terms give a half-integer leading coefficient");
        }
    }
    for (size_t i = 0; i < a.terms.size(); ++i) {
        int64_t v = a.fits[0](static_cast<int64_t>(i) + 1);
        if (v != a.terms[i]) {
            problems.push_back(fmt::format("term {} is {}, f1 gives {}", i + 1, a.terms[i], v));
            break;
        }
    }
    for (int m = 1; m < 4; ++m) {
        QuadPoly s = shift(a.fits[0], m);
        if (s != a.fits[m])
            problems.push_back(fmt::format("f{} is {}, shifting f1 gives {}", m + 1, to_string(a.fits[m]), to_string(s)));
    }
    for (const auto &sys : rules)
        if (sys.system == a.system)
            for (const auto &ar : sys.arms)
                if (ar.arm == a.arm && !ar.ok())
                    problems.push_back("coefficient rules: " + ar.detail);
    int64_t period = residue_cycle(a.fits[0], 10, 1).period;
    if (period != 1 && period != 5)
        problems.push_back(fmt::format("mod-10 period {}", period));
    r.check(fmt::format("{} {}/{} (line {})", a.table, a.system, a.arm, a.line), problems.empty(),
            "fits, shifts, coefficient rules, mod-10 period 1 or 5",
            problems.empty() ? to_string(a.fits[0]) : fmt::format("{}", fmt::join(problems, "; ")));
}

void verify_euler(Report &r, const FixtureSet &fs)
{
    const QuadPoly euler{1, 1, 41};
    std::vector<int64_t> whole, parts;
    for (int64_t x = 0; x < 60; ++x)
        whole.push_back(euler(x));
    auto arms = sqrt_spiral_counterparts(euler);
    for (const auto &g : arms)
        for (int64_t t = 0; t < 20; ++t)
            parts.push_back(g(t));
    std::sort(whole.begin(), whole.end());
    std::sort(parts.begin(), parts.end());
    r.check("Euler split: three decimated arms partition x^2+x+41 on [0,60)", whole == parts,
            "identical multisets of 60 values", whole == parts ? "identical" : "multisets differ");

    const char *names[] = {"SRS-P+41/P+41A", "SRS-P+41/P+41B", "SRS-P+41/P+41C"};
    for (int r3 = 0; r3 < 3; ++r3) {
        const ArmRecord *a = fs.find_arm(names[r3]);
        std::string actual = a ? "not among f1..f4" : "row missing";
        for (size_t m = 0; a && m < a->fits.size(); ++m)
            if (a->fits[m] == arms[r3]) {
                actual = fmt::format("f{} = {}", m + 1, to_string(a->fits[m]));
                break;
            }
        r.check(fmt::format("Euler arm t = 3s+{} matches {}", r3, names[r3]), actual.front() == 'f',
                fmt::format("{} among the row's fits", to_string(arms[r3])), actual);
    }
    const ArmRecord *ns = fs.find_arm("NS-P+41");
    bool ok = ns && std::find(ns->fits.begin(), ns->fits.end(), euler) != ns->fits.end();
    r.check("number-spiral row carries x^2+x+41", ok, to_string(euler), ns ? to_string(ns->fits[1]) : "row missing");

    // 7-A columns: every printed run lies on its family polynomial or on one of its three decimations
    std::map<std::string, std::vector<int64_t>> residues_used;
    for (const SeqRecord *s : fs.sequences()) {
        if (s->source != "7-A")
            continue;
        std::string family = s->name;
        bool split = false;
        if (!base_families().count(family) && family.size() > 1 && std::string("ABC").find(family.back()) != std::string::npos) {
            family.pop_back();
            split = true;
        }
        auto it = base_families().find(family);
        if (it == base_families().end()) {
            r.check(fmt::format("7-A {} (line {})", s->name, s->line), false, "known family", "unknown family");
            continue;
        }
        std::string found;
        if (!split) {
            if (auto t0 = run_start(it->second, s->terms, 200))
                found = fmt::format("{} from x = {}", to_string(it->second), *t0);
        } else {
            for (int64_t rr = 0; rr < 3 && found.empty(); ++rr) {
                QuadPoly g = decimate(it->second, 3, rr);
                if (auto t0 = run_start(g, s->terms, 200)) {
                    found = fmt::format("{} = f(3t+{}) from t = {}", to_string(g), rr, *t0);
                    residues_used[family].push_back(rr);
                }
            }
        }
        r.check(fmt::format("7-A {} (line {})", s->name, s->line), !found.empty(), "run on the family polynomial",
                found.empty() ? "no match" : found);
    }
    for (auto &[family, used] : residues_used) {
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        r.check(fmt::format("7-A {} A/B/C columns cover all three residues mod 3", family), used.size() == 3,
                "{0,1,2}", list(used));
    }
}

void round_trip_sweep(Report &r, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto pick = [&](int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(rng() % static_cast<uint64_t>(hi - lo + 1));
    };
    const int trials = 1000;
    int bad = 0;
    std::string first_bad;
    for (int i = 0; i < trials; ++i) {
        QuadPoly p{pick(-1000, 1000), pick(-1000, 1000), pick(-1000, 1000)};
        int64_t t0 = pick(-1000, 1000), t = pick(-1000, 1000), x = pick(-1000, 1000);
        int64_t m = pick(1, 6), rr = pick(0, m - 1);
        bool ok = newton_fit(t0, p(t0), p(t0 + 1), p(t0 + 2)) == p;
        ok = ok && shift(shift(p, t), -t) == p && shift(p, t)(x) == p(x + t);
        ok = ok && decimate(p, m, rr)(x) == p(m * x + rr);
        if (!ok && bad++ == 0)
            first_bad = to_string(p);
    }
    r.check(fmt::format("newton_fit/shift/decimate round trips ({} random polynomials, seed {})", trials, seed), bad == 0,
            "0 mismatches", bad ? fmt::format("{} mismatches, first {}", bad, first_bad) : "0 mismatches");
}

} // namespace

FixtureSet CommandContext::fixtures() const
{
    return FixtureSet::load(data_dir / kArmsFile);
}

std::vector<Table1Row> CommandContext::table1() const
{
    return load_table1(data_dir / kTable1File);
}

std::pair<int64_t, int64_t> parse_window(const std::string &text)
{
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos)
            throw std::invalid_argument("missing ..");
        size_t used = 0;
        int64_t a = std::stoll(text.substr(0, dots), &used);
        if (used != dots)
            throw std::invalid_argument("junk");
        std::string rest = text.substr(dots + 2);
        int64_t b = std::stoll(rest, &used);
        if (used != rest.size() || b < a)
            throw std::invalid_argument("junk");
        return {a, b};
    } catch (const std::exception &) {
        throw UsageError(fmt::format("window '{}' must look like a..b with a <= b", text));
    }
}

Report cmd_constants(const CommandContext &, std::optional<int64_t> raw_k)
{
    Report r;
    r.command = "constants";
    if (raw_k) {
        if (*raw_k < 2 || *raw_k > 1000000000)
            throw UsageError("--k must be in [2, 10^9]");
        r.inputs["k"] = *raw_k;
    }

    double c2 = estimate_c2(1000000, true);
    r.check("spiral constant c2, accelerated at k = 10^6", std::fabs(c2 - kSpiralConstant) <= 1e-9,
            fmt::format("{:.12f} +- 1e-9", kSpiralConstant), fmt::format("{:.12f}", c2));

    double gap = winding_gap(1000000);
    r.check("winding gap at n = 10^6", std::fabs(gap - kPi) <= 1e-3, fmt::format("{:.6f} +- 1e-3", kPi),
            fmt::format("{:.6f}", gap));

    double sq = square_arm_angle(1000);
    r.check("angle between square arms at m = 1000", std::fabs(sq - 114.5916) <= 0.01, "114.5916 +- 0.01 deg",
            fmt::format("{:.6f} deg", sq));

    auto below_axis = [](int64_t n) { return 360.0 - std::fmod(total_angle(n) * 180.0 / kPi, 360.0); };
    double a17 = below_axis(17);
    r.check("angle of ray sqrt(17) below the X axis", std::fabs(a17 - 8.84957988) <= 1e-5, "8.84957988 +- 1e-5 deg",
            fmt::format("{:.8f} deg", a17));

    double a53 = below_axis(53);
    r.info("angle of ray sqrt(53) below the X axis", fmt::format("{:.8f} deg", a53),
           fmt::format("printed value 8.08226071, difference {:.2e}", a53 - 8.08226071));
    r.info("wind-to-wind square angle 360 - 3*(360/pi)", fmt::format("{:.4f} deg", 360.0 - 3.0 * kSquareArmAngleDeg));
    if (raw_k) {
        double raw = estimate_c2(*raw_k, false);
        r.info(fmt::format("raw c2 at k = {}", *raw_k), fmt::format("{:.12f}", raw),
               fmt::format("distance to the limit {:.3e}; the raw estimate converges like 1/sqrt(k)", raw - kSpiralConstant));
        r.results["raw_c2"] = raw;
    }
    r.results["c2"] = c2;
    r.results["winding_gap_1e6"] = gap;
    r.results["square_arm_angle_1000_deg"] = sq;
    r.results["square_arm_angle_limit_deg"] = kSquareArmAngleDeg;
    r.results["sqrt17_below_axis_deg"] = a17;
    return r;
}

Report cmd_verify_tables(const CommandContext &ctx, const std::string &which)
{
    static const std::map<std::string, std::vector<std::string>> selections{
        {"6A", {"6A"}}, {"6B", {"6B"}}, {"6C", {"6C"}}, {"7", {"7C"}}, {"all", {"6A", "6B", "6C", "7C"}}};
    static const std::map<std::string, size_t> expected_arms{{"6A", 36}, {"6B", 36}, {"6C", 33}, {"7C", 4}};
    auto sel = selections.find(which);
    if (sel == selections.end())
        throw UsageError(fmt::format("unknown table '{}'; expected 6A, 6B, 6C, 7 or all", which));

    Report r;
    r.command = "verify-tables";
    r.inputs["tables"] = which;
    r.inputs["seed"] = ctx.seed;

    auto path = ctx.data_dir / kArmsFile;
    std::string text = read_text(path);
    FixtureSet fs = FixtureSet::parse(text);
    r.check("fixture file round-trips byte for byte", fs.serialize() == text, "identical", fs.serialize() == text ? "identical" : "differs");

    for (const auto &table : sel->second) {
        auto systems = fs.systems(table);
        std::vector<RulesReport> rules;
        for (const auto &s : systems)
            rules.push_back(coefficient_rules_check(s));
        auto arms = fs.arms(table);
        size_t before = r.failed();
        r.check(fmt::format("{} arm count", table), arms.size() == expected_arms.at(table),
                std::to_string(expected_arms.at(table)), std::to_string(arms.size()));
        for (const ArmRecord *a : arms)
            verify_arm(r, *a, rules);
        size_t failed = r.failed() - before;
        r.results[table] = {{"arms", arms.size()}, {"systems", systems.size()}, {"failed_checks", failed}};
    }
    if (which == "7" || which == "all")
        verify_euler(r, fs);
    round_trip_sweep(r, ctx.seed);
    r.notes = fs.notes();
    return r;
}

Report cmd_factors(const CommandContext &ctx, const FactorsOptions &opt)
{
    if (opt.bound < 2 || opt.bound > 10000000)
        throw UsageError("--bound must be in [2, 10^7]");
    FixtureSet fs = ctx.fixtures();
    QuadPoly f = resolve_or_usage(fs, opt.target);

    Report r;
    r.command = "factors";
    r.inputs["target"] = opt.target;
    r.inputs["bound"] = opt.bound;
    if (opt.window)
        r.inputs["window"] = *opt.window;
    if (opt.compare)
        r.inputs["compare"] = *opt.compare;
    r.results["poly"] = to_string(f);

    AdmissiblePrimes ap = admissible_primes(f, opt.bound);
    r.results["discriminant"] = to_string(ap.discriminant);
    r.results["admissible"] = ap.primes;
    r.info("admissible primes", list(ap.primes));

    const uint64_t oracle_limit = 5000;
    size_t disagreements = 0;
    for (uint64_t q : primes_up_to(std::min(opt.bound, oracle_limit))) {
        bool brute = !brute_force_roots(f, q).empty();
        bool listed = std::binary_search(ap.primes.begin(), ap.primes.end(), q);
        disagreements += brute != listed;
    }
    r.check(fmt::format("admissible primes agree with brute force up to {}", std::min(opt.bound, oracle_limit)),
            disagreements == 0, "0 disagreements", std::to_string(disagreements));

    Json classes = Json::array();
    size_t gap_failures = 0;
    for (uint64_t q : ap.primes) {
        RootClasses rc = root_classes(f, q);
        uint64_t sum = 0;
        for (auto g : rc.gaps)
            sum += g;
        gap_failures += !rc.roots.empty() && sum != q;
        classes.push_back({{"p", q}, {"roots", rc.roots}, {"gaps", rc.gaps}});
    }
    r.results["root_classes"] = std::move(classes);
    r.check("gaps between root classes sum to the prime", gap_failures == 0, "0 failures", std::to_string(gap_failures));

    if (opt.window) {
        auto [x0, x1] = parse_window(*opt.window);
        if (x1 - x0 >= 100000)
            throw UsageError("--window spans at most 10^5 indices");
        std::string csv = "index,value,smallest_prime_factor,factors\n";
        Json rows = Json::array();
        std::map<int64_t, Factorization> seen;
        for (int64_t x = x0; x <= x1; ++x) {
            int64_t v = f(x);
            std::string spf, fac;
            if (v >= 2) {
                Factorization fz = factorize(static_cast<uint64_t>(v));
                spf = std::to_string(fz.factors.front().first);
                fac = to_string(fz);
                seen.emplace(v, fz);
            }
            csv += fmt::format("{},{},{},{}\n", x, v, spf, fac);
            rows.push_back({{"index", x}, {"value", v}, {"smallest_prime_factor", spf}, {"factors", fac}});
        }
        r.results["occurrences"] = std::move(rows);
        for (const FactorRecord *rec : fs.factors()) {
            auto it = seen.find(static_cast<int64_t>(rec->value));
            if (it == seen.end())
                continue;
            QuadPoly owner;
            try {
                owner = fs.resolve(rec->name);
            } catch (const std::invalid_argument &) {
                continue;
            }
            if (owner != f)
                continue;
            auto printed = rec->primes;
            std::sort(printed.begin(), printed.end());
            r.check(fmt::format("printed factorization of {} (line {})", rec->value, rec->line), expand(it->second) == printed,
                    fmt::format("{}", fmt::join(rec->primes, "*")), to_string(it->second));
        }
        if (ctx.out)
            write_text(*ctx.out, csv);
    }

    if (opt.compare) {
        QuadPoly g = resolve_or_usage(fs, *opt.compare);
        SplittingComparison sc = same_splitting(f, g, opt.bound);
        r.info(fmt::format("same prime splitting as {} up to {}", opt.compare->c_str(), opt.bound),
               sc.same ? "true" : fmt::format("false, first difference at {}", *sc.witness),
               fmt::format("discriminants {} and {}", to_string(sc.disc_a), to_string(sc.disc_b)));
        Json phases = Json::array();
        for (size_t i = 0; i < sc.a.size(); ++i)
            if (!sc.a[i].roots.empty() || !sc.b[i].roots.empty())
                phases.push_back({{"p", sc.a[i].p}, {"roots_a", sc.a[i].roots}, {"roots_b", sc.b[i].roots}});
        r.results["compare"] = {{"poly", to_string(g)},
                                {"same", sc.same},
                                {"witness", sc.witness ? Json(*sc.witness) : Json(nullptr)},
                                {"discriminant_a", to_string(sc.disc_a)},
                                {"discriminant_b", to_string(sc.disc_b)},
                                {"phases", std::move(phases)}};
    }
    return r;
}

std::string density_csv(const DensityReport &rep)
{
    std::string csv = "index,value,is_prime,factors,sd,first_diff,second_diff\n";
    for (const auto &rec : rep.records) {
        int64_t prev = rep.poly(rec.x - 1);
        csv += fmt::format("{},{},{},{},{},{},{}\n", rec.x, rec.value, rec.is_prime ? 1 : 0,
                           rec.factors.factors.empty() ? "" : to_string(rec.factors),
                           rec.value >= 0 ? digit_sum(static_cast<uint64_t>(rec.value)) : 0, rec.value - prev,
                           2 * rep.poly.a);
    }
    return csv;
}

Report cmd_density(const CommandContext &ctx, const DensityOptions &opt)
{
    if (opt.len < 1 || opt.len > 1000000)
        throw UsageError("--len must be in [1, 10^6]");
    FixtureSet fs = ctx.fixtures();
    QuadPoly f = resolve_or_usage(fs, opt.arm);

    std::vector<Table1Row> printed;
    std::map<std::string, bool> same_arm;
    for (const auto &row : ctx.table1()) {
        auto it = same_arm.find(row.arm);
        if (it == same_arm.end())
            it = same_arm.emplace(row.arm, fs.resolve(row.arm) == f).first;
        if (it->second)
            printed.push_back(row);
    }

    int64_t x0 = 0;
    std::string origin;
    auto hit = std::find_if(printed.begin(), printed.end(), [&](const Table1Row &row) { return row.window == opt.at; });
    if (hit != printed.end()) {
        x0 = hit->x;
        origin = "first printed row of the window";
    } else if (opt.at == "start") {
        x0 = 1;
        origin = "x = 1";
    } else {
        double target;
        try {
            size_t used = 0;
            target = std::stod(opt.at, &used);
            if (used != opt.at.size())
                throw std::invalid_argument("junk");
        } catch (const std::exception &) {
            throw UsageError(fmt::format("--at '{}' is neither start nor a number", opt.at));
        }
        try {
            x0 = first_index_at_least(f, target);
        } catch (const std::range_error &) {
            throw UsageError(fmt::format("--at {} is beyond the 64-bit range of {}", opt.at, to_string(f)));
        }
        origin = "first index whose value reaches the window";
    }

    Report r;
    r.command = "density";
    r.inputs["arm"] = opt.arm;
    r.inputs["at"] = opt.at;
    r.inputs["len"] = opt.len;
    r.inputs["threads"] = ctx.threads;

    DensityReport rep;
    try {
        rep = density_scan(f, x0, x0 + opt.len, ctx.threads);
    } catch (const std::range_error &e) {
        throw UsageError(e.what());
    }

    for (const auto &row : printed) {
        if (row.x < x0 || row.x >= x0 + opt.len)
            continue;
        const DensityRecord &rec = rep.records[static_cast<size_t>(row.x - x0)];
        std::string got = rec.factors.factors.empty() ? "" : fmt::format("{}", fmt::join(expand(rec.factors), "*"));
        bool ok = rec.value == row.value && (row.factors.empty() ? rec.is_prime
                                                                 : expand(rec.factors) == parse_factor_list(row.factors));
        r.check(fmt::format("printed row {} x = {} (line {})", row.arm, row.x, row.line), ok,
                fmt::format("{} {}", row.value, row.factors.empty() ? "prime" : row.factors),
                fmt::format("{} {}", rec.value, rec.is_prime ? "prime" : got));
    }

    double share = rep.prime_share();
    bool in_band = share >= 0.70 && share <= 0.75;
    r.info("prime share", fmt::format("{}/{} = {:.1f}%", rep.prime_count, rep.records.size(), 100.0 * share),
           in_band ? "inside the 70-75% band" : "outside the 70-75% band");
    r.info("share coprime to 30", fmt::format("{:.1f}%", 100.0 * rep.coprime_share()));

    Json rows = Json::array();
    for (const auto &rec : rep.records)
        rows.push_back({{"index", rec.x},
                        {"value", rec.value},
                        {"is_prime", rec.is_prime},
                        {"factors", rec.factors.factors.empty() ? "" : to_string(rec.factors)},
                        {"sd", rec.value >= 0 ? digit_sum(static_cast<uint64_t>(rec.value)) : 0},
                        {"first_diff", rec.value - f(rec.x - 1)}});
    r.results["poly"] = to_string(f);
    r.results["x0"] = x0;
    r.results["x0_from"] = origin;
    r.results["second_diff"] = 2 * f.a;
    r.results["prime_count"] = rep.prime_count;
    r.results["prime_share"] = share;
    r.results["in_70_75_band"] = in_band;
    r.results["rows"] = std::move(rows);
    if (ctx.out)
        write_text(*ctx.out, density_csv(rep));
    return r;
}

Report cmd_residues(const CommandContext &ctx, const ResiduesOptions &opt)
{
    FixtureSet fs = ctx.fixtures();
    QuadPoly f = resolve_or_usage(fs, opt.target);
    if (opt.terms < 5)
        throw UsageError("--terms must be >= 5");

    Report r;
    r.command = "residues";
    r.inputs["target"] = opt.target;
    r.inputs["moduli"] = opt.moduli;
    r.inputs["terms"] = opt.terms;
    r.results["poly"] = to_string(f);

    Json cycles = Json::array();
    for (int64_t k : opt.moduli) {
        if (k < 1)
            throw UsageError("moduli must be >= 1");
        ResidueCycle rc = residue_cycle(f, k, 1);
        r.check(fmt::format("period mod {} divides {}", k, k), k % rc.period == 0, fmt::format("divisor of {}", k),
                std::to_string(rc.period));
        Json c = {{"k", k}, {"period", rc.period}, {"cycle", rc.cycle}, {"canonical", rc.canonical}, {"phase", rc.phase}};
        if (k >= 2)
            c["zero_positions"] = divisibility_positions(f, k).positions;
        cycles.push_back(std::move(c));
    }
    r.results["cycles"] = std::move(cycles);

    auto alphabet = ending_alphabet(f);
    r.results["ending_alphabet"] = alphabet;
    r.info("number endings", list(std::vector<int>(alphabet.begin(), alphabet.end())));

    try {
        DigitSumProfile sd = sd_profile(f, opt.terms);
        r.info("ordered digit sums", list(sd.ordered_distinct), describe(sd));
        r.results["digit_sums"] = {{"ordered", sd.ordered_distinct}, {"diffs", sd.diffs}, {"pattern", describe(sd)}};
    } catch (const std::domain_error &e) {
        r.info("ordered digit sums", "n/a", e.what());
    }

    std::map<std::string, int> six;
    for (int64_t t = 1; t <= opt.terms; ++t) {
        int64_t v = f(t);
        ++six[v >= 1 ? to_string(six_classify(v)) : "nonpositive"];
    }
    r.results["six_classes"] = six;
    return r;
}

Report cmd_detect(const CommandContext &, const DetectOptions &opt)
{
    Report r;
    r.command = "detect";
    r.inputs["seed"] = opt.seed;
    r.inputs["d2"] = opt.d2;
    r.inputs["length"] = opt.length;

    if (opt.d2 < 2 || opt.d2 % 2)
        throw UsageError("--d2 must be a positive even number");
    ArmChainResult res;
    try {
        res = detect_arm_chain(opt.seed, opt.d2, opt.length);
    } catch (const std::domain_error &e) {
        throw UsageError(e.what());
    }
    const ChainCandidate &best = res.best();
    r.info("best chain", list(best.chain), fmt::format("first step {}, max drift {:.6f} rad", best.delta1, best.score));

    if (best.chain.size() >= 3) {
        DiffProfile dp = differences(best.chain);
        r.check("best chain has the requested second difference", dp.second == opt.d2, std::to_string(opt.d2),
                std::to_string(dp.second));
    }
    QuadPoly fit = newton_fit(1, best.chain[0], best.chain[1], 2 * best.chain[1] - best.chain[0] + opt.d2);
    double step = arm_step_angle(fit, 10000);
    double limit = std::sqrt(2.0 * static_cast<double>(opt.d2));
    r.check("per-step spiral angle at t = 10^4 approaches sqrt(2 d2)", std::fabs(step - limit) <= 1e-3,
            fmt::format("{:.6f} +- 1e-3 rad", limit), fmt::format("{:.6f} rad", step));

    Json cands = Json::array();
    for (size_t i = 0; i < std::min(opt.show, res.candidates.size()); ++i) {
        const auto &c = res.candidates[i];
        cands.push_back({{"rank", i + 1}, {"delta1", c.delta1}, {"score", c.score}, {"chain", c.chain}, {"drift", c.drift}});
    }
    r.results["poly"] = to_string(fit);
    r.results["candidates_considered"] = res.candidates.size();
    r.results["candidates"] = std::move(cands);
    return r;
}

Report cmd_plot(const CommandContext &ctx, const PlotOptions &opt)
{
    if (!ctx.out)
        throw UsageError("plot needs --out PATH");
    static const std::map<std::string, int64_t> defaults{
        {"sqrt-spiral", 300}, {"number-spiral", 1000}, {"ulam", 2026}, {"arms", 5000}, {"fig7", 3000}};
    auto d = defaults.find(opt.what);
    if (d == defaults.end())
        throw UsageError(fmt::format("unknown plot '{}'", opt.what));
    int64_t n = opt.n.value_or(d->second);
    if (n < 1 || n > 100000)
        throw UsageError("--n must be in [1, 10^5]");

    Report r;
    r.command = "plot";
    r.inputs["what"] = opt.what;
    r.inputs["n"] = n;

    std::string svg;
    if (opt.what == "sqrt-spiral") {
        svg = plot_sqrt_spiral(n);
    } else if (opt.what == "number-spiral") {
        svg = plot_number_spiral(n);
    } else if (opt.what == "ulam") {
        svg = plot_ulam(n);
    } else if (opt.what == "arms") {
        r.inputs["system"] = opt.system;
        auto sys = ctx.fixtures().system(opt.system);
        if (!sys)
            throw UsageError(fmt::format("unknown arm system '{}'", opt.system));
        r.results["arms"] = sys->arms.size();
        svg = plot_arms(*sys, n);
    } else {
        r.inputs["arm"] = opt.arm;
        r.inputs["primes"] = opt.primes;
        for (uint64_t q : opt.primes)
            if (!is_prime(q))
                throw UsageError(fmt::format("{} is not prime", q));
        svg = plot_fig7(resolve_or_usage(ctx.fixtures(), opt.arm), opt.primes, n);
    }
    write_text(*ctx.out, svg);

    auto count = [&](std::string_view tag) {
        size_t c = 0;
        for (size_t pos = svg.find(tag); pos != std::string::npos; pos = svg.find(tag, pos + 1))
            ++c;
        return c;
    };
    r.results["file"] = ctx.out->string();
    r.results["bytes"] = svg.size();
    r.results["circles"] = count("<circle");
    r.results["polylines"] = count("<polyline");
    r.results["lines"] = count("<line ");
    return r;
}

} // namespace sqspiral
