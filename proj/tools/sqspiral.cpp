#include <cstdio>
#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "sqspiral/commands.hpp"

using namespace sqspiral;

int main(int argc, char **argv)
{
    CLI::App app{"square-root spiral arms: constants, fixture tables, factor periods, density, plots"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false;
    std::string out, fixtures;
    CommandContext ctx;
    app.add_flag("--json", json, "print the report as JSON");
    app.add_option("--out", out, "write CSV or SVG output here");
    app.add_option("--seed", ctx.seed, "seed for randomized sweeps");
    app.add_option("--threads", ctx.threads, "worker threads for density scans")->check(CLI::Range(1u, 256u));
    app.add_option("--fixtures", fixtures, "directory holding the fixture files");

    std::optional<int64_t> raw_k;
    auto *constants = app.add_subcommand("constants", "spiral constants, winding gap, square-arm angle");
    constants->add_option("--k", raw_k, "also report the raw c2 estimate at this k");

    std::string table = "all";
    auto *verify = app.add_subcommand("verify-tables", "check every fixture arm against its fits and rules");
    verify->add_option("table", table, "6A, 6B, 6C, 7 or all")->check(CLI::IsMember({"6A", "6B", "6C", "7", "all"}));

    FactorsOptions fo;
    auto *factors = app.add_subcommand("factors", "admissible primes, root classes and factor occurrences");
    factors->add_option("target", fo.target, "arm name, sequence name or polynomial")->required();
    factors->add_option("--bound", fo.bound, "largest prime considered");
    factors->add_option("--window", fo.window, "index range a..b for the occurrence table");
    factors->add_option("--compare", fo.compare, "second arm for the splitting comparison");

    DensityOptions dn;
    auto *density = app.add_subcommand("density", "prime share over a window of an arm");
    density->add_option("arm", dn.arm, "arm name or polynomial")->required();
    density->add_option("--at", dn.at, "start, 2.5e6, 2.5e7, 2.5e8, 2.5e9 or a value");
    density->add_option("--len", dn.len, "number of terms");

    ResiduesOptions ro;
    auto *residues = app.add_subcommand("residues", "residue cycles, number endings, digit sums");
    residues->add_option("target", ro.target, "arm name or polynomial")->required();
    residues->add_option("--moduli", ro.moduli, "moduli for the residue cycles")->delimiter(',');
    residues->add_option("--terms", ro.terms, "terms for the digit-sum profile");

    DetectOptions dt;
    auto *detect = app.add_subcommand("detect", "find the one-wind arm through a starting number");
    detect->add_option("start", dt.seed, "first number of the chain")->required();
    detect->add_option("--d2", dt.d2, "second difference");
    detect->add_option("--length", dt.length, "chain length");
    detect->add_option("--show", dt.show, "candidates to list");

    PlotOptions po;
    auto *plot = app.add_subcommand("plot", "write an SVG figure");
    plot->add_option("what", po.what, "sqrt-spiral, number-spiral, ulam, arms or fig7")
        ->required()
        ->check(CLI::IsMember({"sqrt-spiral", "number-spiral", "ulam", "arms", "fig7"}));
    plot->add_option("--n", po.n, "points, or largest value for arm plots");
    plot->add_option("--system", po.system, "arm system for 'arms'");
    plot->add_option("--arm", po.arm, "arm for 'fig7'");
    plot->add_option("--primes", po.primes, "divisibility primes for 'fig7'")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    if (!out.empty())
        ctx.out = out;
    if (!fixtures.empty())
        ctx.data_dir = fixtures;

    try {
        Report r;
        if (*constants)
            r = cmd_constants(ctx, raw_k);
        else if (*verify)
            r = cmd_verify_tables(ctx, table);
        else if (*factors)
            r = cmd_factors(ctx, fo);
        else if (*density)
            r = cmd_density(ctx, dn);
        else if (*residues)
            r = cmd_residues(ctx, ro);
        else if (*detect)
            r = cmd_detect(ctx, dt);
        else
            r = cmd_plot(ctx, po);
        std::cout << (json ? r.to_json().dump(2) + "\n" : r.to_text());
        return r.exit_code();
    } catch (const FixtureError &e) {
        fmt::print(stderr, "config error: {}\n", e.what());
    } catch (const UsageError &e) {
        fmt::print(stderr, "usage error: {}\n", e.what());
    } catch (const std::exception &e) {
        fmt::print(stderr, "error: {}\n", e.what());
    }
    return 2;
}
