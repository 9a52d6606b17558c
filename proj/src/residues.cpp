#include "sqspiral/residues.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace sqspiral {

namespace {

int64_t mod(i128 v, int64_t k)
{
    i128 r = v % k;
    return static_cast<int64_t>(r < 0 ? r + k : r);
}

// p(t) mod k without overflow for any int64 t
int64_t eval_mod(const QuadPoly &p, int64_t t, int64_t k)
{
    i128 tm = mod(t, k);
    i128 v = (i128(mod(p.a, k)) * tm % k * tm + i128(mod(p.b, k)) * tm + mod(p.c, k));
    return mod(v, k);
}

template <class T>
std::vector<T> rotate_left(const std::vector<T> &v, size_t s)
{
    std::vector<T> r(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        r[i] = v[(i + s) % v.size()];
    return r;
}

// the rotation s minimising rotate_left(v, s); smallest s on ties
template <class T>
size_t least_rotation(const std::vector<T> &v)
{
    size_t best = 0;
    for (size_t s = 1; s < v.size(); ++s)
        if (rotate_left(v, s) < rotate_left(v, best))
            best = s;
    return best;
}

} // namespace

ResidueCycle residue_cycle(const QuadPoly &p, int64_t k, int64_t t0)
{
    if (k < 1)
        throw std::domain_error("residue_cycle: k must be >= 1");
    std::vector<int64_t> full(static_cast<size_t>(k));
    for (int64_t i = 0; i < k; ++i)
        full[static_cast<size_t>(i)] = eval_mod(p, t0 + i, k);

    // f(t+k) == f(t) mod k, so the minimal period is a divisor of k
    int64_t period = k;
    for (int64_t d = 1; d < k; ++d) {
        if (k % d)
            continue;
        bool ok = true;
        for (int64_t i = 0; i + d < k && ok; ++i)
            ok = full[static_cast<size_t>(i)] == full[static_cast<size_t>(i + d)];
        if (ok) {
            period = d;
            break;
        }
    }

    ResidueCycle rc;
    rc.k = k;
    rc.t0 = t0;
    rc.period = period;
    rc.cycle.assign(full.begin(), full.begin() + period);
    size_t s = least_rotation(rc.cycle);
    rc.canonical = rotate_left(rc.cycle, s);
    rc.phase = static_cast<int64_t>((rc.cycle.size() - s) % rc.cycle.size());
    return rc;
}

std::set<int> ending_alphabet(const QuadPoly &p)
{
    ResidueCycle rc = residue_cycle(p, 10, 1);
    return std::set<int>(rc.cycle.begin(), rc.cycle.end());
}

int digit_sum(uint64_t n)
{
    int s = 0;
    for (; n; n /= 10)
        s += static_cast<int>(n % 10);
    return s;
}

namespace {

const std::vector<std::vector<int>> kKnownCycles = {{3, 3, 2, 1}, {1, 2, 3, 3}};

bool four_periodic(const std::vector<int> &w)
{
    for (size_t i = 0; i + 4 < w.size(); ++i)
        if (w[i] != w[i + 4])
            return false;
    return true;
}

} // namespace

DigitSumProfile sd_profile(const QuadPoly &p, int n)
{
    if (n < 5)
        throw std::domain_error("sd_profile: need at least 5 terms");
    DigitSumProfile prof;
    for (int x = 1; x <= n; ++x) {
        int64_t v = p(x);
        if (v < 0)
            throw std::domain_error(fmt::format("sd_profile: f({}) = {} is negative", x, v));
        prof.sd_values.push_back(digit_sum(static_cast<uint64_t>(v)));
    }
    prof.ordered_distinct = prof.sd_values;
    std::sort(prof.ordered_distinct.begin(), prof.ordered_distinct.end());
    prof.ordered_distinct.erase(std::unique(prof.ordered_distinct.begin(), prof.ordered_distinct.end()),
                                prof.ordered_distinct.end());
    for (size_t i = 0; i + 1 < prof.ordered_distinct.size(); ++i)
        prof.diffs.push_back(prof.ordered_distinct[i + 1] - prof.ordered_distinct[i]);

    const auto &d = prof.diffs;
    if (d.size() >= 2 && std::all_of(d.begin(), d.end(), [&](int x) { return x == d[0]; })) {
        prof.pattern = SdPattern::Constant;
        prof.step = d[0];
        return prof;
    }

    // A 4-cycle needs six consecutive differences (one and a half periods).
    // One stray difference may be dropped at either end of the 25-term window.
    for (size_t lo = 0; lo <= 1; ++lo) {
        for (size_t hi = 0; hi <= 1; ++hi) {
            if (d.size() < lo + hi + 6)
                continue;
            std::vector<int> w(d.begin() + lo, d.end() - hi);
            if (!four_periodic(w))
                continue;
            std::vector<int> head(w.begin(), w.begin() + 4);
            if (std::all_of(head.begin(), head.end(), [&](int x) { return x == head[0]; }))
                continue;
            prof.pattern = SdPattern::Cycle;
            prof.cycle = rotate_left(head, least_rotation(head));
            for (const auto &known : kKnownCycles)
                for (size_t s = 0; s < 4; ++s)
                    if (rotate_left(head, s) == known)
                        prof.cycle = known;
            return prof;
        }
    }
    prof.pattern = SdPattern::Unrecognized;
    return prof;
}

std::string describe(const DigitSumProfile &prof)
{
    switch (prof.pattern) {
    case SdPattern::Constant:
        return fmt::format("Constant({})", prof.step);
    case SdPattern::Cycle:
        return fmt::format("Cycle({})", fmt::join(prof.cycle, ","));
    default:
        return "Unrecognized";
    }
}

DivisibilityPattern divisibility_positions(const QuadPoly &p, int64_t k)
{
    if (k < 2)
        throw std::domain_error("divisibility_positions: k must be >= 2");
    ResidueCycle rc = residue_cycle(p, k, 1);
    DivisibilityPattern dp{k, rc.period, {}};
    for (int64_t i = 0; i < rc.period; ++i)
        if (rc.cycle[static_cast<size_t>(i)] == 0)
            dp.positions.push_back(i);
    return dp;
}

SixClass six_classify(int64_t n)
{
    if (n < 1)
        throw std::domain_error("six_classify: n must be >= 1");
    switch (n % 6) {
    case 5:
        return SixClass::SQ1;
    case 1:
        return SixClass::SQ2;
    default:
        return SixClass::Other;
    }
}

const char *to_string(SixClass c)
{
    switch (c) {
    case SixClass::SQ1:
        return "SQ1";
    case SixClass::SQ2:
        return "SQ2";
    default:
        return "Other";
    }
}

} // namespace sqspiral
