#include "sqspiral/factorlab.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "sqspiral/spiral.hpp"

namespace sqspiral {

namespace {

uint64_t mod_u(i128 v, uint64_t q)
{
    i128 r = v % static_cast<i128>(q);
    return static_cast<uint64_t>(r < 0 ? r + q : r);
}

uint64_t eval_mod(const QuadPoly &f, uint64_t t, uint64_t q)
{
    unsigned __int128 a = mod_u(f.a, q), b = mod_u(f.b, q), c = mod_u(f.c, q);
    return static_cast<uint64_t>(((a * t % q) * t % q + b * t % q + c) % q);
}

std::vector<uint64_t> cyclic_gaps(const std::vector<uint64_t> &roots, uint64_t q)
{
    std::vector<uint64_t> gaps;
    for (size_t i = 0; i < roots.size(); ++i) {
        uint64_t next = i + 1 < roots.size() ? roots[i + 1] : roots[0] + q;
        gaps.push_back(next - roots[i]);
    }
    return gaps;
}

uint64_t inverse_mod(uint64_t a, uint64_t p)
{
    return powmod(a, p - 2, p);
}

} // namespace

int legendre(i128 a, uint64_t p)
{
    uint64_t r = mod_u(a, p);
    if (r == 0)
        return 0;
    return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::optional<uint64_t> sqrt_mod(uint64_t n, uint64_t p)
{
    n %= p;
    if (n == 0)
        return 0;
    if (p == 2)
        return n;
    if (powmod(n, (p - 1) / 2, p) != 1)
        return std::nullopt;
    uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    uint64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1)
        ++z;
    uint64_t m = static_cast<uint64_t>(s);
    uint64_t c = powmod(z, q, p);
    uint64_t t = powmod(n, q, p);
    uint64_t r = powmod(n, (q + 1) / 2, p);
    while (t != 1) {
        uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        uint64_t b = c;
        for (uint64_t j = 0; j + 1 < m - i; ++j)
            b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return std::min(r, p - r);
}

std::vector<uint64_t> brute_force_roots(const QuadPoly &f, uint64_t q)
{
    std::vector<uint64_t> roots;
    for (uint64_t t = 0; t < q; ++t)
        if (eval_mod(f, t, q) == 0)
            roots.push_back(t);
    return roots;
}

RootClasses root_classes(const QuadPoly &f, uint64_t q)
{
    if (!is_prime(q))
        throw std::domain_error("root_classes: modulus must be prime");
    RootClasses rc{q, {}, {}};
    if (q < 10000) {
        rc.roots = brute_force_roots(f, q);
    } else if (mod_u(f.a, q) == 0) {
        uint64_t b = mod_u(f.b, q), c = mod_u(f.c, q);
        if (b != 0)
            rc.roots.push_back(mulmod((q - c) % q, inverse_mod(b, q), q));
        else if (c == 0)
            rc.roots = brute_force_roots(f, q); // f vanishes identically mod q
    } else {
        auto s = sqrt_mod(mod_u(f.discriminant(), q), q);
        if (s) {
            uint64_t inv2a = inverse_mod(mod_u(2 * i128(f.a), q), q);
            uint64_t mb = (q - mod_u(f.b, q)) % q;
            uint64_t r1 = mulmod((mb + *s) % q, inv2a, q);
            uint64_t r2 = mulmod((mb + q - *s) % q, inv2a, q);
            rc.roots.push_back(r1);
            if (r2 != r1)
                rc.roots.push_back(r2);
            std::sort(rc.roots.begin(), rc.roots.end());
        }
    }
    rc.gaps = cyclic_gaps(rc.roots, q);
    return rc;
}

AdmissiblePrimes admissible_primes(const QuadPoly &f, uint64_t bound)
{
    if (bound < 2)
        throw std::domain_error("admissible_primes: bound must be >= 2");
    AdmissiblePrimes ap{f, bound, {}, f.discriminant()};
    for (uint64_t q : primes_up_to(bound)) {
        bool hit;
        if (q == 2 || mod_u(f.a, q) == 0)
            hit = !root_classes(f, q).roots.empty();
        else
            hit = legendre(ap.discriminant, q) >= 0;
        if (hit)
            ap.primes.push_back(q);
    }
    return ap;
}

SplittingComparison same_splitting(const QuadPoly &pa, const QuadPoly &pb, uint64_t bound)
{
    if (bound < 2)
        throw std::domain_error("same_splitting: bound must be >= 2");
    SplittingComparison sc;
    sc.disc_a = pa.discriminant();
    sc.disc_b = pb.discriminant();
    for (uint64_t q : primes_up_to(bound)) {
        RootClasses ra = root_classes(pa, q), rb = root_classes(pb, q);
        auto ga = ra.gaps, gb = rb.gaps;
        std::sort(ga.begin(), ga.end());
        std::sort(gb.begin(), gb.end());
        if (sc.same && (ra.roots.empty() != rb.roots.empty() || ga != gb)) {
            sc.same = false;
            sc.witness = q;
        }
        sc.a.push_back(std::move(ra));
        sc.b.push_back(std::move(rb));
    }
    return sc;
}

double DensityReport::prime_share() const
{
    return records.empty() ? 0.0 : double(prime_count) / double(records.size());
}

double DensityReport::coprime_share() const
{
    return records.empty() ? 0.0 : double(coprime_count) / double(records.size());
}

namespace {

DensityRecord scan_one(const QuadPoly &f, int64_t x)
{
    DensityRecord r;
    r.x = x;
    r.value = f(x);
    if (r.value >= 2) {
        auto v = static_cast<uint64_t>(r.value);
        r.is_prime = is_prime(v);
        r.coprime30 = v % 2 && v % 3 && v % 5;
        if (!r.is_prime)
            r.factors = factorize(v);
    } else if (r.value != 0) {
        uint64_t v = r.value < 0 ? 0 - static_cast<uint64_t>(r.value) : 1;
        r.coprime30 = v % 2 && v % 3 && v % 5;
    }
    return r;
}

} // namespace

DensityReport density_scan(const QuadPoly &f, int64_t x0, int64_t x1, unsigned threads)
{
    DensityReport rep;
    rep.poly = f;
    rep.x0 = x0;
    rep.x1 = x1;
    if (x1 <= x0)
        return rep;
    auto n = static_cast<size_t>(x1 - x0);
    rep.records.resize(n);
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<size_t>(n, 64))));

    auto work = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i)
            rep.records[i] = scan_one(f, x0 + static_cast<int64_t>(i));
    };
    if (threads == 1) {
        work(0, n);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (unsigned k = 0; k < threads; ++k) {
            size_t lo = n * k / threads, hi = n * (k + 1) / threads;
            pool.emplace_back([&, k, lo, hi] {
                try {
                    work(lo, hi);
                } catch (...) {
                    errors[k] = std::current_exception();
                }
            });
        }
        for (auto &t : pool)
            t.join();
        for (auto &e : errors)
            if (e)
                std::rethrow_exception(e);
    }
    for (const auto &r : rep.records) {
        rep.prime_count += r.is_prime;
        rep.coprime_count += r.coprime30;
    }
    return rep;
}

double arm_step_angle(const QuadPoly &f, int64_t t)
{
    return angle_between(f(t), f(t + 1));
}

ArmChainResult detect_arm_chain(int64_t seed, int64_t d2, size_t length)
{
    if (seed < 1)
        throw std::domain_error("detect_arm_chain: seed must be >= 1");
    if (d2 < 1)
        throw std::domain_error("detect_arm_chain: d2 must be positive");
    if (length < 2)
        throw std::domain_error("detect_arm_chain: length must be >= 2");

    const size_t scored = 10;
    size_t steps = std::max(length - 1, scored);
    double centre = 2 * kPi * std::sqrt(static_cast<double>(seed));
    auto lo = static_cast<int64_t>(std::ceil(centre - 15.0));
    auto hi = static_cast<int64_t>(std::floor(centre + 15.0));
    if (lo % 2)
        ++lo;
    lo = std::max<int64_t>(lo, 2);

    ArmChainResult res{seed, d2, {}};
    for (int64_t delta = lo; delta <= hi; delta += 2) {
        ChainCandidate c{delta, {seed, seed + delta}, {}, 0.0};
        while (c.chain.size() < steps + 1) {
            size_t k = c.chain.size();
            c.chain.push_back(2 * c.chain[k - 1] - c.chain[k - 2] + d2);
        }
        for (size_t t = 0; t < steps; ++t)
            c.drift.push_back(angle_between(c.chain[t], c.chain[t + 1]) - 2 * kPi);
        for (size_t t = 0; t < scored; ++t)
            c.score = std::max(c.score, std::fabs(c.drift[t]));
        c.chain.resize(length);
        c.drift.resize(length - 1);
        res.candidates.push_back(std::move(c));
    }
    if (res.candidates.empty())
        throw NotFound("detect_arm_chain: no even first step in the search window");
    std::stable_sort(res.candidates.begin(), res.candidates.end(),
                     [](const ChainCandidate &x, const ChainCandidate &y) { return x.score < y.score; });
    return res;
}

} // namespace sqspiral
