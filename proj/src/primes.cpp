#include "sqspiral/primes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sqspiral {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m)
{
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m)
{
    uint64_t r = 1 % m;
    a %= m;
    for (; e; e >>= 1) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
    }
    return r;
}

bool is_prime(uint64_t n)
{
    if (n < 2)
        return false;
    static const uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (uint64_t p : small) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // the first twelve primes are a complete witness set below 3.3e24
    for (uint64_t a : small) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

namespace {

// Brent's cycle variant of Pollard rho; seeds are fixed so runs are reproducible
uint64_t rho(uint64_t n)
{
    if (n % 2 == 0)
        return 2;
    for (uint64_t c = 1;; ++c) {
        auto f = [&](uint64_t x) { return (mulmod(x, x, n) + c) % n; };
        uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        const uint64_t m = 128;
        for (uint64_t r = 1; g == 1; r <<= 1) {
            x = y;
            for (uint64_t i = 0; i < r; ++i)
                y = f(y);
            for (uint64_t k = 0; k < r && g == 1; k += m) {
                ys = y;
                for (uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void split(uint64_t n, std::map<uint64_t, int> &out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    uint64_t d = rho(n);
    split(d, out);
    split(n / d, out);
}

} // namespace

unsigned __int128 Factorization::product() const
{
    unsigned __int128 r = 1;
    for (auto [p, e] : factors)
        for (int i = 0; i < e; ++i)
            r *= p;
    return r;
}

Factorization factorize(uint64_t n)
{
    if (n < 2)
        throw std::domain_error("factorize: n must be >= 2");
    std::map<uint64_t, int> found;
    uint64_t m = n;
    for (uint64_t p = 2; p < 1000 && p * p <= m; p += (p == 2 ? 1 : 2))
        while (m % p == 0) {
            ++found[p];
            m /= p;
        }
    split(m, found);
    Factorization f{n, {}};
    for (auto [p, e] : found)
        f.factors.emplace_back(p, e);
    return f;
}

std::string to_string(const Factorization &f)
{
    std::string s;
    for (auto [p, e] : f.factors) {
        if (!s.empty())
            s += '*';
        s += std::to_string(p);
        if (e > 1)
            s += '^' + std::to_string(e);
    }
    return s;
}

uint64_t smallest_prime_factor(uint64_t n)
{
    if (n < 2)
        throw std::domain_error("smallest_prime_factor: n must be >= 2");
    return factorize(n).factors.front().first;
}

std::vector<uint64_t> primes_up_to(uint64_t bound)
{
    std::vector<uint64_t> primes;
    if (bound < 2)
        return primes;
    std::vector<bool> composite(bound + 1, false);
    for (uint64_t i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (uint64_t j = i * i; j <= bound; j += i)
            composite[j] = true;
    }
    return primes;
}

} // namespace sqspiral
