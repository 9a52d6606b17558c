#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sqspiral {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod(uint64_t a, uint64_t e, uint64_t m);

// deterministic Miller-Rabin, exact for all 64-bit n
bool is_prime(uint64_t n);

struct Factorization {
    uint64_t n = 0;
    std::vector<std::pair<uint64_t, int>> factors; // ascending primes

    unsigned __int128 product() const;
};

Factorization factorize(uint64_t n);
// "29*2731*31573", "7^2", "17^3*13"
std::string to_string(const Factorization &f);
uint64_t smallest_prime_factor(uint64_t n);

std::vector<uint64_t> primes_up_to(uint64_t bound);

} // namespace sqspiral
