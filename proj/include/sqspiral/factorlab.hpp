#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sqspiral/primes.hpp"
#include "sqspiral/quadpoly.hpp"

namespace sqspiral {

struct RootClasses {
    uint64_t p = 0;
    std::vector<uint64_t> roots; // ascending residues t mod p with p | f(t)
    std::vector<uint64_t> gaps;  // cyclic distances between consecutive roots, starting after roots[0]
};

// Tonelli-Shanks; p an odd prime
std::optional<uint64_t> sqrt_mod(uint64_t n, uint64_t p);
int legendre(i128 a, uint64_t p);

std::vector<uint64_t> brute_force_roots(const QuadPoly &f, uint64_t q);
RootClasses root_classes(const QuadPoly &f, uint64_t q);

struct AdmissiblePrimes {
    QuadPoly poly;
    uint64_t bound = 0;
    std::vector<uint64_t> primes;
    i128 discriminant = 0;
};

AdmissiblePrimes admissible_primes(const QuadPoly &f, uint64_t bound);

struct SplittingComparison {
    bool same = true;
    std::optional<uint64_t> witness; // first prime where the two disagree
    i128 disc_a = 0;
    i128 disc_b = 0;
    std::vector<RootClasses> a; // per prime up to the bound, admissible or not
    std::vector<RootClasses> b;
};

SplittingComparison same_splitting(const QuadPoly &pa, const QuadPoly &pb, uint64_t bound);

struct DensityRecord {
    int64_t x = 0;
    int64_t value = 0;
    bool is_prime = false;
    bool coprime30 = false;
    Factorization factors; // empty unless value is composite
};

struct DensityReport {
    QuadPoly poly;
    int64_t x0 = 0;
    int64_t x1 = 0;
    std::vector<DensityRecord> records;
    size_t prime_count = 0;
    size_t coprime_count = 0;

    double prime_share() const;
    double coprime_share() const;
};

// [x0, x1); threads > 1 splits the window, results are identical to a sequential scan
DensityReport density_scan(const QuadPoly &f, int64_t x0, int64_t x1, unsigned threads = 1);

class NotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ChainCandidate {
    int64_t delta1 = 0;
    std::vector<int64_t> chain;
    std::vector<double> drift; // per step: angle swept minus one full turn
    double score = 0;          // max |drift| over the first 10 steps
};

struct ArmChainResult {
    int64_t seed = 0;
    int64_t d2 = 0;
    std::vector<ChainCandidate> candidates; // best first

    const ChainCandidate &best() const { return candidates.front(); }
};

ArmChainResult detect_arm_chain(int64_t seed, int64_t d2, size_t length);

// angle swept on the spiral from f(t) to f(t+1)
double arm_step_angle(const QuadPoly &f, int64_t t);

} // namespace sqspiral
