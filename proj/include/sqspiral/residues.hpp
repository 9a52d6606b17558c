#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sqspiral/quadpoly.hpp"

namespace sqspiral {

struct ResidueCycle {
    int64_t k = 1;
    int64_t t0 = 1;
    std::vector<int64_t> cycle; // f(t0 + i) mod k, one period
    int64_t period = 1;
    std::vector<int64_t> canonical; // lexicographically smallest rotation of cycle
    int64_t phase = 0;              // cycle[i] == canonical[(phase + i) % period]
};

ResidueCycle residue_cycle(const QuadPoly &p, int64_t k, int64_t t0 = 1);

std::set<int> ending_alphabet(const QuadPoly &p);

int digit_sum(uint64_t n);

enum class SdPattern { Constant, Cycle, Unrecognized };

struct DigitSumProfile {
    std::vector<int> sd_values;
    std::vector<int> ordered_distinct;
    std::vector<int> diffs; // consecutive differences of ordered_distinct
    SdPattern pattern = SdPattern::Unrecognized;
    int step = 0;           // Constant
    std::vector<int> cycle; // Cycle
};

DigitSumProfile sd_profile(const QuadPoly &p, int n = 25);
std::string describe(const DigitSumProfile &prof);

struct DivisibilityPattern {
    int64_t k = 1;
    int64_t period = 1;
    std::vector<int64_t> positions; // offsets from term 1 within one period
};

DivisibilityPattern divisibility_positions(const QuadPoly &p, int64_t k);

enum class SixClass { SQ1, SQ2, Other };

SixClass six_classify(int64_t n);
const char *to_string(SixClass c);

} // namespace sqspiral
