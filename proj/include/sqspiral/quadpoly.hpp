#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sqspiral {

using i128 = __int128;

class NotQuadratic : public std::runtime_error {
public:
    explicit NotQuadratic(size_t index);
    // index of the first second difference that disagrees with the one before it
    size_t index() const { return index_; }

private:
    size_t index_;
};

// leading coefficient would be a half-integer
class NonIntegral : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// f(x) = a x^2 + b x + c
struct QuadPoly {
    int64_t a = 0;
    int64_t b = 0;
    int64_t c = 0;

    // exact in 128 bits; range_error if that overflows
    i128 exact(i128 x) const;
    // range_error unless the value fits in int64
    int64_t operator()(int64_t x) const;
    i128 discriminant() const { return i128(b) * b - i128(4) * a * c; }

    friend bool operator==(const QuadPoly &, const QuadPoly &) = default;
};

std::string to_string(const QuadPoly &p);
std::string to_string(i128 v);
// "9x^2+3x-1", "x^2 - x + 41" or "9,3,-1"
QuadPoly parse_poly(std::string_view text);

struct DiffProfile {
    std::vector<int64_t> first;
    int64_t second = 0;
};

DiffProfile differences(const std::vector<int64_t> &seq);
std::vector<int64_t> extend(std::vector<int64_t> seq, size_t count);
std::vector<int64_t> values(const QuadPoly &p, int64_t x0, size_t count);

// the integer quadratic through (t0, y0), (t0+1, y1), (t0+2, y2)
QuadPoly newton_fit(int64_t t0, int64_t y0, int64_t y1, int64_t y2);
// q(x) = p(x + t)
QuadPoly shift(const QuadPoly &p, int64_t t);
// g(t) = p(m t + r)
QuadPoly decimate(const QuadPoly &p, int64_t m, int64_t r);

enum class Rotation { P, N, Unspecified };
char to_char(Rotation r);
Rotation rotation_from_char(char c);

struct Arm {
    std::string name;
    std::array<QuadPoly, 4> fits; // fit m+1 is fit m shifted by one
    std::vector<int64_t> terms;   // f1(1), f1(2), ...
};

struct ArmSystem {
    std::string name;
    int64_t d2 = 0;
    Rotation rotation = Rotation::Unspecified;
    std::vector<Arm> arms;
};

struct ArmRules {
    std::string arm;
    bool leading = true; // a == d2 / 2
    bool b_step = true;  // b grows by d2 from fit to fit
    bool c_rule = true;  // c of fit m equals term m-1
    std::string detail;
    bool ok() const { return leading && b_step && c_rule; }
};

struct RulesReport {
    std::string system;
    std::vector<ArmRules> arms;
    bool ok() const;
};

RulesReport coefficient_rules_check(const ArmSystem &sys);

} // namespace sqspiral
