#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sqspiral/quadpoly.hpp"

namespace sqspiral {

// Sachs number spiral: r = sqrt(n), theta = sqrt(n) full rotations
struct NumberSpiralPoint {
    int64_t n = 0;
    double r = 0;
    double theta_rotations = 0;
};

NumberSpiralPoint ns_polar(int64_t n);

struct CurvePoint {
    int64_t n = 0;
    double r = 0;
    double theta_rotations = 0;
};

// r = sqrt(f(n)), theta = r - n sqrt(a), for n in [0, count)
std::vector<CurvePoint> offset_curve_points(const QuadPoly &p, int64_t count);

struct Rational {
    int64_t num = 0;
    int64_t den = 1;
    friend bool operator==(const Rational &, const Rational &) = default;
};

struct OffsetCurve {
    QuadPoly poly;
    bool is_offset = false;    // a is a perfect square
    bool is_composite = false; // offset curve with c == 0
    std::optional<Rational> angle; // rotations, composite curves only
};

OffsetCurve classify_offset(const QuadPoly &p);

struct CompositeParams {
    int64_t a = 0;
    int64_t b = 0;
    Rational offset;
};

CompositeParams composite_params(int64_t angle_num, int64_t angle_den);
QuadPoly composite_poly(int64_t angle_num, int64_t angle_den);

// f(x) = x (a x + b) for c == 0
std::pair<int64_t, int64_t> composite_factor(const QuadPoly &p, int64_t x);

// standard square spiral: 1 at the origin, first step +x, counter-clockwise
struct UlamCoord {
    int64_t n = 0;
    int64_t x = 0;
    int64_t y = 0;
};

UlamCoord ulam_coord(int64_t n);

// decimate(p, 3, r) for r = 0, 1, 2
std::array<QuadPoly, 3> sqrt_spiral_counterparts(const QuadPoly &p);

// interior angle at k = t of the triangle through the pronics k(k+1), k = t-1, t, t+1,
// placed on the square-root spiral
double pronic_triangle_angle(int64_t t);

} // namespace sqspiral
