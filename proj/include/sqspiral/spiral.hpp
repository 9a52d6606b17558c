#pragma once

#include <cstdint>
#include <vector>

namespace sqspiral {

inline constexpr double kPi = 3.14159265358979323846;
// lim (phi(k) - 2 sqrt(k)) as k -> inf, to 12 digits
inline constexpr double kSpiralConstant = -2.157782996659;
// 360/pi = 114.591559026165 degrees
inline constexpr double kSquareArmAngleDeg = 360.0 / kPi;

struct SpiralPoint {
    int64_t n;
    double radius;
    double angle_total; // radians from the ray sqrt(1) on +X, counter-clockwise
    int64_t wind;
};

struct SpiralConstants {
    double c2;
    double winding_gap_limit;
    double square_arm_angle_deg;
};

SpiralConstants spiral_constants();

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x);
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// atan(1/sqrt(n)), the angle of triangle n
double angle_increment(int64_t n);

// sum of angle_increment(k) for k in [first, last)
double angle_between(int64_t first, int64_t last);

// angle of the ray sqrt(n); total_angle(1) == 0
double total_angle(int64_t n);

// 2 sqrt(n) + c2 - tail(n); direct summation below 10^4
double total_angle_fast(int64_t n, int terms = 3);

// Euler-Maclaurin estimate of sum_{m >= k} (atan(1/sqrt m) - 2(sqrt(m+1) - sqrt m))
double c2_tail(double k, int terms = 3);

double estimate_c2(int64_t k, bool accelerate, int terms = 3);

SpiralPoint polar_of(int64_t n);

// Radial distance between the ray sqrt(n) and the point one full turn further out.
double winding_gap(int64_t n);

// Angle between rays m^2 and (m+1)^2 in degrees, full turns removed.
double square_arm_angle(int64_t m);

// sqrt(n+1) - sqrt(n)
double delta_r(int64_t n);

// Angles relative to a base ray, for indices in [base, last]. Immutable once built.
class AngleTable {
public:
    AngleTable(int64_t base, int64_t last);

    int64_t base() const { return base_; }
    int64_t last() const { return base_ + static_cast<int64_t>(prefix_.size()) - 1; }

    double at(int64_t n) const;
    // Fractional index m: the point on the outer leg of triangle floor(m) whose
    // distance from the centre is sqrt(m).
    double at(double m) const;
    // Fractional index whose angle equals `angle`; bisection, 60 steps.
    double index_of(double angle) const;

private:
    int64_t base_;
    std::vector<double> prefix_;
};

} // namespace sqspiral
