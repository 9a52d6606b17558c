#include "sqspiral/spiral.hpp"

#include <cmath>
#include <stdexcept>

namespace sqspiral {

SpiralConstants spiral_constants()
{
    return {kSpiralConstant, kPi, kSquareArmAngleDeg};
}

void CompensatedSum::add(double x)
{
    double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
        comp_ += (sum_ - t) + x;
    else
        comp_ += (x - t) + sum_;
    sum_ = t;
}

double angle_increment(int64_t n)
{
    if (n < 1)
        throw std::domain_error("angle_increment: n must be >= 1");
    return std::atan(1.0 / std::sqrt(static_cast<double>(n)));
}

double angle_between(int64_t first, int64_t last)
{
    if (first < 1)
        throw std::domain_error("angle_between: indices start at 1");
    if (last < first)
        return -angle_between(last, first);
    CompensatedSum s;
    for (int64_t k = first; k < last; ++k)
        s.add(std::atan(1.0 / std::sqrt(static_cast<double>(k))));
    return s.value();
}

double total_angle(int64_t n)
{
    if (n < 1)
        throw std::domain_error("total_angle: n must be >= 1");
    return angle_between(1, n);
}

namespace {

// binom(1/2, i)
double half_binom(int i)
{
    double r = 1.0;
    for (int l = 0; l < i; ++l)
        r *= (0.5 - l) / (l + 1);
    return r;
}

// sum_{m >= k} m^-s by Euler-Maclaurin, s > 1
double hurwitz_tail(double s, double k)
{
    double ks = std::pow(k, -s);
    return std::pow(k, 1.0 - s) / (s - 1.0) + ks / 2.0 + s * ks / (12.0 * k)
        - s * (s + 1) * (s + 2) * ks / (720.0 * k * k * k)
        + s * (s + 1) * (s + 2) * (s + 3) * (s + 4) * ks / (30240.0 * k * k * k * k * k);
}

} // namespace

double c2_tail(double k, int terms)
{
    // atan(1/sqrt m) - 2(sqrt(m+1) - sqrt m) = sum_j coef_j m^-(j+1/2), coef_0 = 0
    double t = 0.0;
    for (int j = 1; j <= terms; ++j) {
        double coef = (j % 2 ? -1.0 : 1.0) / (2 * j + 1) - 2.0 * half_binom(j + 1);
        t += coef * hurwitz_tail(j + 0.5, k);
    }
    return t;
}

double total_angle_fast(int64_t n, int terms)
{
    if (n < 10000)
        return total_angle(n);
    double x = static_cast<double>(n);
    return 2.0 * std::sqrt(x) + kSpiralConstant - c2_tail(x, terms);
}

double estimate_c2(int64_t k, bool accelerate, int terms)
{
    if (k < 2)
        throw std::domain_error("estimate_c2: k must be >= 2");
    double x = static_cast<double>(k);
    double raw = total_angle(k) - 2.0 * std::sqrt(x);
    return accelerate ? raw + c2_tail(x, terms) : raw;
}

SpiralPoint polar_of(int64_t n)
{
    double phi = total_angle(n);
    return {n, std::sqrt(static_cast<double>(n)), phi,
            static_cast<int64_t>(std::floor(phi / (2 * kPi)))};
}

AngleTable::AngleTable(int64_t base, int64_t last) : base_(base)
{
    if (base < 1 || last < base)
        throw std::domain_error("AngleTable: need 1 <= base <= last");
    prefix_.reserve(static_cast<size_t>(last - base + 1));
    CompensatedSum s;
    prefix_.push_back(0.0);
    for (int64_t k = base; k < last; ++k) {
        s.add(angle_increment(k));
        prefix_.push_back(s.value());
    }
}

double AngleTable::at(int64_t n) const
{
    if (n < base_ || n > last())
        throw std::out_of_range("AngleTable: index outside table");
    return prefix_[static_cast<size_t>(n - base_)];
}

double AngleTable::at(double m) const
{
    auto j = static_cast<int64_t>(std::floor(m));
    if (j == last())
        return at(j);
    double u2 = (m - static_cast<double>(j)) / static_cast<double>(j);
    return at(j) + std::atan(std::sqrt(u2));
}

double AngleTable::index_of(double angle) const
{
    double lo = static_cast<double>(base_), hi = static_cast<double>(last());
    if (angle < at(base_) || angle > at(last()))
        throw std::out_of_range("AngleTable: angle outside table");
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        if (at(mid) < angle)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double winding_gap(int64_t n)
{
    if (n < 2)
        throw std::domain_error("winding_gap: n must be >= 2");
    double rn = std::sqrt(static_cast<double>(n));
    auto last = static_cast<int64_t>(std::ceil((rn + kPi + 1.0) * (rn + kPi + 1.0))) + 1;
    AngleTable table(n, last);
    double m = table.index_of(2 * kPi);
    return std::sqrt(m) - rn;
}

double square_arm_angle(int64_t m)
{
    if (m < 1)
        throw std::domain_error("square_arm_angle: m must be >= 1");
    double deg = angle_between(m * m, (m + 1) * (m + 1)) * 180.0 / kPi;
    return std::fmod(deg, 360.0);
}

double delta_r(int64_t n)
{
    if (n < 1)
        throw std::domain_error("delta_r: n must be >= 1");
    // rationalized; avoids cancellation for large n
    double x = static_cast<double>(n);
    return 1.0 / (std::sqrt(x + 1.0) + std::sqrt(x));
}

} // namespace sqspiral
