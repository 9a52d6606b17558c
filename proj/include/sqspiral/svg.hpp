#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sqspiral/quadpoly.hpp"

namespace sqspiral {

// Minimal SVG writer. Coordinates are printed with four decimals and y points up.
class Svg {
public:
    Svg(double half_extent, double size_px = 800);

    void polyline(const std::vector<std::pair<double, double>> &pts, const std::string &stroke, double width);
    void line(double x0, double y0, double x1, double y1, const std::string &stroke, double width);
    void dot(double x, double y, double r, const std::string &fill);
    void label(double x, double y, const std::string &text, double size);
    void title(const std::string &text);

    std::string str() const;

private:
    double half_;
    double size_;
    std::string title_;
    std::string body_;
};

// every integer in [1, n] on the square-root spiral; primes and squares marked
std::string plot_sqrt_spiral(int64_t n);
// Sachs spiral, r = sqrt(k), theta = sqrt(k) turns
std::string plot_number_spiral(int64_t n);
// one dot per prime on the square spiral
std::string plot_ulam(int64_t n);
// arms of one system drawn over the square-root spiral, values up to n
std::string plot_arms(const ArmSystem &sys, int64_t n);
// one arm and its divisibility sub-arms decimate(f, q, r) for each root r mod q
std::string plot_fig7(const QuadPoly &f, const std::vector<uint64_t> &primes, int64_t n);

} // namespace sqspiral
