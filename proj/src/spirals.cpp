#include "sqspiral/spirals.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "sqspiral/spiral.hpp"

namespace sqspiral {

namespace {

std::optional<int64_t> exact_sqrt(int64_t v)
{
    if (v < 0)
        return std::nullopt;
    auto s = static_cast<int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
    while (s > 0 && s * s > v)
        --s;
    while ((s + 1) * (s + 1) <= v)
        ++s;
    if (s * s != v)
        return std::nullopt;
    return s;
}

Rational reduced(int64_t num, int64_t den)
{
    int64_t g = std::gcd(num, den);
    if (g == 0)
        return {0, 1};
    if (den < 0)
        g = -g;
    return {num / g, den / g};
}

} // namespace

NumberSpiralPoint ns_polar(int64_t n)
{
    if (n < 0)
        throw std::domain_error("ns_polar: n must be >= 0");
    double r = std::sqrt(static_cast<double>(n));
    return {n, r, r};
}

std::vector<CurvePoint> offset_curve_points(const QuadPoly &p, int64_t count)
{
    auto s = exact_sqrt(p.a);
    if (!s)
        throw std::invalid_argument("offset_curve_points: leading coefficient is not a perfect square");
    std::vector<CurvePoint> pts;
    for (int64_t n = 0; n < count; ++n) {
        int64_t v = p(n);
        if (v < 0)
            throw std::domain_error(fmt::format("offset_curve_points: f({}) = {} is negative", n, v));
        double r = std::sqrt(static_cast<double>(v));
        // r - n s, rewritten to avoid cancellation: (b n + c) / (r + n s)
        double denom = r + static_cast<double>(n) * static_cast<double>(*s);
        double theta = denom == 0.0 ? 0.0 : static_cast<double>(i128(p.b) * n + p.c) / denom;
        pts.push_back({n, r, theta});
    }
    return pts;
}

OffsetCurve classify_offset(const QuadPoly &p)
{
    OffsetCurve oc;
    oc.poly = p;
    auto s = exact_sqrt(p.a);
    oc.is_offset = s.has_value() && *s > 0;
    oc.is_composite = oc.is_offset && p.c == 0;
    if (oc.is_composite) {
        Rational r = reduced(p.b, 2 * *s);
        // angles are taken mod one rotation
        r.num = ((r.num % r.den) + r.den) % r.den;
        oc.angle = r.num == 0 ? Rational{0, 1} : r;
    }
    return oc;
}

CompositeParams composite_params(int64_t angle_num, int64_t angle_den)
{
    if (angle_den <= 0)
        throw std::domain_error("composite_params: denominator must be positive");
    Rational r = reduced(angle_num, angle_den);
    int64_t n = r.num, d = r.den;
    if (d % 2) {
        n *= 2;
        d *= 2;
    }
    int64_t half = d / 2;
    return {half * half, n, reduced(n * n, d * d)};
}

QuadPoly composite_poly(int64_t angle_num, int64_t angle_den)
{
    CompositeParams cp = composite_params(angle_num, angle_den);
    return {cp.a, cp.b, 0};
}

std::pair<int64_t, int64_t> composite_factor(const QuadPoly &p, int64_t x)
{
    if (p.c != 0)
        throw std::invalid_argument("composite_factor: curve has a nonzero constant term");
    QuadPoly lin{0, p.a, p.b};
    return {x, lin(x)};
}

UlamCoord ulam_coord(int64_t n)
{
    if (n < 1)
        throw std::domain_error("ulam_coord: n must be >= 1");
    if (n == 1)
        return {1, 0, 0};
    // ring k holds ((2k-1)^2, (2k+1)^2]
    auto k = static_cast<int64_t>(std::ceil((std::sqrt(static_cast<double>(n)) - 1.0) / 2.0));
    while (k > 0 && (2 * k - 1) * (2 * k - 1) >= n)
        --k;
    while ((2 * k + 1) * (2 * k + 1) < n)
        ++k;
    int64_t d = n - (2 * k - 1) * (2 * k - 1);
    if (d <= 2 * k)
        return {n, k, -k + d};
    if (d <= 4 * k)
        return {n, k - (d - 2 * k), k};
    if (d <= 6 * k)
        return {n, -k, k - (d - 4 * k)};
    return {n, -k + (d - 6 * k), -k};
}

std::array<QuadPoly, 3> sqrt_spiral_counterparts(const QuadPoly &p)
{
    return {decimate(p, 3, 0), decimate(p, 3, 1), decimate(p, 3, 2)};
}

double pronic_triangle_angle(int64_t t)
{
    if (t < 2)
        throw std::domain_error("pronic_triangle_angle: t must be >= 2");
    int64_t n0 = (t - 1) * t, n1 = t * (t + 1), n2 = (t + 1) * (t + 2);
    // the interior angle is rotation invariant; n0 sits on the x axis
    double phi0 = 0.0;
    double phi1 = phi0 + angle_between(n0, n1);
    double phi2 = phi1 + angle_between(n1, n2);

    auto at = [](int64_t n, double phi) {
        double r = std::sqrt(static_cast<double>(n));
        return std::pair{r * std::cos(phi), r * std::sin(phi)};
    };
    auto [x0, y0] = at(n0, phi0);
    auto [x1, y1] = at(n1, phi1);
    auto [x2, y2] = at(n2, phi2);
    double ux = x0 - x1, uy = y0 - y1, vx = x2 - x1, vy = y2 - y1;
    return std::fabs(std::atan2(ux * vy - uy * vx, ux * vx + uy * vy));
}

} // namespace sqspiral
