#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "sqspiral/primes.hpp"
#include "sqspiral/spiral.hpp"
#include "sqspiral/spirals.hpp"

using namespace sqspiral;

namespace {

// walk the square spiral step by step: right, up, left, down with run lengths 1,1,2,2,3,3,...
std::vector<std::pair<int64_t, int64_t>> ulam_walk(int64_t count)
{
    std::vector<std::pair<int64_t, int64_t>> pts{{0, 0}};
    const int dx[] = {1, 0, -1, 0}, dy[] = {0, 1, 0, -1};
    int64_t x = 0, y = 0, run = 1;
    int dir = 0;
    while (int64_t(pts.size()) < count) {
        for (int rep = 0; rep < 2; ++rep) {
            for (int64_t s = 0; s < run && int64_t(pts.size()) < count; ++s) {
                x += dx[dir];
                y += dy[dir];
                pts.emplace_back(x, y);
            }
            dir = (dir + 1) % 4;
        }
        ++run;
    }
    return pts;
}

std::vector<int64_t> vals(const QuadPoly &p, int64_t n)
{
    return values(p, 0, size_t(n));
}

} // namespace

TEST_CASE("number spiral polar")
{
    NumberSpiralPoint z = ns_polar(0);
    CHECK(z.r == 0.0);
    CHECK(z.theta_rotations == 0.0);
    NumberSpiralPoint s = ns_polar(16);
    CHECK(s.r == 4.0);
    CHECK(s.theta_rotations == 4.0);
    NumberSpiralPoint two = ns_polar(2);
    CHECK(two.r == doctest::Approx(std::sqrt(2.0)));
    CHECK(two.theta_rotations == two.r);
    CHECK_THROWS_AS(ns_polar(-1), std::domain_error);

    for (int64_t m = 0; m <= 100000; ++m) {
        double th = ns_polar(m * m).theta_rotations;
        REQUIRE(std::fabs(th - std::round(th)) <= 1e-12 * std::max(1.0, th));
    }
}

TEST_CASE("offset curves")
{
    for (const auto &pt : offset_curve_points({1, 0, 0}, 1000))
        CHECK(pt.theta_rotations == 0.0);

    auto third = offset_curve_points({9, 2, 0}, 100001);
    CHECK(std::fabs(third.back().theta_rotations - 1.0 / 3) < 1e-5);
    auto pronic = offset_curve_points({1, 1, 0}, 100001);
    CHECK(std::fabs(pronic.back().theta_rotations - 0.5) < 1e-5);
    CHECK(pronic[3].r == doctest::Approx(std::sqrt(12.0)));
    CHECK(pronic[3].theta_rotations == doctest::Approx(std::sqrt(12.0) - 3));

    CHECK_THROWS_AS(offset_curve_points({2, 0, 0}, 10), std::invalid_argument);
    try {
        offset_curve_points({1, -5, 0}, 10);
        FAIL("expected a domain error");
    } catch (const std::domain_error &e) {
        CHECK(std::string(e.what()).find("f(1)") != std::string::npos);
    }
}

TEST_CASE("offset and composite classification")
{
    OffsetCurve c = classify_offset({9, 2, 0});
    CHECK(c.is_offset);
    CHECK(c.is_composite);
    REQUIRE(c.angle.has_value());
    CHECK(*c.angle == Rational{1, 3});

    OffsetCurve off = classify_offset({1, 1, 41});
    CHECK(off.is_offset);
    CHECK_FALSE(off.is_composite);
    CHECK_FALSE(off.angle.has_value());

    CHECK_FALSE(classify_offset({10, 0, 0}).is_offset);
    CHECK_FALSE(classify_offset({10, 0, 0}).is_composite);
    CHECK(*classify_offset({1, 0, 0}).angle == Rational{0, 1});
    CHECK(*classify_offset({4, 1, 0}).angle == Rational{1, 4});
}

TEST_CASE("composite parameters")
{
    CompositeParams t = composite_params(1, 3);
    CHECK(t.a == 9);
    CHECK(t.b == 2);
    CHECK(t.offset == Rational{1, 9});
    CompositeParams q = composite_params(1, 4);
    CHECK(q.a == 4);
    CHECK(q.b == 1);
    CHECK(q.offset == Rational{1, 16});
    CompositeParams zero = composite_params(0, 1);
    CHECK(zero.a == 1);
    CHECK(zero.b == 0);
    CHECK(zero.offset == Rational{0, 1});
    CHECK(composite_params(2, 6).a == 9); // reduced first
    CHECK(composite_poly(1, 3) == QuadPoly{9, 2, 0});
    CHECK_THROWS_AS(composite_params(1, 0), std::domain_error);

    CHECK(composite_factor({9, 2, 0}, 2) == std::pair<int64_t, int64_t>{2, 20});
    CHECK(composite_factor({1, 1, 0}, 5) == std::pair<int64_t, int64_t>{5, 6});
    CHECK(composite_factor({9, 2, 0}, 0) == std::pair<int64_t, int64_t>{0, 2});
    CHECK_THROWS_AS(composite_factor({1, 1, 41}, 3), std::invalid_argument);
}

TEST_CASE("property: composite curves never take prime values")
{
    for (int64_t d = 1; d <= 12; ++d) {
        for (int64_t n = 0; n < d; ++n) {
            if (std::gcd(n, d) != 1 && !(n == 0 && d == 1))
                continue;
            QuadPoly f = composite_poly(n, d);
            OffsetCurve oc = classify_offset(f);
            REQUIRE(oc.is_composite);
            REQUIRE(oc.angle.has_value());
            CHECK(*oc.angle == Rational{n, d});
            for (int64_t x = 2; x <= 1000; ++x) {
                auto [u, v] = composite_factor(f, x);
                REQUIRE(u * v == f(x));
                REQUIRE_FALSE(is_prime(uint64_t(f(x))));
            }
        }
    }
}

TEST_CASE("ulam coordinates")
{
    CHECK(ulam_coord(1).x == 0);
    CHECK(ulam_coord(1).y == 0);
    CHECK(ulam_coord(9).x == 1);
    CHECK(ulam_coord(9).y == -1);
    CHECK(ulam_coord(25).x == 2);
    CHECK(ulam_coord(25).y == -2);
    CHECK(ulam_coord(2).x == 1);
    CHECK(ulam_coord(2).y == 0);
    CHECK_THROWS_AS(ulam_coord(0), std::domain_error);

    auto walk = ulam_walk(200000);
    for (int64_t n = 1; n <= 200000; ++n) {
        UlamCoord u = ulam_coord(n);
        REQUIRE(u.x == walk[size_t(n - 1)].first);
        REQUIRE(u.y == walk[size_t(n - 1)].second);
    }
}

TEST_CASE("property: ulam rings, neighbours and square diagonals")
{
    UlamCoord prev = ulam_coord(1);
    for (int64_t n = 2; n <= 100000; ++n) {
        UlamCoord u = ulam_coord(n);
        REQUIRE(std::abs(u.x - prev.x) + std::abs(u.y - prev.y) == 1);
        auto k = int64_t(std::ceil((std::sqrt(double(n)) - 1) / 2));
        REQUIRE(std::max(std::abs(u.x), std::abs(u.y)) == k);
        prev = u;
    }
    for (int64_t k = 1; k <= 150; ++k) {
        UlamCoord odd = ulam_coord((2 * k + 1) * (2 * k + 1));
        CHECK(odd.x == k);
        CHECK(odd.y == -k);
        UlamCoord even = ulam_coord(4 * k * k);
        CHECK(even.x == 1 - k);
        CHECK(even.y == k);
    }
}

TEST_CASE("square-root spiral counterparts")
{
    auto euler = sqrt_spiral_counterparts({1, 1, 41});
    CHECK(vals(euler[0], 6) == std::vector<int64_t>{41, 53, 83, 131, 197, 281});
    CHECK(vals(euler[1], 6) == std::vector<int64_t>{43, 61, 97, 151, 223, 313});
    CHECK(vals(euler[2], 5) == std::vector<int64_t>{47, 71, 113, 173, 251});

    auto sq = sqrt_spiral_counterparts({1, 0, 0});
    CHECK(vals(sq[0], 4) == std::vector<int64_t>{0, 9, 36, 81});
    CHECK(vals(sq[1], 4) == std::vector<int64_t>{1, 16, 49, 100});
    CHECK(vals(sq[2], 4) == std::vector<int64_t>{4, 25, 64, 121});

    auto pr = sqrt_spiral_counterparts({1, 1, 0});
    CHECK(vals(pr[0], 4) == std::vector<int64_t>{0, 12, 42, 90});
    CHECK(vals(pr[1], 4) == std::vector<int64_t>{2, 20, 56, 110});
    CHECK(vals(pr[2], 3) == std::vector<int64_t>{6, 30, 72});

    // squares of one residue class mod 3 share an arm on the square-root spiral
    AngleTable t(1, 200 * 200);
    for (int r = 0; r < 3; ++r)
        for (int64_t m = 20 + r; m + 3 < 200; m += 3) {
            double step = std::remainder(t.at(sq[size_t(r)]((m + 3) / 3)) - t.at(sq[size_t(r)](m / 3)), 2 * kPi);
            CHECK(std::fabs(step * 180 / kPi + (360 - 3 * kSquareArmAngleDeg)) < 0.1);
        }
}

TEST_CASE("property: counterparts partition the values")
{
    for (const QuadPoly &p : {QuadPoly{1, 1, 41}, QuadPoly{1, 0, 0}, QuadPoly{11, -31, 31}, QuadPoly{9, 9, -1}}) {
        auto arms = sqrt_spiral_counterparts(p);
        std::vector<int64_t> whole = vals(p, 300), parts;
        for (const auto &a : arms)
            for (int64_t v : vals(a, 100))
                parts.push_back(v);
        std::sort(whole.begin(), whole.end());
        std::sort(parts.begin(), parts.end());
        CHECK(whole == parts);
    }
}

TEST_CASE("pronic triangle angle")
{
    const double target = kPi - 2;
    CHECK(std::fabs(pronic_triangle_angle(10000) - target) <= 1e-2);
    CHECK(std::fabs(pronic_triangle_angle(100) - target) < 0.1);
    CHECK_THROWS_AS(pronic_triangle_angle(1), std::domain_error);
    // the supplement is two radians, the square-arm step
    CHECK(std::fabs((kPi - target) * 180 / kPi - kSquareArmAngleDeg) < 1e-9);

    double prev = std::fabs(pronic_triangle_angle(10) - target);
    for (int64_t t : {100LL, 1000LL, 10000LL, 100000LL}) {
        double err = std::fabs(pronic_triangle_angle(t) - target);
        CHECK(err < prev);
        prev = err;
    }
}
