#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "sqspiral/spiral.hpp"

using namespace sqspiral;

namespace {

// atan by its Taylor series, independent of the C library
double atan_series(double x)
{
    double sum = 0, term = x;
    for (int k = 0; k < 200; ++k) {
        sum += term / (2 * k + 1);
        term *= -x * x;
    }
    return sum;
}

double deg(double rad)
{
    return rad * 180.0 / kPi;
}

} // namespace

TEST_CASE("angle_increment")
{
    CHECK(angle_increment(1) == doctest::Approx(kPi / 4).epsilon(1e-15));
    CHECK(angle_increment(3) == doctest::Approx(kPi / 6).epsilon(1e-15));
    CHECK(std::fabs(angle_increment(16) - atan_series(0.25)) < 1e-15);
    CHECK(std::fabs(angle_increment(16) - 0.2449786631) < 1e-10);
    CHECK_THROWS_AS(angle_increment(0), std::domain_error);
    for (int64_t n = 1; n < 1000; ++n)
        CHECK(angle_increment(n + 1) < angle_increment(n));
}

TEST_CASE("total_angle small cases")
{
    CHECK(total_angle(1) == 0.0);
    CHECK(total_angle(2) == doctest::Approx(kPi / 4).epsilon(1e-15));
    // independent float sum of the 16 increments
    CHECK(std::fabs(total_angle(17) - 6.128731000915157) < 1e-12);
    CHECK(std::fabs(deg(total_angle(17)) - 351.15042) < 1e-5);
    CHECK(std::fabs(360.0 - deg(total_angle(17)) - 8.84957988) < 1e-5);
    CHECK_THROWS_AS(total_angle(0), std::domain_error);
}

TEST_CASE("total_angle_fast agrees with direct summation")
{
    for (int64_t n : {10000LL, 54321LL, 1000000LL, 10000000LL})
        CHECK(std::fabs(total_angle_fast(n) - total_angle(n)) < 1e-8);
    // below the threshold it is the direct sum
    CHECK(total_angle_fast(9999) == total_angle(9999));
    CHECK(total_angle_fast(17) == total_angle(17));
}

TEST_CASE("estimate_c2")
{
    CHECK(std::fabs(estimate_c2(1000000, true) - kSpiralConstant) <= 1e-9);
    CHECK(std::fabs(estimate_c2(100, false) - (-2.1578)) < 0.05);
    CHECK(std::fabs(estimate_c2(100, false) - (-2.141124675)) < 1e-9);
    CHECK_THROWS_AS(estimate_c2(1, true), std::domain_error);

    // accelerated estimate is flat across decades
    double e5 = estimate_c2(100000, true), e6 = estimate_c2(1000000, true), e7 = estimate_c2(10000000, true);
    CHECK(std::fabs(e5 - e6) <= 1e-9);
    CHECK(std::fabs(e6 - e7) <= 1e-9);

    // raw estimate decreases monotonically towards the limit
    double prev = estimate_c2(10, false);
    for (int64_t k : {100LL, 1000LL, 10000LL, 100000LL, 1000000LL}) {
        double cur = estimate_c2(k, false);
        CHECK(cur < prev);
        CHECK(cur > kSpiralConstant);
        prev = cur;
    }
}

TEST_CASE("estimate_c2 raw at 10^8" * doctest::timeout(60))
{
    CHECK(std::fabs(estimate_c2(100000000, false) - (-2.1578)) < 1e-4);
}

TEST_CASE("polar_of")
{
    SpiralPoint p1 = polar_of(1);
    CHECK(p1.radius == 1.0);
    CHECK(p1.angle_total == 0.0);
    CHECK(p1.wind == 0);
    SpiralPoint p2 = polar_of(2);
    CHECK(p2.radius == doctest::Approx(std::sqrt(2.0)));
    CHECK(p2.angle_total == doctest::Approx(kPi / 4));
    CHECK(p2.wind == 0);
    SpiralPoint p17 = polar_of(17);
    CHECK(std::fabs(deg(std::fmod(p17.angle_total, 2 * kPi)) - 351.15042) < 1e-5);
    CHECK(p17.wind == 0);
    CHECK(polar_of(18).wind == 1);
    for (int64_t n = 1; n < 2000; ++n) {
        SpiralPoint p = polar_of(n);
        CHECK(std::fabs(p.radius * p.radius - double(n)) <= 4 * (std::nextafter(double(n), 1e300) - double(n)));
        CHECK(p.wind == static_cast<int64_t>(std::floor(p.angle_total / (2 * kPi))));
    }
}

TEST_CASE("winding gap")
{
    CHECK(std::fabs(winding_gap(1000000) - kPi) <= 1e-3);
    CHECK(std::fabs(winding_gap(100) - kPi) < 0.05);
    CHECK_THROWS_AS(winding_gap(1), std::domain_error);

    // the approach to pi is one-sided and tightening
    double prev = 1.0;
    int side = 0;
    for (int64_t n : {100LL, 1000LL, 10000LL, 100000LL, 1000000LL}) {
        double d = winding_gap(n) - kPi;
        int s = d < 0 ? -1 : 1;
        if (side == 0)
            side = s;
        CHECK(s == side);
        CHECK(std::fabs(d) < prev);
        prev = std::fabs(d);
    }
    CHECK(side == -1); // observed: the gap approaches pi from below
}

TEST_CASE("square arm angle")
{
    CHECK(std::fabs(square_arm_angle(1000) - 114.5916) <= 0.01);
    CHECK(std::fabs(square_arm_angle(10) - 114.59) < 1.0);
    CHECK(kSquareArmAngleDeg == doctest::Approx(114.591559026165));
    CHECK(std::fabs(360.0 - 3 * kSquareArmAngleDeg - 16.2253) < 1e-4);
}

TEST_CASE("delta_r")
{
    CHECK(delta_r(1) == doctest::Approx(std::sqrt(2.0) - 1));
    CHECK(delta_r(4) == doctest::Approx(std::sqrt(5.0) - 2));
    CHECK(std::fabs(delta_r(1000000) - 0.0005) <= 1.3e-10);
    for (int64_t n = 1; n <= 100000; n += 7) {
        double x = double(n);
        CHECK(std::fabs(delta_r(n) - 1 / (2 * std::sqrt(x))) <= 1 / (4 * std::pow(x, 1.5)));
    }
    CHECK_THROWS_AS(delta_r(0), std::domain_error);
}

TEST_CASE("prefix differences match per-triangle angles up to 10^6")
{
    AngleTable t(1, 1000001);
    for (int64_t n = 1; n <= 1000000; ++n) {
        double diff = t.at(n + 1) - t.at(n);
        // tolerance relative to the accumulated angle, the quantity the difference is taken from
        REQUIRE(std::fabs(diff - angle_increment(n)) <= 1e-12 * std::max(1.0, t.at(n + 1)));
        REQUIRE(t.at(n + 1) > t.at(n));
    }
    CHECK(std::fabs(t.at(int64_t(1000000)) - total_angle(1000000)) < 1e-9);
}

TEST_CASE("AngleTable interpolation and inversion")
{
    AngleTable t(100, 200);
    CHECK(t.at(100.0) == 0.0);
    CHECK(t.at(150.0) == doctest::Approx(t.at(int64_t(150))));
    // radius at fractional m is sqrt(m): the point on the outer leg of triangle j
    double m = 150.25;
    double phi = t.at(m) - t.at(int64_t(150));
    CHECK(std::tan(phi) == doctest::Approx(std::sqrt(0.25) / std::sqrt(150.0)));
    CHECK(t.index_of(t.at(m)) == doctest::Approx(m).epsilon(1e-12));
    CHECK_THROWS_AS(t.at(int64_t(201)), std::out_of_range);
    CHECK_THROWS_AS(AngleTable(0, 5), std::domain_error);
}

TEST_CASE("squares form three interleaved arms")
{
    AngleTable t(1, 1001 * 1001);
    auto angle = [&](int64_t m) { return t.at(m * m); };
    auto wrap = [](double a) { return std::remainder(a, 2 * kPi); };

    // consecutive squares step by 360/pi degrees, each arm (m mod 3) turns back by 360 - 3*(360/pi)
    for (int64_t m = 100; m + 3 <= 1000; ++m) {
        CHECK(std::fabs(deg(angle(m + 1) - angle(m)) - kSquareArmAngleDeg) < 0.02);
        CHECK(std::fabs(deg(wrap(angle(m + 3) - angle(m))) + (360.0 - 3 * kSquareArmAngleDeg)) < 0.05);
    }

    // the arms are spirals, not rays: on [100, 1000] each residue class sweeps the full circle,
    // so the angles mod 2pi do not form three fixed clusters
    std::vector<double> a;
    for (int64_t m = 100; m <= 1000; ++m)
        a.push_back(std::fmod(angle(m), 2 * kPi));
    std::sort(a.begin(), a.end());
    double widest = 2 * kPi - a.back() + a.front();
    for (size_t i = 0; i + 1 < a.size(); ++i)
        widest = std::max(widest, a[i + 1] - a[i]);
    CHECK(deg(widest) < 5.0);
}

TEST_CASE("compensated sum")
{
    CompensatedSum s;
    s.add(1e16);
    s.add(1.0);
    s.add(-1e16);
    CHECK(s.value() == 1.0);
}

TEST_CASE("spiral constants")
{
    SpiralConstants c = spiral_constants();
    CHECK(c.c2 == kSpiralConstant);
    CHECK(c.winding_gap_limit == kPi);
    CHECK(c.square_arm_angle_deg == kSquareArmAngleDeg);
}
