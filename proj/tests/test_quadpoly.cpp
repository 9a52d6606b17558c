#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "sqspiral/quadpoly.hpp"

using namespace sqspiral;

TEST_CASE("differences")
{
    DiffProfile d = differences({11, 41, 89, 155, 239});
    CHECK(d.first == std::vector<int64_t>{30, 48, 66, 84});
    CHECK(d.second == 18);

    d = differences({13, 49, 107, 187, 289, 413});
    CHECK(d.first == std::vector<int64_t>{36, 58, 80, 102, 124});
    CHECK(d.second == 22);

    d = differences({1, 2, 4});
    CHECK(d.first == std::vector<int64_t>{1, 2});
    CHECK(d.second == 1);

    CHECK_THROWS_AS(differences({1, 2}), std::invalid_argument);
    try {
        differences({1, 2, 4, 7, 12});
        FAIL("expected NotQuadratic");
    } catch (const NotQuadratic &e) {
        CHECK(e.index() == 2);
    }
}

TEST_CASE("extend")
{
    CHECK(extend({11, 41, 89}, 2) == std::vector<int64_t>{11, 41, 89, 155, 239});
    CHECK(extend({17, 53, 107}, 3) == std::vector<int64_t>{17, 53, 107, 179, 269, 377});
    CHECK(extend({0, 0, 0}, 5) == std::vector<int64_t>(8, 0));
    int64_t big = std::numeric_limits<int64_t>::max() / 2;
    CHECK_THROWS_AS(extend({0, big, 2 * big}, 3), std::range_error);
}

TEST_CASE("newton_fit")
{
    CHECK(newton_fit(1, 11, 41, 89) == QuadPoly{9, 3, -1});
    CHECK(newton_fit(1, 17, 53, 107) == QuadPoly{9, 9, -1});
    CHECK(newton_fit(1, 41, 43, 47) == QuadPoly{1, -1, 41});
    CHECK(newton_fit(0, 41, 43, 47) == QuadPoly{1, 1, 41});
    CHECK_THROWS_AS(newton_fit(1, 1, 2, 4), NonIntegral);
}

TEST_CASE("shift and decimate")
{
    CHECK(shift({9, 3, -1}, 1) == QuadPoly{9, 21, 11});
    CHECK(shift({11, -31, 31}, 1) == QuadPoly{11, -9, 11});
    CHECK(shift({5, -7, 2}, 0) == QuadPoly{5, -7, 2});

    CHECK(decimate({1, 1, 41}, 3, 0) == QuadPoly{9, 3, 41});
    QuadPoly sq = decimate({1, 0, 0}, 3, 1);
    CHECK(sq == QuadPoly{9, 6, 1});
    CHECK(values(sq, 0, 4) == std::vector<int64_t>{1, 16, 49, 100});
    CHECK(decimate({4, -3, 8}, 1, 0) == QuadPoly{4, -3, 8});
    CHECK_THROWS_AS(decimate({1, 0, 0}, 0, 0), std::domain_error);
}

TEST_CASE("evaluation is exact")
{
    const int64_t e30 = int64_t(1) << 30;
    QuadPoly p{e30, e30, e30};
    i128 x = e30;
    CHECK(p.exact(x) == i128(e30) * x * x + i128(e30) * x + e30);
    CHECK(p.exact(-x) == i128(e30) * x * x - i128(e30) * x + e30);
    CHECK_THROWS_AS(p(e30), std::range_error);
    CHECK(QuadPoly{1, 0, 0}(3037000499) == 9223372030926249001);
    CHECK_THROWS_AS((QuadPoly{1, 0, 0}(3037000500)), std::range_error);
}

TEST_CASE("text round trip")
{
    CHECK(to_string(QuadPoly{9, 3, -1}) == "9x^2+3x-1");
    CHECK(to_string(QuadPoly{1, -1, 41}) == "x^2-x+41");
    CHECK(to_string(QuadPoly{-1, 0, 0}) == "-x^2");
    CHECK(to_string(QuadPoly{0, 0, 0}) == "0");
    CHECK(to_string(QuadPoly{0, 0, -5}) == "-5");
    CHECK(parse_poly("9x^2+3x-1") == QuadPoly{9, 3, -1});
    CHECK(parse_poly("x^2 - x + 41") == QuadPoly{1, -1, 41});
    CHECK(parse_poly("9,3,-1") == QuadPoly{9, 3, -1});
    CHECK(parse_poly("-x^2") == QuadPoly{-1, 0, 0});
    CHECK(parse_poly("3x+2x^2") == QuadPoly{2, 3, 0});
    CHECK(parse_poly("7") == QuadPoly{0, 0, 7});
    for (const char *bad : {"", "x+", "9x^^2", "+", "1,2", "1,2,3,4", "abc", "x^3", "99999999999999999999x"})
        CHECK_THROWS_AS(parse_poly(bad), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        QuadPoly p{int64_t(rng() % 2001) - 1000, int64_t(rng() % 2001) - 1000, int64_t(rng() % 2001) - 1000};
        CHECK(parse_poly(to_string(p)) == p);
    }
    CHECK(to_string(-(i128(1) << 100)) == "-1267650600228229401496703205376");
    CHECK(to_string(i128(1) << 100) == "1267650600228229401496703205376");
}

TEST_CASE("coefficient rules")
{
    ArmSystem sys{"X18", 18, Rotation::P, {}};
    QuadPoly f1{9, 3, -1};
    Arm arm{"A3", {f1, shift(f1, 1), shift(f1, 2), shift(f1, 3)}, values(f1, 1, 6)};
    sys.arms.push_back(arm);
    RulesReport ok = coefficient_rules_check(sys);
    CHECK(ok.ok());

    ArmSystem wrong = sys;
    wrong.arms[0].fits[0].a = 10;
    RulesReport r1 = coefficient_rules_check(wrong);
    CHECK_FALSE(r1.ok());
    CHECK_FALSE(r1.arms[0].leading);

    ArmSystem bstep = sys;
    bstep.arms[0].fits[2].b += 1;
    CHECK_FALSE(coefficient_rules_check(bstep).arms[0].b_step);

    ArmSystem crule = sys;
    crule.arms[0].fits[3].c += 2;
    CHECK_FALSE(coefficient_rules_check(crule).arms[0].c_rule);
}

TEST_CASE("rotation letters")
{
    CHECK(to_char(Rotation::P) == 'P');
    CHECK(rotation_from_char('N') == Rotation::N);
    CHECK(rotation_from_char('-') == Rotation::Unspecified);
    CHECK_THROWS_AS(rotation_from_char('Q'), std::invalid_argument);
}

TEST_CASE("property: fit, shift and decimate round trips")
{
    std::mt19937_64 rng(12345);
    auto pick = [&](int64_t lo, int64_t hi) { return lo + int64_t(rng() % uint64_t(hi - lo + 1)); };
    for (int i = 0; i < 2000; ++i) {
        QuadPoly p{pick(-1000, 1000), pick(-1000, 1000), pick(-1000, 1000)};
        int64_t t0 = pick(-100000, 100000);
        REQUIRE(newton_fit(t0, p(t0), p(t0 + 1), p(t0 + 2)) == p);

        auto seq = values(p, 1, 12);
        REQUIRE(differences(seq).second == 2 * p.a);
        REQUIRE(extend({seq[0], seq[1], seq[2]}, 9) == seq);

        int64_t t = pick(-1000, 1000), x = pick(-1000, 1000);
        REQUIRE(shift(p, t)(x) == p(x + t));
        REQUIRE(shift(shift(p, t), -t) == p);

        int64_t m = pick(1, 7), r = pick(0, m - 1);
        REQUIRE(decimate(p, m, r)(x) == p(m * x + r));
    }
}

TEST_CASE("property: decimation partitions the value multiset")
{
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        QuadPoly p{int64_t(rng() % 21) - 10, int64_t(rng() % 41) - 20, int64_t(rng() % 101) - 50};
        int64_t m = 1 + int64_t(rng() % 6), T = 1 + int64_t(rng() % 30);
        std::vector<int64_t> whole = values(p, 0, size_t(m * T)), parts;
        for (int64_t r = 0; r < m; ++r) {
            auto v = values(decimate(p, m, r), 0, size_t(T));
            parts.insert(parts.end(), v.begin(), v.end());
        }
        std::sort(whole.begin(), whole.end());
        std::sort(parts.begin(), parts.end());
        REQUIRE(whole == parts);
    }
}
