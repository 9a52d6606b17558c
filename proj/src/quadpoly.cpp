#include "sqspiral/quadpoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include <fmt/format.h>

namespace sqspiral {

NotQuadratic::NotQuadratic(size_t index)
    : std::runtime_error(fmt::format("sequence is not quadratic: second difference {} differs", index)),
      index_(index)
{
}

namespace {

i128 mul(i128 x, i128 y)
{
    i128 r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::range_error("quadratic arithmetic overflows 128 bits");
    return r;
}

i128 add(i128 x, i128 y)
{
    i128 r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::range_error("quadratic arithmetic overflows 128 bits");
    return r;
}

int64_t narrow(i128 v)
{
    if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min())
        throw std::range_error("value outside the 64-bit range: " + to_string(v));
    return static_cast<int64_t>(v);
}

} // namespace

i128 QuadPoly::exact(i128 x) const
{
    // Horner: (a x + b) x + c
    return add(mul(add(mul(a, x), b), x), c);
}

int64_t QuadPoly::operator()(int64_t x) const
{
    return narrow(exact(x));
}

std::string to_string(i128 v)
{
    if (v == 0)
        return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg)
        s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

std::string to_string(const QuadPoly &p)
{
    std::string s;
    auto term = [&](int64_t k, const char *var) {
        if (k == 0)
            return;
        if (!s.empty())
            s += k < 0 ? "-" : "+";
        else if (k < 0)
            s += "-";
        uint64_t mag = k < 0 ? 0 - static_cast<uint64_t>(k) : static_cast<uint64_t>(k);
        if (mag != 1 || !*var)
            s += std::to_string(mag);
        s += var;
    };
    term(p.a, "x^2");
    term(p.b, "x");
    term(p.c, "");
    return s.empty() ? "0" : s;
}

QuadPoly parse_poly(std::string_view text)
{
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            t.push_back(ch);
    auto bad = [&] { return std::invalid_argument("cannot parse polynomial: " + std::string(text)); };
    if (t.empty())
        throw bad();

    QuadPoly p;
    if (t.find('x') == std::string::npos && t.find(',') == std::string::npos) {
        // a constant, as to_string prints it
        size_t used = 0;
        try {
            p.c = std::stoll(t, &used);
        } catch (const std::exception &) {
            throw bad();
        }
        if (used != t.size())
            throw bad();
        return p;
    }
    if (t.find('x') == std::string::npos) {
        // a,b,c
        int64_t v[3];
        size_t pos = 0;
        for (int i = 0; i < 3; ++i) {
            size_t comma = t.find(',', pos);
            if ((i < 2) != (comma != std::string::npos))
                throw bad();
            std::string part = t.substr(pos, i < 2 ? comma - pos : std::string::npos);
            size_t used = 0;
            try {
                v[i] = std::stoll(part, &used);
            } catch (const std::exception &) {
                throw bad();
            }
            if (used != part.size())
                throw bad();
            pos = comma + 1;
        }
        return {v[0], v[1], v[2]};
    }

    size_t i = 0;
    while (i < t.size()) {
        int sign = 1;
        if (t[i] == '+' || t[i] == '-') {
            sign = t[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw bad();
        }
        size_t j = i;
        while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j])))
            ++j;
        bool digits = j > i;
        int64_t k = 1;
        if (digits) {
            try {
                k = std::stoll(t.substr(i, j - i));
            } catch (const std::out_of_range &) {
                throw bad();
            }
        }
        i = j;
        int power = 0;
        if (i < t.size() && t[i] == 'x') {
            ++i;
            power = 1;
            if (t.compare(i, 2, "^2") == 0) {
                power = 2;
                i += 2;
            }
        } else if (!digits) {
            throw bad();
        }
        if (i < t.size() && t[i] != '+' && t[i] != '-')
            throw bad();
        int64_t &slot = power == 2 ? p.a : power == 1 ? p.b : p.c;
        slot += sign * k;
    }
    return p;
}

DiffProfile differences(const std::vector<int64_t> &seq)
{
    if (seq.size() < 3)
        throw std::invalid_argument("differences: need at least 3 terms");
    DiffProfile d;
    d.first.reserve(seq.size() - 1);
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        d.first.push_back(narrow(i128(seq[i + 1]) - seq[i]));
    d.second = narrow(i128(d.first[1]) - d.first[0]);
    for (size_t i = 1; i + 1 < d.first.size(); ++i)
        if (i128(d.first[i + 1]) - d.first[i] != d.second)
            throw NotQuadratic(i);
    return d;
}

std::vector<int64_t> extend(std::vector<int64_t> seq, size_t count)
{
    DiffProfile d = differences(seq);
    int64_t step = d.first.back();
    for (size_t i = 0; i < count; ++i) {
        step = narrow(i128(step) + d.second);
        seq.push_back(narrow(i128(seq.back()) + step));
    }
    return seq;
}

std::vector<int64_t> values(const QuadPoly &p, int64_t x0, size_t count)
{
    std::vector<int64_t> v;
    v.reserve(count);
    for (size_t i = 0; i < count; ++i)
        v.push_back(p(x0 + static_cast<int64_t>(i)));
    return v;
}

QuadPoly newton_fit(int64_t t0, int64_t y0, int64_t y1, int64_t y2)
{
    i128 two_a = i128(y0) - 2 * i128(y1) + y2;
    if (two_a % 2 != 0)
        throw NonIntegral("newton_fit: second difference is odd");
    i128 a = two_a / 2;
    // y1 - y0 = a (2 t0 + 1) + b
    i128 b = i128(y1) - y0 - mul(a, 2 * i128(t0) + 1);
    i128 c = i128(y0) - mul(mul(a, t0), t0) - mul(b, t0);
    return {narrow(a), narrow(b), narrow(c)};
}

QuadPoly shift(const QuadPoly &p, int64_t t)
{
    return {p.a, narrow(add(p.b, mul(mul(2, p.a), t))), narrow(p.exact(t))};
}

QuadPoly decimate(const QuadPoly &p, int64_t m, int64_t r)
{
    if (m < 1)
        throw std::domain_error("decimate: m must be positive");
    i128 a = mul(mul(p.a, m), m);
    i128 b = add(mul(mul(mul(2, p.a), m), r), mul(p.b, m));
    return {narrow(a), narrow(b), narrow(p.exact(r))};
}

char to_char(Rotation r)
{
    switch (r) {
    case Rotation::P:
        return 'P';
    case Rotation::N:
        return 'N';
    default:
        return '-';
    }
}

Rotation rotation_from_char(char c)
{
    switch (c) {
    case 'P':
        return Rotation::P;
    case 'N':
        return Rotation::N;
    case '-':
        return Rotation::Unspecified;
    }
    throw std::invalid_argument(std::string("unknown rotation '") + c + "'");
}

bool RulesReport::ok() const
{
    return std::all_of(arms.begin(), arms.end(), [](const ArmRules &r) { return r.ok(); });
}

RulesReport coefficient_rules_check(const ArmSystem &sys)
{
    RulesReport rep{sys.name, {}};
    for (const Arm &arm : sys.arms) {
        ArmRules r;
        r.arm = arm.name;
        for (size_t m = 0; m < arm.fits.size(); ++m) {
            const QuadPoly &f = arm.fits[m];
            if (sys.d2 % 2 != 0 || f.a != sys.d2 / 2) {
                r.leading = false;
                r.detail += fmt::format("f{}: a={} but d2={}; ", m + 1, f.a, sys.d2);
            }
            if (m > 0 && f.b - arm.fits[m - 1].b != sys.d2) {
                r.b_step = false;
                r.detail += fmt::format("f{}: b step {} != {}; ", m + 1, f.b - arm.fits[m - 1].b, sys.d2);
            }
            if (m > 0) {
                if (m - 1 >= arm.terms.size() || f.c != arm.terms[m - 1]) {
                    r.c_rule = false;
                    r.detail += fmt::format("f{}: c={} is not term {}; ", m + 1, f.c, m);
                }
            }
        }
        rep.arms.push_back(std::move(r));
    }
    return rep;
}

} // namespace sqspiral
