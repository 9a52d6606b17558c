#include "sqspiral/svg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "sqspiral/factorlab.hpp"
#include "sqspiral/primes.hpp"
#include "sqspiral/spiral.hpp"
#include "sqspiral/spirals.hpp"

namespace sqspiral {

namespace {

std::string num(double v)
{
    std::string s = fmt::format("{:.4f}", v);
    return s == "-0.0000" ? "0.0000" : s;
}

std::string escape(const std::string &s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += c;
        }
    }
    return out;
}

const char *kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
                          "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#393b79", "#637939"};

void check_n(int64_t n)
{
    if (n < 1 || n > 100000)
        throw std::invalid_argument("plot: n must be in [1, 100000]");
}

struct Placer {
    explicit Placer(int64_t last) : table(1, std::max<int64_t>(last, 2)) {}
    std::pair<double, double> at(int64_t m) const
    {
        double r = std::sqrt(static_cast<double>(m)), phi = table.at(m);
        return {r * std::cos(phi), r * std::sin(phi)};
    }
    AngleTable table;
};

} // namespace

Svg::Svg(double half_extent, double size_px) : half_(half_extent), size_(size_px) {}

void Svg::polyline(const std::vector<std::pair<double, double>> &pts, const std::string &stroke, double width)
{
    if (pts.size() < 2)
        return;
    body_ += "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + num(width) + "\" points=\"";
    for (size_t i = 0; i < pts.size(); ++i)
        body_ += (i ? " " : "") + num(pts[i].first) + "," + num(-pts[i].second);
    body_ += "\"/>\n";
}

void Svg::line(double x0, double y0, double x1, double y1, const std::string &stroke, double width)
{
    body_ += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"{}\"/>\n", num(x0),
                         num(-y0), num(x1), num(-y1), stroke, num(width));
}

void Svg::dot(double x, double y, double r, const std::string &fill)
{
    body_ += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>\n", num(x), num(-y), num(r), fill);
}

void Svg::label(double x, double y, const std::string &text, double size)
{
    body_ += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"{}\" font-family=\"sans-serif\">{}</text>\n", num(x),
                         num(-y), num(size), escape(text));
}

void Svg::title(const std::string &text)
{
    title_ = text;
}

std::string Svg::str() const
{
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">\n",
                       num(size_), num(size_), num(-half_), num(-half_), num(2 * half_), num(2 * half_));
    if (!title_.empty())
        out += "<title>" + escape(title_) + "</title>\n";
    out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n", num(-half_),
                       num(-half_), num(2 * half_), num(2 * half_));
    out += body_;
    out += "</svg>\n";
    return out;
}

std::string plot_sqrt_spiral(int64_t n)
{
    check_n(n);
    Placer pl(n);
    double half = std::sqrt(static_cast<double>(n)) + 1.0;
    Svg svg(half);
    svg.title(fmt::format("square-root spiral, {} triangles", n));
    double w = half / 400.0;
    std::vector<std::pair<double, double>> outer;
    for (int64_t k = 1; k <= n; ++k) {
        auto [x, y] = pl.at(k);
        svg.line(0, 0, x, y, "#c8c8c8", w * 0.5);
        outer.emplace_back(x, y);
    }
    svg.polyline(outer, "#404040", w);
    for (int64_t k = 1; k <= n; ++k) {
        auto [x, y] = pl.at(k);
        auto s = static_cast<int64_t>(std::llround(std::sqrt(static_cast<double>(k))));
        if (s * s == k)
            svg.dot(x, y, w * 4, "#1f77b4");
        else if (is_prime(static_cast<uint64_t>(k)))
            svg.dot(x, y, w * 3, "#d62728");
    }
    return svg.str();
}

std::string plot_number_spiral(int64_t n)
{
    check_n(n);
    double half = std::sqrt(static_cast<double>(n)) + 1.0;
    Svg svg(half);
    svg.title(fmt::format("number spiral, n <= {}", n));
    double w = half / 400.0;
    for (int64_t k = 1; k <= n; ++k) {
        NumberSpiralPoint p = ns_polar(k);
        double a = 2 * kPi * p.theta_rotations;
        double x = p.r * std::cos(a), y = p.r * std::sin(a);
        auto s = static_cast<int64_t>(std::llround(p.r));
        if (s * s == k)
            svg.dot(x, y, w * 3, "#1f77b4");
        else if (is_prime(static_cast<uint64_t>(k)))
            svg.dot(x, y, w * 2.5, "#000000");
    }
    return svg.str();
}

std::string plot_ulam(int64_t n)
{
    check_n(n);
    UlamCoord far = ulam_coord(n);
    double half = static_cast<double>(std::max(std::abs(far.x), std::abs(far.y))) + 1.5;
    Svg svg(half);
    size_t count = 0;
    for (int64_t k = 2; k <= n; ++k) {
        if (!is_prime(static_cast<uint64_t>(k)))
            continue;
        UlamCoord u = ulam_coord(k);
        svg.dot(static_cast<double>(u.x), static_cast<double>(u.y), 0.4, "#000000");
        ++count;
    }
    svg.title(fmt::format("Ulam spiral, n <= {}, {} primes", n, count));
    return svg.str();
}

std::string plot_arms(const ArmSystem &sys, int64_t n)
{
    check_n(n);
    Placer pl(n);
    double half = std::sqrt(static_cast<double>(n)) + 1.0;
    Svg svg(half);
    svg.title(fmt::format("arm system {}, values <= {}", sys.name, n));
    double w = half / 400.0;
    std::vector<std::pair<double, double>> outer;
    for (int64_t k = 1; k <= n; ++k)
        outer.push_back(pl.at(k));
    svg.polyline(outer, "#d0d0d0", w * 0.5);
    for (size_t i = 0; i < sys.arms.size(); ++i) {
        const Arm &arm = sys.arms[i];
        const char *colour = kPalette[i % std::size(kPalette)];
        std::vector<std::pair<double, double>> pts;
        for (int64_t t = 1; t <= n + 1; ++t) {
            int64_t v = arm.fits[0](t);
            if (v > n)
                break;
            if (v >= 1)
                pts.push_back(pl.at(v));
        }
        svg.polyline(pts, colour, w * 1.5);
        for (auto [x, y] : pts)
            svg.dot(x, y, w * 3, colour);
        if (!pts.empty())
            svg.label(pts.back().first, pts.back().second, arm.name, half / 40.0);
    }
    return svg.str();
}

std::string plot_fig7(const QuadPoly &f, const std::vector<uint64_t> &primes, int64_t n)
{
    check_n(n);
    Placer pl(n);
    double half = std::sqrt(static_cast<double>(n)) + 1.0;
    Svg svg(half);
    svg.title(fmt::format("{} and its divisibility arms, values <= {}", to_string(f), n));
    double w = half / 400.0;
    std::vector<std::pair<double, double>> main;
    for (int64_t t = 1; t <= n + 1 && f(t) <= n; ++t)
        if (f(t) >= 1)
            main.push_back(pl.at(f(t)));
    svg.polyline(main, "#000000", w * 2);
    for (size_t i = 0; i < primes.size(); ++i) {
        const char *colour = kPalette[i % std::size(kPalette)];
        RootClasses rc = root_classes(f, primes[i]);
        for (uint64_t r : rc.roots) {
            QuadPoly sub = decimate(f, static_cast<int64_t>(primes[i]), static_cast<int64_t>(r));
            std::vector<std::pair<double, double>> pts;
            for (int64_t t = 0; t <= n + 1 && sub(t) <= n; ++t)
                if (sub(t) >= 1)
                    pts.push_back(pl.at(sub(t)));
            svg.polyline(pts, colour, w);
            for (auto [x, y] : pts)
                svg.dot(x, y, w * 4, colour);
            if (!pts.empty())
                svg.label(pts.back().first, pts.back().second, fmt::format("{} | f(t), t = {} mod {}", primes[i], r, primes[i]),
                          half / 50.0);
        }
    }
    for (auto [x, y] : main)
        svg.dot(x, y, w * 2.5, "#000000");
    return svg.str();
}

} // namespace sqspiral
