#include "dvfactor/cli/polygon.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace dvfactor::cli {

namespace {

constexpr double kWidth = 480.0;
constexpr double kHeight = 360.0;
constexpr double kMargin = 48.0;

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string polygon_tsv(const ValuationProfile& profile) {
    std::ostringstream out;
    out << "#points\n";
    for (std::size_t i = 0; i <= profile.n; ++i)
        if (profile.vals[i].is_finite()) out << i << '\t' << profile.vals[i].to_string() << '\n';
    out << "#hull\n";
    for (const auto& v : lower_hull(profile)) out << v.i << '\t' << v.v.get_str() << '\n';
    return out.str();
}

std::string polygon_svg(const ValuationProfile& profile, const std::string& title) {
    std::vector<std::pair<std::size_t, BigInt>> pts;
    for (std::size_t i = 0; i <= profile.n; ++i)
        if (profile.vals[i].is_finite()) pts.emplace_back(i, profile.vals[i].value());
    BigInt vmin = pts.front().second, vmax = pts.front().second;
    for (const auto& [i, v] : pts) {
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
    }
    if (vmin == vmax) {
        vmin -= 1;
        vmax += 1;
    }
    const double span_v = BigInt(vmax - vmin).get_d();
    const double span_i = static_cast<double>(std::max<std::size_t>(profile.n, 1));
    auto px = [&](std::size_t i) { return kMargin + static_cast<double>(i) * (kWidth - 2 * kMargin) / span_i; };
    auto py = [&](const BigInt& v) {
        return kHeight - kMargin - BigInt(v - vmin).get_d() * (kHeight - 2 * kMargin) / span_v;
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << fixed(kWidth / 2) << "\" y=\"20.00\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"13\">" << escape(title) << "</text>\n";

    const std::string x0 = fixed(kMargin), x1 = fixed(kWidth - kMargin);
    const std::string y0 = fixed(kHeight - kMargin), y1 = fixed(kMargin);
    out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1
        << "\" stroke=\"black\"/>\n";
    for (std::size_t i = 0; i <= profile.n; ++i)
        out << "<text x=\"" << fixed(px(i)) << "\" y=\"" << fixed(kHeight - kMargin + 16)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << i << "</text>\n";
    for (const BigInt* v : {&vmin, &vmax})
        out << "<text x=\"" << fixed(kMargin - 6) << "\" y=\"" << fixed(py(*v) + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << v->get_str() << "</text>\n";
    out << "<text x=\"" << fixed(kWidth / 2) << "\" y=\"" << fixed(kHeight - 10)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">i</text>\n";
    out << "<text x=\"14.00\" y=\"" << fixed(kHeight / 2) << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"12\" transform=\"rotate(-90 14.00 " << fixed(kHeight / 2) << ")\">v(a_i)</text>\n";

    out << "<polyline fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& v : lower_hull(profile)) {
        out << (first ? "" : " ") << fixed(px(v.i)) << ',' << fixed(py(v.v));
        first = false;
    }
    out << "\"/>\n";
    for (const auto& [i, v] : pts)
        out << "<circle cx=\"" << fixed(px(i)) << "\" cy=\"" << fixed(py(v)) << "\" r=\"3.5\" fill=\"#c0392b\"/>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace dvfactor::cli
