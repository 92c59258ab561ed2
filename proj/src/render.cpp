#include "aprac/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "aprac/validator.hpp"

namespace aprac {

namespace {

const char* kFactorColors[4] = {"#1f77b4", "#ff7f0e", "#2c7fb8", "#fdae61"};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

}  // namespace

std::string to_svg(const Drawing& d, const RenderOptions& opts) {
    const int s = std::max(1, opts.scale);
    Pt lo{0, 0}, hi{0, 0};
    if (d.n() > 0) d.bounding_box(lo, hi);
    const int margin = 2 * s + 8;
    // Screen y grows downward; flip around the bounding box.
    auto sx = [&](double x) { return (x - double(lo.x)) * s + margin; };
    auto sy = [&](double y) { return (double(hi.y) - y) * s + margin; };
    double width = (double(hi.x) - double(lo.x)) * s + 2 * margin;
    double height = (double(hi.y) - double(lo.y)) * s + 2 * margin;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " "
        << fmt(height) << "\">\n";
    for (int e = 0; e < d.m(); ++e) {
        const DrawnEdge& de = d.edges[size_t(e)];
        const char* color = "#000000";
        if (de.augmented)
            color = "#9e9e9e";
        else if (opts.color_by_factor && de.group >= 0)
            color = kFactorColors[size_t(de.group % 4)];
        out << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\" points=\"";
        auto pts = d.polyline(e);
        for (size_t i = 0; i < pts.size(); ++i) {
            if (i) out << " ";
            out << fmt(sx(double(pts[i].x))) << "," << fmt(sy(double(pts[i].y)));
        }
        out << "\"/>\n";
    }
    for (int v = 0; v < d.n(); ++v) {
        const Pt& p = d.positions[size_t(v)];
        out << "  <circle cx=\"" << fmt(sx(double(p.x))) << "\" cy=\"" << fmt(sy(double(p.y)))
            << "\" r=\"" << fmt(s * 0.6) << "\" fill=\"#ffffff\" stroke=\"#000000\"/>\n";
    }
    if (opts.mark_crossings) {
        auto crossings = find_crossings(d);
        const double r = s * 0.5;
        for (const auto& c : crossings) {
            double cx = sx(c.point.x.to_double());
            double cy = sy(c.point.y.to_double());
            out << "  <path stroke=\"#d62728\" stroke-width=\"1\" d=\"M" << fmt(cx - r) << " "
                << fmt(cy - r) << " L" << fmt(cx + r) << " " << fmt(cy + r) << " M"
                << fmt(cx - r) << " " << fmt(cy + r) << " L" << fmt(cx + r) << " "
                << fmt(cy - r) << "\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace aprac
