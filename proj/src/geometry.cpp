#include "aprac/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace aprac {

namespace {

wide_t wide_abs(wide_t v) { return v < 0 ? -v : v; }

wide_t wide_gcd(wide_t a, wide_t b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        wide_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rat::Rat(wide_t n, wide_t d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    wide_t g = wide_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d == 0 ? 1 : d;
}

std::string wide_to_string(wide_t v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-v) : (unsigned __int128)v;
    std::string s;
    while (u > 0) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

std::string Rat::to_string() const {
    if (den == 1) return wide_to_string(num);
    return wide_to_string(num) + "/" + wide_to_string(den);
}

bool on_segment_closed(const Pt& p, const Pt& a, const Pt& b) {
    if (cross(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool on_segment_open(const Pt& p, const Pt& a, const Pt& b) {
    return on_segment_closed(p, a, b) && p != a && p != b;
}

bool properly_cross(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    int o1 = sgn(cross(a, b, c));
    int o2 = sgn(cross(a, b, d));
    int o3 = sgn(cross(c, d, a));
    int o4 = sgn(cross(c, d, b));
    return o1 * o2 < 0 && o3 * o4 < 0;
}

bool collinear_overlap(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    if (cross(a, b, c) != 0 || cross(a, b, d) != 0) return false;
    // Project on the dominant axis; segments overlap in more than one point
    // iff the projected intervals overlap in an interval of positive length.
    auto key = [&](const Pt& p) -> coord_t {
        return (a.x != b.x || c.x != d.x) ? p.x : p.y;
    };
    coord_t a1 = std::min(key(a), key(b)), a2 = std::max(key(a), key(b));
    coord_t b1 = std::min(key(c), key(d)), b2 = std::max(key(c), key(d));
    return std::max(a1, b1) < std::min(a2, b2);
}

RatPt line_intersection(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    wide_t dx1 = b.x - a.x, dy1 = b.y - a.y;
    wide_t dx2 = d.x - c.x, dy2 = d.y - c.y;
    wide_t den = dx1 * dy2 - dy1 * dx2;
    if (den == 0) throw std::invalid_argument("parallel segments have no line intersection");
    wide_t tn = wide_t(c.x - a.x) * dy2 - wide_t(c.y - a.y) * dx2;
    RatPt out;
    out.x = Rat(wide_t(a.x) * den + tn * dx1, den);
    out.y = Rat(wide_t(a.y) * den + tn * dy1, den);
    return out;
}

}  // namespace aprac
