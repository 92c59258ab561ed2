#pragma once

#include <cstdint>
#include <string>

namespace aprac {

using coord_t = long long;
using wide_t = __int128;

// Coordinates accepted by the exact kernel. Keeps every derived quantity
// (intersection numerators, cross-multiplied comparisons) inside __int128.
constexpr coord_t kCoordLimit = (1LL << 21);

struct Pt {
    coord_t x = 0;
    coord_t y = 0;

    friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Pt& a, const Pt& b) { return !(a == b); }
    friend bool operator<(const Pt& a, const Pt& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

inline wide_t cross(const Pt& o, const Pt& a, const Pt& b) {
    return wide_t(a.x - o.x) * (b.y - o.y) - wide_t(a.y - o.y) * (b.x - o.x);
}

inline wide_t dot_dirs(coord_t ax, coord_t ay, coord_t bx, coord_t by) {
    return wide_t(ax) * bx + wide_t(ay) * by;
}

inline int sgn(wide_t v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Exact rational with __int128 numerators; reduced and sign-normalized.
struct Rat {
    wide_t num = 0;
    wide_t den = 1;

    Rat() = default;
    Rat(wide_t n, wide_t d);

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num * b.den < b.num * a.den;
    }
    double to_double() const { return double(num) / double(den); }
    std::string to_string() const;
};

struct RatPt {
    Rat x, y;
    friend bool operator==(const RatPt& a, const RatPt& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const RatPt& a, const RatPt& b) {
        if (a.x == b.x) return a.y < b.y;
        return a.x < b.x;
    }
};

enum class Orient { Horizontal, Vertical, Oblique };

inline Orient classify_direction(const Pt& p, const Pt& q) {
    if (p.y == q.y) return Orient::Horizontal;
    if (p.x == q.x) return Orient::Vertical;
    return Orient::Oblique;
}

// p strictly inside the closed segment [a,b] boundaries included.
bool on_segment_closed(const Pt& p, const Pt& a, const Pt& b);
// p inside the open segment (a,b), endpoints excluded.
bool on_segment_open(const Pt& p, const Pt& a, const Pt& b);

// Interiors of [a,b] and [c,d] meet in exactly one point.
bool properly_cross(const Pt& a, const Pt& b, const Pt& c, const Pt& d);

// Collinear segments sharing more than one point.
bool collinear_overlap(const Pt& a, const Pt& b, const Pt& c, const Pt& d);

// Intersection point of the supporting lines; only valid for non-parallel segments.
RatPt line_intersection(const Pt& a, const Pt& b, const Pt& c, const Pt& d);

// 90 degree test on direction vectors, exact.
inline bool right_angle(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    return dot_dirs(b.x - a.x, b.y - a.y, d.x - c.x, d.y - c.y) == 0;
}

std::string wide_to_string(wide_t v);

}  // namespace aprac
