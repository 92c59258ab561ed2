#include "aprac/validator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace aprac {

namespace {

struct Seg {
    int edge;
    int index;  // position along the polyline
    Pt p, q;
    Orient orient;
};

std::vector<Seg> build_segments(const Drawing& d, std::vector<Violation>* degenerate_out) {
    std::vector<Seg> segs;
    for (int e = 0; e < d.m(); ++e) {
        auto pts = d.polyline(e);
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            if (pts[i] == pts[i + 1]) {
                if (degenerate_out)
                    degenerate_out->push_back({ViolationKind::Degenerate, e, -1,
                                               "edge " + std::to_string(e) +
                                                   " has a zero-length segment"});
                continue;
            }
            segs.push_back({e, int(i), pts[i], pts[i + 1], classify_direction(pts[i], pts[i + 1])});
        }
    }
    return segs;
}

bool consecutive_same_edge(const Seg& a, const Seg& b) {
    return a.edge == b.edge && (a.index + 1 == b.index || b.index + 1 == a.index);
}

std::string edge_pair(int a, int b) {
    return "edges " + std::to_string(a) + " and " + std::to_string(b);
}

// ---- interval stabbing over one coordinate ------------------------------

struct IntervalIndex {
    // items sorted by lo, with prefix maxima over hi
    struct Item {
        coord_t lo, hi;
        int seg;
    };
    std::vector<Item> items;
    std::vector<coord_t> prefix_hi;

    void build() {
        std::sort(items.begin(), items.end(),
                  [](const Item& a, const Item& b) { return a.lo < b.lo; });
        prefix_hi.resize(items.size());
        coord_t run = items.empty() ? 0 : items[0].hi;
        for (size_t i = 0; i < items.size(); ++i) {
            run = std::max(run, items[i].hi);
            prefix_hi[i] = run;
        }
    }
    // Segments whose closed interval contains x.
    template <class F>
    void stab(coord_t x, F&& fn) const {
        size_t hi = size_t(std::upper_bound(items.begin(), items.end(), x,
                                            [](coord_t v, const Item& it) { return v < it.lo; }) -
                           items.begin());
        for (size_t i = hi; i-- > 0;) {
            if (prefix_hi[i] < x) break;
            if (items[i].hi >= x) fn(items[i].seg);
        }
    }
    // Items whose interval intersects [a, b].
    template <class F>
    void range(coord_t a, coord_t b, F&& fn) const {
        size_t hi = size_t(std::upper_bound(items.begin(), items.end(), b,
                                            [](coord_t v, const Item& it) { return v < it.lo; }) -
                           items.begin());
        for (size_t i = hi; i-- > 0;) {
            if (prefix_hi[i] < a) break;
            if (items[i].hi >= a) fn(items[i].seg);
        }
    }
};

struct SegmentIndex {
    const std::vector<Seg>* segs = nullptr;
    std::unordered_map<coord_t, IntervalIndex> rows;  // horizontals by y
    std::unordered_map<coord_t, IntervalIndex> cols;  // verticals by x
    IntervalIndex obliques_by_x;
    std::vector<int> oblique_ids;
    std::vector<coord_t> row_keys_sorted;
    std::vector<coord_t> col_keys_sorted;

    void build(const std::vector<Seg>& s) {
        segs = &s;
        for (size_t i = 0; i < s.size(); ++i) {
            const Seg& g = s[i];
            switch (g.orient) {
                case Orient::Horizontal:
                    rows[g.p.y].items.push_back(
                        {std::min(g.p.x, g.q.x), std::max(g.p.x, g.q.x), int(i)});
                    break;
                case Orient::Vertical:
                    cols[g.p.x].items.push_back(
                        {std::min(g.p.y, g.q.y), std::max(g.p.y, g.q.y), int(i)});
                    break;
                case Orient::Oblique:
                    obliques_by_x.items.push_back(
                        {std::min(g.p.x, g.q.x), std::max(g.p.x, g.q.x), int(i)});
                    oblique_ids.push_back(int(i));
                    break;
            }
        }
        for (auto& [y, idx] : rows) {
            idx.build();
            row_keys_sorted.push_back(y);
        }
        std::sort(row_keys_sorted.begin(), row_keys_sorted.end());
        for (auto& [x, idx] : cols) {
            idx.build();
            col_keys_sorted.push_back(x);
        }
        std::sort(col_keys_sorted.begin(), col_keys_sorted.end());
        obliques_by_x.build();
    }

    // All segments whose closed extent contains p.
    template <class F>
    void segments_at_point(const Pt& p, F&& fn) const {
        auto rit = rows.find(p.y);
        if (rit != rows.end()) rit->second.stab(p.x, fn);
        auto cit = cols.find(p.x);
        if (cit != cols.end())
            cit->second.stab(p.y, [&](int s) { fn(s); });
        obliques_by_x.stab(p.x, [&](int s) {
            const Seg& g = (*segs)[size_t(s)];
            if (on_segment_closed(p, g.p, g.q)) fn(s);
        });
    }
};

// ---- shared state of one validation run ---------------------------------

struct Checker {
    const Drawing& d;
    const ValidateOptions& opts;
    ValidationReport rep;
    std::vector<Seg> segs;

    Checker(const Drawing& dr, const ValidateOptions& o) : d(dr), opts(o) {}

    void add(ViolationKind k, int e1, int e2, std::string msg) {
        rep.violations.push_back({k, e1, e2, std::move(msg)});
    }

    bool slope_ok(const Seg& s) const { return opts.slopes.segment_allowed(s.p, s.q); }

    // Mode rules for one proper crossing.
    void judge_crossing(const Seg& a, const Seg& b, bool record) {
        bool right = right_angle(a.p, a.q, b.p, b.q);
        bool axis_pair = (a.orient == Orient::Horizontal && b.orient == Orient::Vertical) ||
                         (a.orient == Orient::Vertical && b.orient == Orient::Horizontal);
        if (!right)
            add(ViolationKind::Angle, a.edge, b.edge,
                edge_pair(a.edge, b.edge) + " cross at a non-right angle");
        if (opts.mode == Mode::Aprac && !axis_pair)
            add(ViolationKind::Slope, a.edge, b.edge,
                edge_pair(a.edge, b.edge) + " cross on non-axis-parallel segments");
        if (opts.mode == Mode::SlopeRac) {
            if (!slope_ok(a))
                add(ViolationKind::Slope, a.edge, b.edge,
                    "crossing segment of edge " + std::to_string(a.edge) +
                        " matches no slope in the set");
            if (!slope_ok(b))
                add(ViolationKind::Slope, b.edge, a.edge,
                    "crossing segment of edge " + std::to_string(b.edge) +
                        " matches no slope in the set");
        }
        if (record) {
            Crossing c;
            c.edge_a = a.edge;
            c.seg_a = a.index;
            c.edge_b = b.edge;
            c.seg_b = b.index;
            c.point = line_intersection(a.p, a.q, b.p, b.q);
            c.right_angle = right;
            c.axis_parallel_pair = axis_pair;
            rep.crossings.push_back(std::move(c));
        }
    }

    void check_bend_counts() {
        for (int e = 0; e < d.m(); ++e)
            if (d.edges[size_t(e)].bend_count() > opts.max_bends)
                add(ViolationKind::BendCount, e, -1,
                    "edge " + std::to_string(e) + " has " +
                        std::to_string(d.edges[size_t(e)].bend_count()) + " bends (budget " +
                        std::to_string(opts.max_bends) + ")");
    }

    void check_duplicate_vertices() {
        std::map<Pt, int> at;
        for (int v = 0; v < d.n(); ++v) {
            auto [it, fresh] = at.emplace(d.positions[size_t(v)], v);
            if (!fresh)
                add(ViolationKind::Overlap, -1, -1,
                    "vertices " + std::to_string(it->second) + " and " + std::to_string(v) +
                        " coincide");
        }
    }

    // Vertex and bend points against every segment: catches edges through
    // vertices, bends on foreign edges, and coinciding bend points.
    void point_pass(const SegmentIndex& index) {
        auto handle = [&](const Pt& p, bool is_vertex, int owner_vertex, int owner_edge,
                          int owner_bend) {
            index.segments_at_point(p, [&](int si) {
                const Seg& s = segs[size_t(si)];
                const DrawnEdge& f = d.edges[size_t(s.edge)];
                if (is_vertex) {
                    // Legal only as the polyline terminal at this vertex.
                    int last = f.bend_count();
                    bool terminal = (f.u == owner_vertex && s.index == 0 && s.p == p) ||
                                    (f.v == owner_vertex && s.index == last && s.q == p);
                    if (terminal) return;
                    bool incident = f.u == owner_vertex || f.v == owner_vertex;
                    add(ViolationKind::SegmentThroughVertex, s.edge, -1,
                        "edge " + std::to_string(s.edge) + " passes through " +
                            (incident ? "its own vertex " : "vertex ") +
                            std::to_string(owner_vertex));
                } else {
                    if (s.edge == owner_edge &&
                        (s.index == owner_bend || s.index == owner_bend + 1) &&
                        (s.p == p || s.q == p))
                        return;  // the joint itself
                    add(ViolationKind::BendOnEdge, owner_edge, s.edge,
                        "bend of edge " + std::to_string(owner_edge) + " lies on edge " +
                            std::to_string(s.edge));
                }
            });
        };
        for (int v = 0; v < d.n(); ++v) handle(d.positions[size_t(v)], true, v, -1, -1);
        for (int e = 0; e < d.m(); ++e) {
            const auto& bends = d.edges[size_t(e)].bends;
            for (size_t b = 0; b < bends.size(); ++b) handle(bends[b], false, -1, e, int(b));
        }
    }

    // Collinear overlaps among parallel axis segments, grouped per line.
    void check_axis_overlaps() {
        auto scan = [&](bool horizontal) {
            std::map<coord_t, std::vector<std::pair<std::pair<coord_t, coord_t>, int>>> lines;
            for (size_t i = 0; i < segs.size(); ++i) {
                const Seg& s = segs[i];
                if (horizontal && s.orient == Orient::Horizontal)
                    lines[s.p.y].push_back(
                        {{std::min(s.p.x, s.q.x), std::max(s.p.x, s.q.x)}, int(i)});
                else if (!horizontal && s.orient == Orient::Vertical)
                    lines[s.p.x].push_back(
                        {{std::min(s.p.y, s.q.y), std::max(s.p.y, s.q.y)}, int(i)});
            }
            for (auto& [key, list] : lines) {
                std::sort(list.begin(), list.end());
                coord_t reach = 0;
                int reach_seg = -1;
                for (size_t i = 0; i < list.size(); ++i) {
                    if (i > 0 && list[i].first.first < reach) {
                        add(ViolationKind::Overlap, segs[size_t(reach_seg)].edge,
                            segs[size_t(list[i].second)].edge,
                            edge_pair(segs[size_t(reach_seg)].edge,
                                      segs[size_t(list[i].second)].edge) +
                                " overlap collinearly");
                    }
                    if (i == 0 || list[i].first.second > reach) {
                        reach = list[i].first.second;
                        reach_seg = list[i].second;
                    }
                }
            }
        };
        scan(true);
        scan(false);
    }
};

// Significant shared points of a pair of edges, for simplicity accounting.
struct PairKey {
    int a, b;
    bool operator<(const PairKey& o) const { return a != o.a ? a < o.a : b < o.b; }
};

}  // namespace

// ---- slope sets ----------------------------------------------------------

bool SlopeSet::segment_allowed(const Pt& p, const Pt& q) const {
    coord_t dx = q.x - p.x, dy = q.y - p.y;
    for (const Slope& s : slopes) {
        wide_t par = wide_t(dy) * s.dx - wide_t(dx) * s.dy;   // parallel
        wide_t perp = wide_t(dx) * s.dx + wide_t(dy) * s.dy;  // perpendicular
        if (par == 0 || perp == 0) return true;
    }
    return false;
}

SlopeSet default_slope_set() { return SlopeSet{{Slope{1, 0}}}; }

SlopeSet parse_slope_set(const std::string& text) {
    SlopeSet out;
    auto add_slope = [&](coord_t dx, coord_t dy) {
        if (dx == 0 && dy == 0) throw std::runtime_error("degenerate slope");
        coord_t g = std::abs(std::gcd(dx, dy));
        dx /= g;
        dy /= g;
        if (dx < 0 || (dx == 0 && dy < 0)) {
            dx = -dx;
            dy = -dy;
        }
        for (const Slope& s : out.slopes)
            if (s.dx == dx && s.dy == dy) return;
        out.slopes.push_back({dx, dy});
    };
    add_slope(1, 0);  // horizontal always present
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        size_t a = tok.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        size_t b = tok.find_last_not_of(" \t");
        tok = tok.substr(a, b - a + 1);
        if (tok.empty()) continue;
        if (tok == "v" || tok == "vertical") {
            add_slope(0, 1);
            continue;
        }
        size_t slash = tok.find('/');
        try {
            if (slash == std::string::npos) {
                add_slope(1, std::stoll(tok));
            } else {
                coord_t num = std::stoll(tok.substr(0, slash));
                coord_t den = std::stoll(tok.substr(slash + 1));
                if (den == 0) throw std::runtime_error("slope with zero denominator");
                add_slope(den, num);
            }
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("malformed slope token '" + tok + "'");
        }
    }
    return out;
}

std::string to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::Angle: return "angle";
        case ViolationKind::Slope: return "slope";
        case ViolationKind::Overlap: return "overlap";
        case ViolationKind::BendOnEdge: return "bend-on-edge";
        case ViolationKind::SegmentThroughVertex: return "segment-through-vertex";
        case ViolationKind::BendCount: return "bend-count";
        case ViolationKind::OffGrid: return "off-grid";
        case ViolationKind::Degenerate: return "degenerate";
        case ViolationKind::Simplicity: return "simplicity";
    }
    return "unknown";
}

// ---- crossing enumeration -------------------------------------------------

std::vector<Crossing> find_crossings(const Drawing& d) {
    std::vector<Seg> segs = build_segments(d, nullptr);
    std::vector<Crossing> out;
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j) {
            const Seg& a = segs[i];
            const Seg& b = segs[j];
            if (consecutive_same_edge(a, b)) continue;
            if (!properly_cross(a.p, a.q, b.p, b.q)) continue;
            Crossing c;
            c.edge_a = a.edge;
            c.seg_a = a.index;
            c.edge_b = b.edge;
            c.seg_b = b.index;
            c.point = line_intersection(a.p, a.q, b.p, b.q);
            c.right_angle = right_angle(a.p, a.q, b.p, b.q);
            c.axis_parallel_pair =
                (a.orient == Orient::Horizontal && b.orient == Orient::Vertical) ||
                (a.orient == Orient::Vertical && b.orient == Orient::Horizontal);
            out.push_back(std::move(c));
        }
    }
    return out;
}

// ---- density --------------------------------------------------------------

namespace {

// m <= 4n - sqrt(n) - 6, decided in integers.
bool aprac0_bound_holds(long long n, long long m) {
    long long r = 4 * n - 6 - m;
    if (r < 0) return false;
    return r * r >= n;
}

}  // namespace

std::vector<DensityCheck> density_report(long long n, long long m, int k, int s) {
    std::vector<DensityCheck> out;
    if (k == 0) {
        DensityCheck c;
        c.name = "aprac0: m <= 4n - sqrt(n) - 6";
        c.bound = 4.0 * double(n) - std::sqrt(double(n)) - 6.0;
        c.satisfied = aprac0_bound_holds(n, m);
        out.push_back(c);
    } else if (k == 1) {
        out.push_back({"aprac1: m <= 5n - 8", double(5 * n - 8), m <= 5 * n - 8});
    } else if (k == 2) {
        out.push_back({"aprac2: m <= 10n - 12", double(10 * n - 12), m <= 10 * n - 12});
    }
    // No density bound is known for three or more bends.
    if (s > 0) {
        long long linear = (6 + 4LL * s) * n - 12;
        bool ok_linear = m <= linear;
        bool ok_cross = 10LL * m <= 719LL * n;  // m <= 71.9 n
        out.push_back({"slope-rac: m <= min((6+4s)n - 12, 71.9n)",
                       std::min(double(linear), 71.9 * double(n)), ok_linear && ok_cross});
    }
    return out;
}

// ---- main validation -------------------------------------------------------

ValidationReport validate(const Drawing& d, const ValidateOptions& opts) {
    Checker ck(d, opts);
    ValidationReport& rep = ck.rep;
    rep.n = d.n();
    rep.m = d.m();
    rep.max_bends = d.max_bends();
    if (rep.n > 0) d.bounding_box(rep.bbox_lo, rep.bbox_hi);

    for (const Pt& p : d.positions)
        if (p.x < -kCoordLimit || p.x > kCoordLimit || p.y < -kCoordLimit || p.y > kCoordLimit)
            ck.add(ViolationKind::OffGrid, -1, -1, "vertex outside the supported grid range");
    for (int e = 0; e < d.m(); ++e)
        for (const Pt& b : d.edges[size_t(e)].bends)
            if (b.x < -kCoordLimit || b.x > kCoordLimit || b.y < -kCoordLimit ||
                b.y > kCoordLimit)
                ck.add(ViolationKind::OffGrid, e, -1, "bend outside the supported grid range");

    ck.segs = build_segments(d, &rep.violations);
    ck.check_bend_counts();
    ck.check_duplicate_vertices();

    const size_t seg_count = ck.segs.size();
    bool full = opts.engine == ValidateOptions::Engine::Full ||
                (opts.engine == ValidateOptions::Engine::Auto && seg_count <= 4000) ||
                opts.strict_simple;

    SegmentIndex index;
    index.build(ck.segs);
    ck.point_pass(index);

    if (full) {
        rep.crossings_enumerated = true;
        for (size_t i = 0; i < seg_count; ++i) {
            for (size_t j = i + 1; j < seg_count; ++j) {
                const Seg& a = ck.segs[i];
                const Seg& b = ck.segs[j];
                if (collinear_overlap(a.p, a.q, b.p, b.q)) {
                    if (!consecutive_same_edge(a, b))
                        ck.add(ViolationKind::Overlap, a.edge, b.edge,
                               edge_pair(a.edge, b.edge) + " overlap collinearly");
                    else
                        ck.add(ViolationKind::Overlap, a.edge, b.edge,
                               "edge " + std::to_string(a.edge) +
                                   " folds back onto itself at a bend");
                    continue;
                }
                if (consecutive_same_edge(a, b)) continue;
                if (properly_cross(a.p, a.q, b.p, b.q)) ck.judge_crossing(a, b, true);
            }
        }
        rep.crossing_count = (long long)rep.crossings.size();

        // Shared-point accounting between edge pairs: warnings by default,
        // violations under strict-simple.
        std::map<PairKey, std::set<RatPt>> shared;
        auto add_shared = [&](int e1, int e2, const RatPt& pt) {
            if (e1 == e2) return;
            PairKey k{std::min(e1, e2), std::max(e1, e2)};
            shared[k].insert(pt);
        };
        for (const Crossing& c : rep.crossings)
            add_shared(c.edge_a, c.edge_b, c.point);
        for (int e1 = 0; e1 < d.m(); ++e1)
            for (int e2 = e1 + 1; e2 < d.m(); ++e2) {
                const DrawnEdge& a = d.edges[size_t(e1)];
                const DrawnEdge& b = d.edges[size_t(e2)];
                for (int va : {a.u, a.v})
                    for (int vb : {b.u, b.v})
                        if (va == vb) {
                            const Pt& p = d.positions[size_t(va)];
                            add_shared(e1, e2, RatPt{Rat(p.x, 1), Rat(p.y, 1)});
                        }
            }
        for (auto& [key, pts] : shared) {
            if (pts.size() <= 1) continue;
            std::string msg = edge_pair(key.a, key.b) + " share " +
                              std::to_string(pts.size()) + " points";
            if (opts.strict_simple)
                ck.add(ViolationKind::Simplicity, key.a, key.b, msg);
            else
                rep.warnings.push_back(msg);
        }
    } else {
        // Certify engine: proper h-v crossings are legal in every mode, so
        // they are not enumerated. Everything else is checked exactly.
        rep.crossings_enumerated = false;
        rep.crossing_count = -1;
        ck.check_axis_overlaps();

        // Oblique segments against horizontals and verticals.
        for (int oi : index.oblique_ids) {
            const Seg& o = ck.segs[size_t(oi)];
            coord_t ylo = std::min(o.p.y, o.q.y), yhi = std::max(o.p.y, o.q.y);
            auto rlo = std::upper_bound(index.row_keys_sorted.begin(),
                                        index.row_keys_sorted.end(), ylo);
            for (auto it = rlo; it != index.row_keys_sorted.end() && *it < yhi; ++it) {
                const IntervalIndex& row = index.rows.at(*it);
                coord_t xlo = std::min(o.p.x, o.q.x), xhi = std::max(o.p.x, o.q.x);
                row.range(xlo, xhi, [&](int si) {
                    const Seg& h = ck.segs[size_t(si)];
                    if (properly_cross(o.p, o.q, h.p, h.q)) ck.judge_crossing(o, h, false);
                });
            }
            coord_t xlo = std::min(o.p.x, o.q.x), xhi = std::max(o.p.x, o.q.x);
            auto clo = std::upper_bound(index.col_keys_sorted.begin(),
                                        index.col_keys_sorted.end(), xlo);
            for (auto it = clo; it != index.col_keys_sorted.end() && *it < xhi; ++it) {
                index.cols.at(*it).range(ylo, yhi, [&](int si) {
                    const Seg& v = ck.segs[size_t(si)];
                    if (properly_cross(o.p, o.q, v.p, v.q)) ck.judge_crossing(o, v, false);
                });
            }
        }
        // Oblique/oblique interactions via an x-interval sweep.
        {
            std::vector<int> order = index.oblique_ids;
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                coord_t xa = std::min(ck.segs[size_t(a)].p.x, ck.segs[size_t(a)].q.x);
                coord_t xb = std::min(ck.segs[size_t(b)].p.x, ck.segs[size_t(b)].q.x);
                return xa < xb;
            });
            std::vector<int> active;
            for (int oi : order) {
                const Seg& o = ck.segs[size_t(oi)];
                coord_t xlo = std::min(o.p.x, o.q.x);
                active.erase(std::remove_if(active.begin(), active.end(),
                                            [&](int aj) {
                                                const Seg& a = ck.segs[size_t(aj)];
                                                return std::max(a.p.x, a.q.x) < xlo;
                                            }),
                             active.end());
                for (int aj : active) {
                    const Seg& a = ck.segs[size_t(aj)];
                    if (collinear_overlap(o.p, o.q, a.p, a.q)) {
                        if (!consecutive_same_edge(o, a))
                            ck.add(ViolationKind::Overlap, o.edge, a.edge,
                                   edge_pair(o.edge, a.edge) + " overlap collinearly");
                        else
                            ck.add(ViolationKind::Overlap, o.edge, a.edge,
                                   "edge " + std::to_string(o.edge) +
                                       " folds back onto itself at a bend");
                    } else if (!consecutive_same_edge(o, a) &&
                               properly_cross(o.p, o.q, a.p, a.q)) {
                        ck.judge_crossing(o, a, false);
                    }
                }
                active.push_back(oi);
            }
        }
    }

    // Density bookkeeping for the class the caller asked about.
    int s_for_density = opts.mode == Mode::SlopeRac ? opts.slopes.s() : 0;
    int k_for_density = opts.mode == Mode::SlopeRac ? -1 : opts.max_bends;
    rep.density = density_report(rep.n, rep.m, k_for_density, s_for_density);

    // Deterministic order before reporting.
    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const Violation& a, const Violation& b) {
                  if (a.kind != b.kind) return int(a.kind) < int(b.kind);
                  if (a.e1 != b.e1) return a.e1 < b.e1;
                  if (a.e2 != b.e2) return a.e2 < b.e2;
                  return a.message < b.message;
              });
    rep.violations.erase(std::unique(rep.violations.begin(), rep.violations.end(),
                                     [](const Violation& a, const Violation& b) {
                                         return a.kind == b.kind && a.e1 == b.e1 &&
                                                a.e2 == b.e2 && a.message == b.message;
                                     }),
                         rep.violations.end());
    rep.pass = rep.violations.empty();
    // A certified drawing violating its class bound would falsify the
    // corresponding upper-bound theorem; surface it loudly.
    if (rep.pass && (opts.mode == Mode::Aprac || opts.mode == Mode::SlopeRac)) {
        for (const auto& c : rep.density)
            if (!c.satisfied) rep.density_contradiction = true;
    }
    return rep;
}

std::string ValidationReport::to_text() const {
    std::ostringstream out;
    for (const auto& v : violations)
        out << "violation " << to_string(v.kind) << ": " << v.message << "\n";
    for (const auto& w : warnings) out << "warning: " << w << "\n";
    out << "summary: n=" << n << " m=" << m << " max-bends=" << max_bends;
    if (n > 0)
        out << " bbox=" << (bbox_hi.x - bbox_lo.x) << "x" << (bbox_hi.y - bbox_lo.y);
    if (crossings_enumerated)
        out << " crossings=" << crossing_count;
    else
        out << " crossings=not-enumerated";
    out << "\n";
    for (const auto& c : density)
        out << "density: " << c.name << " bound=" << c.bound
            << " slack=" << (double(m) - c.bound) << (c.satisfied ? " ok" : " EXCEEDED")
            << "\n";
    if (density_contradiction)
        out << "density: WARNING certified drawing exceeds its class bound\n";
    out << "verdict: " << (pass ? "pass" : "fail") << "\n";
    return out.str();
}

std::vector<Finding> detect_forbidden_configs(const Drawing& d) {
    if (d.max_bends() > 0)
        throw std::runtime_error("forbidden-configuration detectors need a straight-line drawing");
    const int n = d.n();
    std::vector<std::vector<char>> adj(size_t(n), std::vector<char>(size_t(n), 0));
    for (const auto& e : d.edges) {
        adj[size_t(e.u)][size_t(e.v)] = 1;
        adj[size_t(e.v)][size_t(e.u)] = 1;
    }
    std::vector<Finding> out;

    // P1: two edges sharing an endpoint that cross a common third edge.
    auto crossings = find_crossings(d);
    std::vector<std::vector<int>> crossed_by(size_t(d.m()));
    for (const auto& c : crossings) {
        crossed_by[size_t(c.edge_a)].push_back(c.edge_b);
        crossed_by[size_t(c.edge_b)].push_back(c.edge_a);
    }
    for (int g = 0; g < d.m(); ++g) {
        auto& list = crossed_by[size_t(g)];
        std::sort(list.begin(), list.end());
        for (size_t i = 0; i < list.size(); ++i)
            for (size_t j = i + 1; j < list.size(); ++j) {
                const DrawnEdge& e1 = d.edges[size_t(list[i])];
                const DrawnEdge& e2 = d.edges[size_t(list[j])];
                int common = -1;
                for (int x : {e1.u, e1.v})
                    for (int y : {e2.u, e2.v})
                        if (x == y) common = x;
                if (common >= 0) {
                    Finding f;
                    f.kind = FindingKind::P1Fan;
                    f.vertices = {common, list[i], list[j], g};
                    f.message = "edges " + std::to_string(list[i]) + "," +
                                std::to_string(list[j]) + " (sharing vertex " +
                                std::to_string(common) + ") both cross edge " +
                                std::to_string(g);
                    out.push_back(std::move(f));
                }
            }
    }

    // Triangles of the graph, with exact point-in-triangle classification.
    auto side = [&](int a, int b, int w) {
        return sgn(cross(d.positions[size_t(a)], d.positions[size_t(b)],
                         d.positions[size_t(w)]));
    };
    struct Tri {
        int a, b, c;
    };
    std::vector<Tri> tris;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!adj[size_t(a)][size_t(b)]) continue;
            for (int c = b + 1; c < n; ++c)
                if (adj[size_t(a)][size_t(c)] && adj[size_t(b)][size_t(c)])
                    tris.push_back({a, b, c});
        }
    for (const Tri& t : tris) {
        int tri_orient = side(t.a, t.b, t.c);
        if (tri_orient == 0) continue;  // degenerate triangle, no interior
        std::vector<int> cls(size_t(n), 0);  // +1 inside, -1 outside, 0 boundary/member
        for (int w = 0; w < n; ++w) {
            if (w == t.a || w == t.b || w == t.c) continue;
            int s1 = side(t.a, t.b, w) * tri_orient;
            int s2 = side(t.b, t.c, w) * tri_orient;
            int s3 = side(t.c, t.a, w) * tri_orient;
            if (s1 > 0 && s2 > 0 && s3 > 0) {
                cls[size_t(w)] = 1;
            } else if (s1 < 0 || s2 < 0 || s3 < 0) {
                cls[size_t(w)] = -1;
            } else {
                cls[size_t(w)] = 0;
                Finding f;
                f.kind = FindingKind::BoundaryIncidence;
                f.vertices = {w, t.a, t.b, t.c};
                f.message = "vertex " + std::to_string(w) +
                            " lies on the boundary of triangle (" + std::to_string(t.a) + "," +
                            std::to_string(t.b) + "," + std::to_string(t.c) + ")";
                out.push_back(std::move(f));
            }
        }
        auto tri_name = [&]() {
            return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," +
                   std::to_string(t.c) + ")";
        };
        for (int u = 0; u < n; ++u) {
            if (u == t.a || u == t.b || u == t.c) continue;
            if (cls[size_t(u)] == -1) {
                // P2: u outside with two neighbors inside.
                std::vector<int> inside;
                for (int v = 0; v < n; ++v)
                    if (v != u && adj[size_t(u)][size_t(v)] && cls[size_t(v)] == 1 &&
                        v != t.a && v != t.b && v != t.c)
                        inside.push_back(v);
                for (size_t i = 0; i < inside.size(); ++i)
                    for (size_t j = i + 1; j < inside.size(); ++j) {
                        Finding f;
                        f.kind = FindingKind::P2TwoInside;
                        f.vertices = {u, inside[i], inside[j], t.a, t.b, t.c};
                        f.message = "vertex " + std::to_string(u) +
                                    " outside triangle " + tri_name() + " with neighbors " +
                                    std::to_string(inside[i]) + "," +
                                    std::to_string(inside[j]) + " inside";
                        out.push_back(std::move(f));
                    }
            } else if (cls[size_t(u)] == 1) {
                // P3: u inside with three neighbors outside.
                std::vector<int> outside;
                for (int v = 0; v < n; ++v)
                    if (v != u && adj[size_t(u)][size_t(v)] && cls[size_t(v)] == -1)
                        outside.push_back(v);
                if (outside.size() >= 3) {
                    Finding f;
                    f.kind = FindingKind::P3ThreeOutside;
                    f.vertices = {u, t.a, t.b, t.c};
                    f.vertices.insert(f.vertices.end(), outside.begin(), outside.end());
                    f.message = "vertex " + std::to_string(u) + " inside triangle " +
                                tri_name() + " with " + std::to_string(outside.size()) +
                                " neighbors outside";
                    out.push_back(std::move(f));
                }
                // P4: u inside, neighbor v outside, w adjacent to u, v and T.
                for (int v = 0; v < n; ++v) {
                    if (!adj[size_t(u)][size_t(v)] || cls[size_t(v)] != -1) continue;
                    for (int w = 0; w < n; ++w) {
                        if (w == u || w == v || w == t.a || w == t.b || w == t.c) continue;
                        if (adj[size_t(w)][size_t(u)] && adj[size_t(w)][size_t(v)] &&
                            adj[size_t(w)][size_t(t.a)] && adj[size_t(w)][size_t(t.b)] &&
                            adj[size_t(w)][size_t(t.c)]) {
                            Finding f;
                            f.kind = FindingKind::P4Apex;
                            f.vertices = {u, v, w, t.a, t.b, t.c};
                            f.message = "triangle " + tri_name() + " with " +
                                        std::to_string(u) + " inside, neighbor " +
                                        std::to_string(v) + " outside and apex " +
                                        std::to_string(w);
                            out.push_back(std::move(f));
                        }
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace aprac
