#include "aprac/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace aprac {

namespace {

struct Search {
    const Graph& g;
    int W, H;
    Mode mode;
    int n;
    std::vector<int> order;          // placement order, descending degree
    std::vector<int> slot_of;        // vertex -> position in order
    std::vector<Pt> pos;             // by vertex
    std::vector<char> placed;        // by vertex
    std::vector<char> cell_used;     // grid occupancy
    struct PlacedEdge {
        EdgeId id;
        int u, v;
    };
    std::vector<PlacedEdge> edges;                 // fully placed edges, in placement order
    std::vector<std::vector<int>> crossing_lists;  // per placed-edge index
    long long nodes = 0;
    std::optional<Drawing> found;

    Search(const Graph& gr, int w, int h, Mode m) : g(gr), W(w), H(h), mode(m), n(gr.n()) {
        order.resize(size_t(n));
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> deg(size_t(n), 0);
        for (const auto& e : g.edges()) {
            deg[size_t(e.u)]++;
            deg[size_t(e.v)]++;
        }
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return deg[size_t(a)] > deg[size_t(b)]; });
        slot_of.assign(size_t(n), -1);
        for (int i = 0; i < n; ++i) slot_of[size_t(order[size_t(i)])] = i;
        pos.assign(size_t(n), Pt{0, 0});
        placed.assign(size_t(n), 0);
        cell_used.assign(size_t(W) * size_t(H), 0);
    }

    bool crossing_allowed(const Pt& a, const Pt& b, const Pt& c, const Pt& d) const {
        if (mode == Mode::Aprac) {
            Orient o1 = classify_direction(a, b);
            Orient o2 = classify_direction(c, d);
            return (o1 == Orient::Horizontal && o2 == Orient::Vertical) ||
                   (o1 == Orient::Vertical && o2 == Orient::Horizontal);
        }
        return right_angle(a, b, c, d);
    }

    // Checks all constraints the new vertex introduces; fills `new_edges`.
    bool feasible(int v, std::vector<PlacedEdge>& new_edges,
                  std::vector<std::vector<int>>& new_crossings) {
        const Pt pv = pos[size_t(v)];
        // No existing segment may pass through the new vertex.
        for (const auto& pe : edges)
            if (on_segment_open(pv, pos[size_t(pe.u)], pos[size_t(pe.v)])) return false;
        for (EdgeId id = 0; id < g.m(); ++id) {
            const auto& e = g.edge(id);
            int other = -1;
            if (e.u == v && placed[size_t(e.v)]) other = e.v;
            if (e.v == v && placed[size_t(e.u)]) other = e.u;
            if (other < 0) continue;
            Pt a = pv, b = pos[size_t(other)];
            // New segment through any placed vertex?
            for (int w = 0; w < n; ++w)
                if (placed[size_t(w)] && w != v && w != other &&
                    on_segment_closed(pos[size_t(w)], a, b))
                    return false;
            std::vector<int> crossers;
            for (size_t t = 0; t < edges.size(); ++t) {
                const auto& pe = edges[t];
                Pt c = pos[size_t(pe.u)], d = pos[size_t(pe.v)];
                if (collinear_overlap(a, b, c, d)) return false;
                bool share = pe.u == v || pe.v == v || pe.u == other || pe.v == other;
                if (share) continue;
                if (properly_cross(a, b, c, d)) {
                    if (!crossing_allowed(a, b, c, d)) return false;
                    crossers.push_back(int(t));
                }
            }
            new_edges.push_back({id, v, other});
            new_crossings.push_back(std::move(crossers));
        }
        // Crossings among the new edges themselves: they all share v.
        return true;
    }

    bool adjacent_edges(const PlacedEdge& a, const PlacedEdge& b) const {
        return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
    }

    // Prop 1: no edge may be crossed by two edges that share an endpoint.
    bool fan_free() const {
        for (size_t t = 0; t < edges.size(); ++t) {
            const auto& list = crossing_lists[t];
            for (size_t i = 0; i < list.size(); ++i)
                for (size_t j = i + 1; j < list.size(); ++j)
                    if (adjacent_edges(edges[size_t(list[i])], edges[size_t(list[j])]))
                        return false;
        }
        return true;
    }

    void accept() {
        Drawing d;
        d.positions.resize(size_t(n));
        for (int v = 0; v < n; ++v) d.positions[size_t(v)] = pos[size_t(v)];
        coord_t minx = 0, miny = 0;
        bool first = true;
        for (const Pt& p : d.positions) {
            if (first) {
                minx = p.x;
                miny = p.y;
                first = false;
            }
            minx = std::min(minx, p.x);
            miny = std::min(miny, p.y);
        }
        if (minx != 0 || miny != 0) return;  // a translate is explored elsewhere
        for (EdgeId id = 0; id < g.m(); ++id) {
            DrawnEdge e;
            e.u = g.edge(id).u;
            e.v = g.edge(id).v;
            d.edges.push_back(std::move(e));
        }
        ValidateOptions vo;
        vo.max_bends = 0;
        vo.mode = mode;
        if (validate(d, vo).pass) found = d;
    }

    void rec(int depth) {
        if (found) return;
        ++nodes;
        if (depth == n) {
            accept();
            return;
        }
        int v = order[size_t(depth)];
        // First vertex: fundamental domain of the grid's axis symmetries.
        coord_t max_x = W - 1, max_y = H - 1;
        if (depth == 0) {
            max_x = (W - 1) / 2;
            max_y = (H - 1) / 2;
        }
        for (coord_t x = 0; x <= max_x; ++x) {
            for (coord_t y = 0; y <= max_y; ++y) {
                if (depth == 0 && W == H && y > x) continue;
                size_t cell = size_t(y) * size_t(W) + size_t(x);
                if (cell_used[cell]) continue;
                pos[size_t(v)] = {x, y};
                placed[size_t(v)] = 1;
                cell_used[cell] = 1;
                std::vector<PlacedEdge> new_edges;
                std::vector<std::vector<int>> new_crossings;
                if (feasible(v, new_edges, new_crossings)) {
                    size_t base = edges.size();
                    for (size_t i = 0; i < new_edges.size(); ++i) {
                        edges.push_back(new_edges[i]);
                        crossing_lists.push_back(new_crossings[i]);
                        // Symmetric entries for existing edges.
                        for (int t : new_crossings[i])
                            crossing_lists[size_t(t)].push_back(int(base + i));
                    }
                    if (fan_free()) rec(depth + 1);
                    // Undo.
                    for (size_t i = new_edges.size(); i-- > 0;) {
                        for (int t : new_crossings[i]) crossing_lists[size_t(t)].pop_back();
                        crossing_lists.pop_back();
                        edges.pop_back();
                    }
                }
                placed[size_t(v)] = 0;
                cell_used[cell] = 0;
                if (found) return;
            }
        }
    }
};

}  // namespace

OracleResult search_drawing(const Graph& g, int grid_w, int grid_h, Mode mode) {
    if (g.n() > 7) throw std::runtime_error("oracle limited to n <= 7");
    if (grid_w < 1 || grid_h < 1 || grid_w * grid_h > 64)
        throw std::runtime_error("oracle limited to grids with W*H <= 64");
    if (mode == Mode::SlopeRac)
        throw std::runtime_error("oracle supports modes rac and aprac only");
    OracleResult res;
    if (g.n() == 0) {
        res.drawing = Drawing{};
        return res;
    }
    Search s(g, grid_w, grid_h, mode);
    s.rec(0);
    res.drawing = s.found;
    res.nodes_explored = s.nodes;
    return res;
}

}  // namespace aprac
