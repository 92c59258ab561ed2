#include "aprac/drawing.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace aprac {

std::vector<Pt> Drawing::polyline(int edge_index) const {
    const DrawnEdge& e = edges[size_t(edge_index)];
    std::vector<Pt> pts;
    pts.reserve(e.bends.size() + 2);
    pts.push_back(positions[size_t(e.u)]);
    for (const Pt& b : e.bends) pts.push_back(b);
    pts.push_back(positions[size_t(e.v)]);
    return pts;
}

int Drawing::max_bends() const {
    int best = 0;
    for (const auto& e : edges) best = std::max(best, e.bend_count());
    return best;
}

void Drawing::bounding_box(Pt& lo, Pt& hi) const {
    lo = {0, 0};
    hi = {0, 0};
    bool first = true;
    auto feed = [&](const Pt& p) {
        if (first) {
            lo = hi = p;
            first = false;
            return;
        }
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    };
    for (const Pt& p : positions) feed(p);
    for (const auto& e : edges)
        for (const Pt& b : e.bends) feed(b);
}

Drawing Drawing::translated(coord_t dx, coord_t dy) const {
    Drawing out = *this;
    for (Pt& p : out.positions) {
        p.x += dx;
        p.y += dy;
    }
    for (auto& e : out.edges)
        for (Pt& b : e.bends) {
            b.x += dx;
            b.y += dy;
        }
    return out;
}

Drawing Drawing::rotated90() const {
    Drawing out = *this;
    auto rot = [](Pt p) { return Pt{-p.y, p.x}; };
    for (Pt& p : out.positions) p = rot(p);
    for (auto& e : out.edges)
        for (Pt& b : e.bends) b = rot(b);
    return out;
}

Drawing Drawing::rotated45_scaled() const {
    Drawing out = *this;
    auto rot = [](Pt p) { return Pt{p.x - p.y, p.x + p.y}; };
    for (Pt& p : out.positions) p = rot(p);
    for (auto& e : out.edges)
        for (Pt& b : e.bends) b = rot(b);
    return out;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

void check_coord(int line, coord_t c) {
    if (c < -kCoordLimit || c > kCoordLimit)
        parse_fail(line, "coordinate exceeds supported range");
}

}  // namespace

Drawing parse_drawing(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    Drawing d;
    std::vector<bool> seen_vertex;
    std::vector<int> groups;  // parsed from optional "# f <edge> <group>" comments
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            std::istringstream cs(line.substr(first + 1));
            std::string tag;
            if (cs >> tag && tag == "f") {
                long long idx, grp;
                if (cs >> idx >> grp) {
                    if (idx >= 0) {
                        if (size_t(idx) >= groups.size()) groups.resize(size_t(idx) + 1, -1);
                        groups[size_t(idx)] = int(grp);
                    }
                }
            }
            continue;
        }
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            long long id, x, y;
            if (!(ls >> id >> x >> y)) parse_fail(lineno, "malformed vertex line");
            if (id < 0) parse_fail(lineno, "negative vertex id");
            check_coord(lineno, x);
            check_coord(lineno, y);
            if (size_t(id) >= d.positions.size()) {
                d.positions.resize(size_t(id) + 1);
                seen_vertex.resize(size_t(id) + 1, false);
            }
            if (seen_vertex[size_t(id)]) parse_fail(lineno, "duplicate vertex id");
            seen_vertex[size_t(id)] = true;
            d.positions[size_t(id)] = {x, y};
            std::string rest;
            if (ls >> rest) parse_fail(lineno, "trailing tokens");
        } else if (tag == "e") {
            long long u, v;
            if (!(ls >> u >> v)) parse_fail(lineno, "malformed edge line");
            if (u < 0 || v < 0 || size_t(u) >= d.positions.size() ||
                size_t(v) >= d.positions.size())
                parse_fail(lineno, "vertex id out of range");
            if (!seen_vertex[size_t(u)] || !seen_vertex[size_t(v)])
                parse_fail(lineno, "edge references undeclared vertex");
            DrawnEdge e;
            e.u = int(u);
            e.v = int(v);
            std::string tok;
            while (ls >> tok) {
                if (tok != "b") parse_fail(lineno, "expected bend marker 'b'");
                long long x, y;
                if (!(ls >> x >> y)) parse_fail(lineno, "malformed bend");
                check_coord(lineno, x);
                check_coord(lineno, y);
                e.bends.push_back({x, y});
            }
            d.edges.push_back(std::move(e));
        } else {
            parse_fail(lineno, "unknown directive '" + tag + "'");
        }
    }
    for (size_t i = 0; i < seen_vertex.size(); ++i)
        if (!seen_vertex[i])
            throw std::runtime_error("vertex " + std::to_string(i) + " never declared");
    for (size_t i = 0; i < groups.size() && i < d.edges.size(); ++i)
        d.edges[i].group = groups[i];
    return d;
}

std::string serialize_drawing(const Drawing& d, bool emit_groups) {
    std::ostringstream out;
    for (size_t i = 0; i < d.positions.size(); ++i)
        out << "v " << i << " " << d.positions[i].x << " " << d.positions[i].y << "\n";
    for (const auto& e : d.edges) {
        out << "e " << e.u << " " << e.v;
        for (const Pt& b : e.bends) out << " b " << b.x << " " << b.y;
        out << "\n";
    }
    if (emit_groups) {
        for (size_t i = 0; i < d.edges.size(); ++i)
            if (d.edges[i].group >= 0) out << "# f " << i << " " << d.edges[i].group << "\n";
    }
    return out.str();
}

}  // namespace aprac
