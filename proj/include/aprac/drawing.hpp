#pragma once

#include <string>
#include <vector>

#include "aprac/geometry.hpp"

namespace aprac {

struct DrawnEdge {
    int u = 0;
    int v = 0;
    std::vector<Pt> bends;  // ordered from u to v
    int group = -1;         // optional factor index for rendering; -1 = none
    bool augmented = false;

    int bend_count() const { return int(bends.size()); }
};

// Polyline drawing: integer vertex positions plus per-edge ordered bends.
struct Drawing {
    std::vector<Pt> positions;  // by vertex id
    std::vector<DrawnEdge> edges;

    int n() const { return int(positions.size()); }
    int m() const { return int(edges.size()); }

    // Full polyline of an edge including endpoints.
    std::vector<Pt> polyline(int edge_index) const;

    int max_bends() const;
    void bounding_box(Pt& lo, Pt& hi) const;  // undefined for empty drawings

    Drawing translated(coord_t dx, coord_t dy) const;
    Drawing rotated90() const;          // (x,y) -> (-y,x)
    Drawing rotated45_scaled() const;   // (x,y) -> (x-y, x+y)
};

Drawing parse_drawing(const std::string& text);
std::string serialize_drawing(const Drawing& d, bool emit_groups = false);

}  // namespace aprac
