#pragma once

#include <vector>

#include "aprac/drawing.hpp"
#include "aprac/graph.hpp"

namespace aprac {

// Total vertex order (one of the two coordinate orders), plus the cycle
// bookkeeping the classification step relies on.
struct LinearOrder {
    std::vector<int> rank;     // vertex -> position 0..n-1
    std::vector<int> by_rank;  // position -> vertex

    // Cycle structure of the first factor the order was built from.
    std::vector<int> cycle_of;   // vertex -> cycle index (cycles ordered by min vertex)
    std::vector<int> special;    // cycle index -> its special vertex
    std::vector<int> path_pos;   // vertex -> position along P_i, -1 for specials
    std::vector<int> cycle_size; // cycle index -> |C_i|
};

enum class Port { North, East, South, West };

// One drawn arc of a factor pair after classification. `src`/`dst` reflect
// the final orientation (a conflict may reverse an arc of the first factor).
struct ClassifiedArc {
    int arc_index = 0;  // into DirectedMultigraph::arcs
    int src = 0;
    int dst = 0;
    bool from_first_factor = false;
    bool reversed = false;
    bool oblique2 = false;
    Port port = Port::East;  // oblique-1 only
    int slot = 0;            // oblique-1 only, assigned during bend placement
};

// Builds the order defined by two 2-factors (the paper's \prec_x from
// F1 and F3, or \prec_y from F2 and F4). Self-loop arcs contribute
// singleton cycles.
LinearOrder compute_order(const DirectedMultigraph& dmg, const std::vector<int>& fa,
                          const std::vector<int>& fb);

// Classifies every non-loop arc of fa and fb against the order and assigns
// orthogonal ports, reorienting at most one arc of fa per cycle to keep
// every port unique. Throws std::logic_error when a conflict survives.
std::vector<ClassifiedArc> classify_and_assign(const LinearOrder& order,
                                               const DirectedMultigraph& dmg,
                                               const std::vector<int>& fa,
                                               const std::vector<int>& fb);

struct DrawOptions {
    bool keep_augmented = false;
};

// Places vertices at (8i, 8j) and routes each classified arc with at most
// two bends. `pair_x` arcs get vertical middle segments, `pair_y` arcs
// horizontal ones.
Drawing place_bends(const DirectedMultigraph& dmg, const LinearOrder& order_x,
                    const LinearOrder& order_y, const std::vector<ClassifiedArc>& pair_x,
                    const std::vector<ClassifiedArc>& pair_y, const Graph& g,
                    const DrawOptions& opts);

// Full pipeline of the degree-8 theorem. Requires max_degree(g) <= 8.
Drawing draw(const Graph& g, const DrawOptions& opts = {});

// Test support: these throw std::logic_error on violation.
void verify_order_invariants(const LinearOrder& order, const DirectedMultigraph& dmg,
                             const std::vector<int>& fa);
void verify_classification_invariants(const LinearOrder& order, const DirectedMultigraph& dmg,
                                      const std::vector<ClassifiedArc>& arcs);

}  // namespace aprac
