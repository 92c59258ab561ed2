#pragma once

#include <optional>

#include "aprac/drawing.hpp"
#include "aprac/graph.hpp"
#include "aprac/validator.hpp"

namespace aprac {

struct OracleResult {
    std::optional<Drawing> drawing;  // empty = not found on this grid
    long long nodes_explored = 0;
    // A negative search outcome never proves non-realizability; callers must
    // surface this disclaimer.
    static constexpr const char* kDisclaimer =
        "not-found on a bounded grid is not a proof of non-realizability";
};

// Exhaustive straight-line search on the W x H integer grid, up to grid
// translation and the 8 axis symmetries. Placement order is descending
// degree; partial placements are pruned only through necessary conditions.
// Limits: n <= 7 and W*H <= 64.
OracleResult search_drawing(const Graph& g, int grid_w, int grid_h, Mode mode);

}  // namespace aprac
