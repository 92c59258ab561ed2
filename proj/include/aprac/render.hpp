#pragma once

#include <string>

#include "aprac/drawing.hpp"

namespace aprac {

struct RenderOptions {
    int scale = 4;               // pixels per grid unit
    bool mark_crossings = false;
    bool color_by_factor = false;
};

// Deterministic SVG text: one polyline per edge, one circle per vertex,
// optional cross glyphs at crossing points. Identical input and options
// produce identical bytes.
std::string to_svg(const Drawing& d, const RenderOptions& opts = {});

}  // namespace aprac
