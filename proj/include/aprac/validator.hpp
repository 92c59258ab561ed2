#pragma once

#include <string>
#include <vector>

#include "aprac/drawing.hpp"

namespace aprac {

enum class Mode { Rac, Aprac, SlopeRac };

// Rational slope as a reduced direction vector (dx, dy); dx == 0 encodes a
// vertical line. The horizontal slope (1, 0) is always a member.
struct Slope {
    coord_t dx = 1;
    coord_t dy = 0;
};

struct SlopeSet {
    std::vector<Slope> slopes;

    int s() const { return int(slopes.size()); }
    bool segment_allowed(const Pt& p, const Pt& q) const;  // parallel or perpendicular
};

SlopeSet parse_slope_set(const std::string& text);  // "0;1;-2/3", vertical = "v"
SlopeSet default_slope_set();                        // {0}

enum class ViolationKind {
    Angle,
    Slope,
    Overlap,
    BendOnEdge,
    SegmentThroughVertex,
    BendCount,
    OffGrid,
    Degenerate,
    Simplicity,
};

std::string to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    int e1 = -1;  // primary edge involved, -1 when not edge-specific
    int e2 = -1;
    std::string message;
};

struct Crossing {
    int edge_a = 0, seg_a = 0;
    int edge_b = 0, seg_b = 0;
    RatPt point;
    bool right_angle = false;
    bool axis_parallel_pair = false;
};

struct DensityCheck {
    std::string name;
    double bound = 0;
    bool satisfied = true;  // m <= bound, decided exactly
};

struct ValidationReport {
    bool pass = false;
    std::vector<Violation> violations;
    std::vector<std::string> warnings;
    std::vector<Crossing> crossings;  // only when crossings_enumerated
    bool crossings_enumerated = false;
    long long crossing_count = -1;
    int n = 0, m = 0, max_bends = 0;
    Pt bbox_lo{0, 0}, bbox_hi{0, 0};
    std::vector<DensityCheck> density;
    // Set when a drawing this validator certifies exceeds its class density
    // bound; that would contradict the upper-bound theorems.
    bool density_contradiction = false;

    std::string to_text() const;
};

struct ValidateOptions {
    int max_bends = 2;
    Mode mode = Mode::Aprac;
    SlopeSet slopes = default_slope_set();
    bool strict_simple = false;
    enum class Engine { Auto, Full, Certify } engine = Engine::Auto;
};

// All unordered pairs of non-consecutive segments whose relative interiors
// meet in exactly one point. Exact all-pairs enumeration; desk scale.
std::vector<Crossing> find_crossings(const Drawing& d);

ValidationReport validate(const Drawing& d, const ValidateOptions& opts);

// Closed-form density bounds; k is the bend budget, s the slope count
// (s == 0 means "not a slope-rac question").
std::vector<DensityCheck> density_report(long long n, long long m, int k, int s);

enum class FindingKind { P1Fan, P2TwoInside, P3ThreeOutside, P4Apex, BoundaryIncidence };

struct Finding {
    FindingKind kind;
    std::vector<int> vertices;  // participating vertices, pattern-specific order
    std::string message;
};

// Straight-line forbidden-configuration detectors (Props 1-4). Requires a
// drawing with zero bends.
std::vector<Finding> detect_forbidden_configs(const Drawing& d);

}  // namespace aprac
