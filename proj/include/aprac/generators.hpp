#pragma once

#include <utility>

#include "aprac/drawing.hpp"
#include "aprac/graph.hpp"

namespace aprac {

struct GeneratedFamily {
    Graph graph;
    Drawing drawing;
};

// k x k grid family with crossing face diagonals plus poles N and S;
// straight-line apRAC drawing. Requires k even, k >= 4.
GeneratedFamily gen_aprac0(int k);

// Triangle family: cycle along two legs, inner y-monotone path, four
// extremal vertices; 1-bend apRAC drawing. Requires n >= 8.
GeneratedFamily gen_aprac1(int n);

// Sheared-grid family with 10n-46 edges; 2-bend apRAC drawing.
// Requires k >= 6.
GeneratedFamily gen_aprac2(int k);

// Number of points with x-rank (resp. y-rank) strictly between p and q in
// the gen_aprac2 point set; exposed for the distance-property checks.
long long aprac2_dist_x(int k, int p, int q);
long long aprac2_dist_y(int k, int p, int q);

}  // namespace aprac
