#pragma once

#include <string>

#include "aprac/graph.hpp"

namespace aprac {

// Augments g with extra edges until every degree equals 2d, then orients all
// edges along Euler circuits so that indegree = outdegree = d everywhere.
// Precondition: max_degree(g) <= 2d.
DirectedMultigraph regularize(const Graph& g, int d);

// Splits a d-in/d-out multigraph into d directed 2-factors. Even d uses
// Euler splitting on the out/in bipartite view; odd d peels one perfect
// matching first.
TwoFactorSet split_two_factors(const DirectedMultigraph& dmg, int d);

// Throws std::logic_error when the invariants of a TwoFactorSet fail.
void check_two_factors(const DirectedMultigraph& dmg, const TwoFactorSet& tf, int d);

// Text listing used by the `decompose` subcommand: one line per factor,
// arcs as "u>v" tokens, augmented arcs suffixed '*'.
std::string format_factors(const DirectedMultigraph& dmg, const TwoFactorSet& tf);

}  // namespace aprac
