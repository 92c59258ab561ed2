#include "aprac/factorization.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace aprac {

namespace {

// Orients every edge of an even-degree multigraph along Euler circuits.
// Edges are given as endpoint pairs plus a payload index.
struct EulerOrienter {
    int n;
    struct HalfEdge {
        int to;
        int twin;
        int payload;
        bool used = false;
    };
    std::vector<HalfEdge> half;
    std::vector<std::vector<int>> inc;  // vertex -> half-edge indices
    std::vector<size_t> cursor;

    explicit EulerOrienter(int n_) : n(n_), inc(size_t(n_)), cursor(size_t(n_), 0) {}

    void add_edge(int u, int v, int payload) {
        int a = int(half.size());
        half.push_back({v, a + 1, payload});
        half.push_back({u, a, payload});
        inc[size_t(u)].push_back(a);
        inc[size_t(v)].push_back(a + 1);
    }

    // Returns per payload: true when traversed in the (u -> v) direction of add_edge.
    std::vector<char> orient() {
        std::vector<char> forward(half.size() / 2, 0);
        for (int start = 0; start < n; ++start) {
            while (cursor[size_t(start)] < inc[size_t(start)].size()) {
                int h0 = inc[size_t(start)][cursor[size_t(start)]];
                if (half[size_t(h0)].used) {
                    ++cursor[size_t(start)];
                    continue;
                }
                // Walk a closed circuit from `start`; every vertex has even
                // degree so the walk can always continue until it closes.
                int v = start;
                while (true) {
                    auto& cur = cursor[size_t(v)];
                    while (cur < inc[size_t(v)].size() && half[size_t(inc[size_t(v)][cur])].used) ++cur;
                    if (cur >= inc[size_t(v)].size()) break;
                    int h = inc[size_t(v)][cur];
                    half[size_t(h)].used = true;
                    half[size_t(half[size_t(h)].twin)].used = true;
                    forward[size_t(half[size_t(h)].payload)] = (h % 2 == 0) ? 1 : 0;
                    v = half[size_t(h)].to;
                }
            }
        }
        return forward;
    }
};

// Splits a d-regular bipartite multigraph (left = out-copies, right =
// in-copies) into per-arc factor labels. `arcs` maps arc index -> (left
// vertex, right vertex).
void split_regular_bipartite(int n, const std::vector<std::pair<int, int>>& arc_ends,
                             const std::vector<int>& arc_ids, int d,
                             std::vector<std::vector<int>>& out) {
    if (d == 0 || arc_ids.empty()) {
        for (int i = 0; i < d; ++i) out.emplace_back();
        return;
    }
    if (d == 1) {
        out.push_back(arc_ids);
        return;
    }
    if (d % 2 == 0) {
        // Euler split: bipartite graph on 2n nodes, left u, right n+v.
        EulerOrienter eo(2 * n);
        for (size_t i = 0; i < arc_ids.size(); ++i)
            eo.add_edge(arc_ends[size_t(arc_ids[i])].first,
                        n + arc_ends[size_t(arc_ids[i])].second, int(i));
        std::vector<char> fwd = eo.orient();
        std::vector<int> a, b;
        for (size_t i = 0; i < arc_ids.size(); ++i)
            (fwd[i] ? a : b).push_back(arc_ids[i]);
        split_regular_bipartite(n, arc_ends, a, d / 2, out);
        split_regular_bipartite(n, arc_ends, b, d / 2, out);
        return;
    }
    // Odd d: peel one perfect matching with augmenting paths, then recurse.
    // left vertex -> arc list positions
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (size_t i = 0; i < arc_ids.size(); ++i)
        adj[size_t(arc_ends[size_t(arc_ids[i])].first)].push_back(int(i));
    std::vector<int> match_right(size_t(n), -1);  // right vertex -> arc list position
    std::vector<char> visited;
    std::function<bool(int)> augment = [&](int u) -> bool {
        for (int pos : adj[size_t(u)]) {
            int w = arc_ends[size_t(arc_ids[size_t(pos)])].second;
            if (visited[size_t(w)]) continue;
            visited[size_t(w)] = 1;
            if (match_right[size_t(w)] < 0 ||
                augment(arc_ends[size_t(arc_ids[size_t(match_right[size_t(w)])])].first))
            {
                match_right[size_t(w)] = pos;
                return true;
            }
        }
        return false;
    };
    for (int u = 0; u < n; ++u) {
        visited.assign(size_t(n), 0);
        if (!augment(u))
            throw std::logic_error("regular bipartite graph without perfect matching");
    }
    std::vector<char> taken(arc_ids.size(), 0);
    std::vector<int> matching;
    for (int w = 0; w < n; ++w) {
        taken[size_t(match_right[size_t(w)])] = 1;
        matching.push_back(arc_ids[size_t(match_right[size_t(w)])]);
    }
    std::sort(matching.begin(), matching.end());
    out.push_back(matching);
    std::vector<int> rest;
    for (size_t i = 0; i < arc_ids.size(); ++i)
        if (!taken[i]) rest.push_back(arc_ids[i]);
    split_regular_bipartite(n, arc_ends, rest, d - 1, out);
}

}  // namespace

DirectedMultigraph regularize(const Graph& g, int d) {
    if (g.max_degree() > 2 * d)
        throw std::runtime_error("regularize: maximum degree exceeds 2d");
    int n = g.n();
    std::vector<int> deg(size_t(n), 0);
    struct UEdge {
        int u, v;
        EdgeId id;
        bool augmented;
    };
    std::vector<UEdge> und;
    for (EdgeId id = 0; id < g.m(); ++id) {
        const auto& e = g.edge(id);
        und.push_back({e.u, e.v, id, e.augmented});
        deg[size_t(e.u)]++;
        deg[size_t(e.v)]++;
    }
    EdgeId next_id = g.m();
    if (n > 0 && d > 0) {
        // Pair deficient vertices, lowest ids first.
        std::set<int> deficient;
        for (int v = 0; v < n; ++v)
            if (deg[size_t(v)] < 2 * d) deficient.insert(v);
        while (deficient.size() >= 2) {
            auto it = deficient.begin();
            int a = *it++;
            int b = *it;
            und.push_back({a, b, next_id++, true});
            if (++deg[size_t(a)] == 2 * d) deficient.erase(a);
            if (++deg[size_t(b)] == 2 * d) deficient.erase(b);
        }
        // One vertex may remain; its deficit is even, fix it with self-loops.
        if (!deficient.empty()) {
            int v = *deficient.begin();
            while (deg[size_t(v)] < 2 * d) {
                und.push_back({v, v, next_id++, true});
                deg[size_t(v)] += 2;
            }
        }
    }
    // All degrees equal 2d now; orient along Euler circuits.
    DirectedMultigraph dmg;
    dmg.n = n;
    dmg.arcs.resize(und.size());
    EulerOrienter eo(n);
    std::vector<size_t> loop_positions;
    for (size_t i = 0; i < und.size(); ++i) {
        if (und[i].u == und[i].v) {
            // A self-loop contributes one in and one out regardless of
            // orientation; place it directly.
            dmg.arcs[i] = {und[i].id, und[i].u, und[i].v, und[i].augmented};
            loop_positions.push_back(i);
        } else {
            eo.add_edge(und[i].u, und[i].v, int(i));
        }
    }
    // Self-loops add +1 to both indegree and outdegree whichever way they
    // point, so orienting the loopless part along Euler circuits suffices.
    std::vector<char> fwd = eo.orient();
    size_t payload = 0;
    for (size_t i = 0; i < und.size(); ++i) {
        if (und[i].u == und[i].v) continue;
        bool forward = fwd[payload++] != 0;
        dmg.arcs[i] = {und[i].id, forward ? und[i].u : und[i].v,
                       forward ? und[i].v : und[i].u, und[i].augmented};
    }
    return dmg;
}

TwoFactorSet split_two_factors(const DirectedMultigraph& dmg, int d) {
    {
        std::vector<int> in(size_t(dmg.n), 0), out(size_t(dmg.n), 0);
        for (const Arc& a : dmg.arcs) {
            out[size_t(a.from)]++;
            in[size_t(a.to)]++;
        }
        for (int v = 0; v < dmg.n; ++v)
            if (in[size_t(v)] != d || out[size_t(v)] != d)
                throw std::runtime_error("split_two_factors: multigraph is not d-in/d-out");
    }
    std::vector<std::pair<int, int>> ends(dmg.arcs.size());
    std::vector<int> all(dmg.arcs.size());
    for (size_t i = 0; i < dmg.arcs.size(); ++i) {
        ends[i] = {dmg.arcs[i].from, dmg.arcs[i].to};
        all[i] = int(i);
    }
    TwoFactorSet tf;
    split_regular_bipartite(dmg.n, ends, all, d, tf.factors);
    for (auto& f : tf.factors) std::sort(f.begin(), f.end());
    return tf;
}

void check_two_factors(const DirectedMultigraph& dmg, const TwoFactorSet& tf, int d) {
    if (int(tf.factors.size()) != d) throw std::logic_error("wrong number of factors");
    std::vector<char> used(dmg.arcs.size(), 0);
    for (const auto& f : tf.factors) {
        std::vector<int> in(size_t(dmg.n), 0), out(size_t(dmg.n), 0);
        for (int idx : f) {
            if (idx < 0 || size_t(idx) >= dmg.arcs.size())
                throw std::logic_error("factor references unknown arc");
            if (used[size_t(idx)]) throw std::logic_error("factors are not disjoint");
            used[size_t(idx)] = 1;
            out[size_t(dmg.arcs[size_t(idx)].from)]++;
            in[size_t(dmg.arcs[size_t(idx)].to)]++;
        }
        for (int v = 0; v < dmg.n; ++v)
            if (in[size_t(v)] != 1 || out[size_t(v)] != 1)
                throw std::logic_error("factor is not a 2-factor");
    }
    for (char u : used)
        if (!u) throw std::logic_error("factors do not cover all arcs");
}

std::string format_factors(const DirectedMultigraph& dmg, const TwoFactorSet& tf) {
    std::ostringstream out;
    for (const auto& f : tf.factors) {
        bool first = true;
        for (int idx : f) {
            const Arc& a = dmg.arcs[size_t(idx)];
            if (!first) out << " ";
            first = false;
            out << a.from << ">" << a.to;
            if (a.augmented) out << "*";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace aprac
