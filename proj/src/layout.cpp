#include "aprac/layout.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "aprac/factorization.hpp"

namespace aprac {

namespace {

// Doubly-linked list over vertex ids used while inserting special vertices.
struct VertexList {
    std::vector<int> prev, next;
    int head = -1, tail = -1;

    explicit VertexList(int n) : prev(size_t(n), -1), next(size_t(n), -1) {}

    void push_back(int v) {
        if (tail < 0) {
            head = tail = v;
        } else {
            next[size_t(tail)] = v;
            prev[size_t(v)] = tail;
            tail = v;
        }
    }
    void insert_before(int v, int at) {
        int p = prev[size_t(at)];
        prev[size_t(v)] = p;
        next[size_t(v)] = at;
        prev[size_t(at)] = v;
        if (p < 0)
            head = v;
        else
            next[size_t(p)] = v;
    }
    void insert_after(int v, int at) {
        int nx = next[size_t(at)];
        next[size_t(v)] = nx;
        prev[size_t(v)] = at;
        next[size_t(at)] = v;
        if (nx < 0)
            tail = v;
        else
            prev[size_t(nx)] = v;
    }
    void push_front(int v) {
        if (head < 0) {
            head = tail = v;
        } else {
            insert_before(v, head);
        }
    }
};

struct FactorView {
    std::vector<int> succ, pred;      // within the factor
    std::vector<int> arc_of_vertex;   // vertex -> its outgoing arc index

    FactorView(const DirectedMultigraph& dmg, const std::vector<int>& f)
        : succ(size_t(dmg.n), -1), pred(size_t(dmg.n), -1), arc_of_vertex(size_t(dmg.n), -1) {
        for (int idx : f) {
            const Arc& a = dmg.arcs[size_t(idx)];
            if (succ[size_t(a.from)] != -1 || pred[size_t(a.to)] != -1)
                throw std::runtime_error("malformed factor: vertex degree exceeds one");
            succ[size_t(a.from)] = a.to;
            pred[size_t(a.to)] = a.from;
            arc_of_vertex[size_t(a.from)] = idx;
        }
        for (int v = 0; v < dmg.n; ++v)
            if (succ[size_t(v)] < 0 || pred[size_t(v)] < 0)
                throw std::runtime_error("malformed factor: missing arcs at some vertex");
    }
};

}  // namespace

LinearOrder compute_order(const DirectedMultigraph& dmg, const std::vector<int>& fa,
                          const std::vector<int>& fb) {
    const int n = dmg.n;
    FactorView A(dmg, fa);
    FactorView B(dmg, fb);

    LinearOrder ord;
    ord.rank.assign(size_t(n), -1);
    ord.cycle_of.assign(size_t(n), -1);
    ord.path_pos.assign(size_t(n), -1);

    // Cycles of fa, discovered at their minimum vertex, which doubles as the
    // special vertex of the cycle.
    std::vector<std::vector<int>> paths;  // P_i, in walk order
    for (int v = 0; v < n; ++v) {
        if (ord.cycle_of[size_t(v)] != -1) continue;
        int ci = int(ord.special.size());
        ord.special.push_back(v);
        std::vector<int> path;
        ord.cycle_of[size_t(v)] = ci;
        int size = 1;
        for (int w = A.succ[size_t(v)]; w != v; w = A.succ[size_t(w)]) {
            ord.cycle_of[size_t(w)] = ci;
            ord.path_pos[size_t(w)] = int(path.size());
            path.push_back(w);
            ++size;
        }
        ord.cycle_size.push_back(size);
        paths.push_back(std::move(path));
    }

    const int k = int(ord.special.size());
    VertexList list(n);
    std::vector<int> block_first(size_t(k), -1), block_last(size_t(k), -1);
    for (int i = 0; i < k; ++i) {
        for (int w : paths[size_t(i)]) list.push_back(w);
        if (!paths[size_t(i)].empty()) {
            block_first[size_t(i)] = paths[size_t(i)].front();
            block_last[size_t(i)] = paths[size_t(i)].back();
        }
    }

    // Relative order of two vertices when at least one may be missing from
    // the list: distinct cycles compare by cycle index, vertices of the same
    // path by walk position.
    auto known_before = [&](int c, int d) {
        if (ord.cycle_of[size_t(c)] != ord.cycle_of[size_t(d)])
            return ord.cycle_of[size_t(c)] < ord.cycle_of[size_t(d)];
        return ord.path_pos[size_t(c)] < ord.path_pos[size_t(d)];
    };

    for (int i = 0; i < k; ++i) {
        int u = ord.special[size_t(i)];
        auto place_front_of_block = [&]() {
            if (i == 0) {
                list.push_front(u);
            } else {
                list.insert_after(u, block_last[size_t(i) - 1]);
            }
            if (block_first[size_t(i)] < 0) {
                block_first[size_t(i)] = block_last[size_t(i)] = u;
            } else {
                block_first[size_t(i)] = u;
            }
        };
        if (ord.cycle_size[size_t(i)] <= 2) {
            place_front_of_block();
            continue;
        }
        int a = A.succ[size_t(u)];
        int b = A.pred[size_t(u)];
        int c = B.succ[size_t(u)];
        auto place_back_of_block = [&]() {
            list.insert_after(u, b);
            block_last[size_t(i)] = u;
        };
        if (c == u) {
            // u's own fb arc is a self-loop; nothing constrains the side.
            place_front_of_block();
            continue;
        }
        if (c == a || c == b) {
            // The fb arc duplicates a cycle edge of u. Placing u next to c
            // turns both copies into oblique-2 edges, so neither can ever
            // contend for an orthogonal port.
            if (c == a)
                place_front_of_block();
            else
                place_back_of_block();
            continue;
        }
        int j = ord.cycle_of[size_t(c)];
        if (j < i) {
            place_front_of_block();
        } else if (j > i) {
            place_back_of_block();
        } else {
            // c lies on P_i. The side is dictated by c's own outgoing arc in
            // fb; in the degenerate cases (that arc returns to u or is a
            // self-loop) any side next to c keeps every port claim free.
            int d = B.succ[size_t(c)];
            if (d == u || d == c || known_before(c, d)) {
                list.insert_before(u, c);
                if (block_first[size_t(i)] == c) block_first[size_t(i)] = u;
            } else {
                list.insert_after(u, c);
                if (block_last[size_t(i)] == c) block_last[size_t(i)] = u;
            }
        }
    }

    ord.by_rank.clear();
    ord.by_rank.reserve(size_t(n));
    for (int v = list.head; v >= 0; v = list.next[size_t(v)]) {
        ord.rank[size_t(v)] = int(ord.by_rank.size());
        ord.by_rank.push_back(v);
    }
    if (int(ord.by_rank.size()) != n) throw std::logic_error("order lost vertices");
    return ord;
}

std::vector<ClassifiedArc> classify_and_assign(const LinearOrder& order,
                                               const DirectedMultigraph& dmg,
                                               const std::vector<int>& fa,
                                               const std::vector<int>& fb) {
    std::vector<ClassifiedArc> out;
    auto classify_one = [&](int idx, bool first_factor) {
        const Arc& a = dmg.arcs[size_t(idx)];
        if (a.from == a.to) return;  // self-loops are never drawn
        ClassifiedArc ca;
        ca.arc_index = idx;
        ca.src = a.from;
        ca.dst = a.to;
        ca.from_first_factor = first_factor;
        int ru = order.rank[size_t(ca.src)];
        int rv = order.rank[size_t(ca.dst)];
        if (ru + 1 == rv || rv + 1 == ru) {
            ca.oblique2 = true;
        } else {
            ca.oblique2 = false;
            ca.port = ru < rv ? Port::East : Port::West;
        }
        out.push_back(ca);
    };
    for (int idx : fa) classify_one(idx, true);
    for (int idx : fb) classify_one(idx, false);

    // Port conflicts: a vertex whose two outgoing oblique-1 arcs claim the
    // same horizontal port. Resolved by reversing the first-factor member;
    // the construction guarantees the flips introduce no new conflicts.
    auto collect_conflicts = [&]() {
        std::vector<std::pair<int, int>> pairs;  // indices into `out`
        std::vector<std::array<int, 2>> users(size_t(dmg.n), {-1, -1});
        for (size_t t = 0; t < out.size(); ++t) {
            if (out[t].oblique2) continue;
            int side = out[t].port == Port::West ? 0 : 1;
            int& cell = users[size_t(out[t].src)][size_t(side)];
            if (cell < 0)
                cell = int(t);
            else
                pairs.emplace_back(cell, int(t));
        }
        return pairs;
    };
    std::vector<std::pair<int, Port>> flips;  // (arc position, pre-flip port)
    for (auto [x, y] : collect_conflicts()) {
        int first = out[size_t(x)].from_first_factor ? x : y;
        if (out[size_t(x)].from_first_factor == out[size_t(y)].from_first_factor)
            throw std::logic_error("port conflict not between distinct factors");
        ClassifiedArc& fa_arc = out[size_t(first)];
        flips.emplace_back(first, fa_arc.port);
        std::swap(fa_arc.src, fa_arc.dst);
        fa_arc.reversed = !fa_arc.reversed;
        int ru = order.rank[size_t(fa_arc.src)];
        int rv = order.rank[size_t(fa_arc.dst)];
        fa_arc.port = ru < rv ? Port::East : Port::West;
    }
    if (!collect_conflicts().empty())
        throw std::logic_error("port conflict survived reorientation pass");

    // At most one reorientation per cycle of fa and port side: a W-side
    // conflict can only involve the arc entering the cycle's special vertex,
    // an E-side one only the arc the special vertex was inserted into.
    {
        std::vector<std::array<int, 2>> per_cycle(order.special.size(), {0, 0});
        for (auto [t, pre_port] : flips) {
            int cyc = order.cycle_of[size_t(out[size_t(t)].src)];
            int side = pre_port == Port::West ? 0 : 1;
            if (++per_cycle[size_t(cyc)][size_t(side)] > 1)
                throw std::logic_error("multiple same-side reorientations in one cycle");
        }
    }
    return out;
}

namespace {

void assign_slots(std::vector<ClassifiedArc>& arcs, const DirectedMultigraph& dmg, int n) {
    // Incoming oblique-1 arcs at a common target receive distinct offsets
    // from {-2,-1,1,2}, in ascending edge id order.
    static constexpr int kSlots[4] = {-2, -1, 1, 2};
    std::vector<std::vector<int>> incoming(static_cast<size_t>(n));
    for (size_t t = 0; t < arcs.size(); ++t)
        if (!arcs[t].oblique2) incoming[size_t(arcs[t].dst)].push_back(int(t));
    for (auto& list : incoming) {
        std::sort(list.begin(), list.end(), [&](int x, int y) {
            return dmg.arcs[size_t(arcs[size_t(x)].arc_index)].id <
                   dmg.arcs[size_t(arcs[size_t(y)].arc_index)].id;
        });
        if (list.size() > 4)
            throw std::logic_error("slot demand exceeds {-2,-1,1,2}; pipeline invariant broken");
        for (size_t s = 0; s < list.size(); ++s) arcs[size_t(list[s])].slot = kSlots[s];
    }
}

}  // namespace

Drawing place_bends(const DirectedMultigraph& dmg, const LinearOrder& order_x,
                    const LinearOrder& order_y, const std::vector<ClassifiedArc>& pair_x,
                    const std::vector<ClassifiedArc>& pair_y, const Graph& g,
                    const DrawOptions& opts) {
    const int n = dmg.n;
    Drawing d;
    d.positions.resize(size_t(n));
    for (int v = 0; v < n; ++v)
        d.positions[size_t(v)] = {8LL * order_x.rank[size_t(v)], 8LL * order_y.rank[size_t(v)]};

    std::vector<ClassifiedArc> px = pair_x;
    std::vector<ClassifiedArc> py = pair_y;
    assign_slots(px, dmg, n);
    assign_slots(py, dmg, n);

    struct Routed {
        EdgeId id;
        int src, dst;
        std::vector<Pt> bends;
        bool augmented;
        int group;
    };
    std::vector<Routed> routed;

    auto route = [&](const ClassifiedArc& ca, bool vertical_pair, int group) {
        const Pt pu = d.positions[size_t(ca.src)];
        const Pt pv = d.positions[size_t(ca.dst)];
        Routed r;
        r.id = dmg.arcs[size_t(ca.arc_index)].id;
        r.src = ca.src;
        r.dst = ca.dst;
        r.augmented = dmg.arcs[size_t(ca.arc_index)].augmented;
        r.group = group;
        if (vertical_pair) {
            if (ca.oblique2) {
                coord_t X = order_x.rank[size_t(ca.src)] < order_x.rank[size_t(ca.dst)]
                                ? pu.x + 4
                                : pu.x - 4;
                coord_t by = pu.y + (pv.y < pu.y ? -3 : 3);
                coord_t bv = pv.y + (pu.y < pv.y ? -3 : 3);
                r.bends = {{X, by}, {X, bv}};
            } else {
                coord_t bx = pv.x + ca.slot;
                coord_t side = pu.y > pv.y ? pv.y + 4 : pv.y - 4;
                r.bends = {{bx, pu.y}, {bx, side}};
            }
        } else {
            if (ca.oblique2) {
                coord_t Y = order_y.rank[size_t(ca.src)] < order_y.rank[size_t(ca.dst)]
                                ? pu.y + 4
                                : pu.y - 4;
                coord_t bx = pu.x + (pv.x < pu.x ? -3 : 3);
                coord_t bv = pv.x + (pu.x < pv.x ? -3 : 3);
                r.bends = {{bx, Y}, {bv, Y}};
            } else {
                coord_t by = pv.y + ca.slot;
                coord_t side = pu.x > pv.x ? pv.x + 4 : pv.x - 4;
                r.bends = {{pu.x, by}, {side, by}};
            }
        }
        routed.push_back(std::move(r));
    };

    for (const auto& ca : px) route(ca, true, ca.from_first_factor ? 0 : 2);
    for (const auto& ca : py) route(ca, false, ca.from_first_factor ? 1 : 3);

    // Emit original edges first, keyed by their stable ids, then any
    // augmented arcs the caller asked to keep.
    std::vector<const Routed*> by_id(size_t(g.m()), nullptr);
    std::vector<const Routed*> extra;
    for (const auto& r : routed) {
        if (!r.augmented && r.id < g.m())
            by_id[size_t(r.id)] = &r;
        else
            extra.push_back(&r);
    }
    for (EdgeId id = 0; id < g.m(); ++id) {
        const Routed* r = by_id[size_t(id)];
        if (!r) throw std::logic_error("original edge lost in the pipeline");
        DrawnEdge e;
        e.u = g.edge(id).u;
        e.v = g.edge(id).v;
        e.group = r->group;
        e.augmented = false;
        e.bends = r->bends;
        if (r->src != e.u) std::reverse(e.bends.begin(), e.bends.end());
        d.edges.push_back(std::move(e));
    }
    if (opts.keep_augmented) {
        std::sort(extra.begin(), extra.end(),
                  [](const Routed* a, const Routed* b) { return a->id < b->id; });
        for (const Routed* r : extra) {
            DrawnEdge e;
            e.u = r->src;
            e.v = r->dst;
            e.group = r->group;
            e.augmented = true;
            e.bends = r->bends;
            d.edges.push_back(std::move(e));
        }
    }
    return d;
}

Drawing draw(const Graph& g, const DrawOptions& opts) {
    if (max_degree(g) > 8)
        throw std::runtime_error("draw: graph has maximum degree above 8");
    DirectedMultigraph dmg = regularize(g, 4);
    TwoFactorSet tf = split_two_factors(dmg, 4);
    LinearOrder ox = compute_order(dmg, tf.factors[0], tf.factors[2]);
    LinearOrder oy = compute_order(dmg, tf.factors[1], tf.factors[3]);
    auto cx = classify_and_assign(ox, dmg, tf.factors[0], tf.factors[2]);
    auto cy = classify_and_assign(oy, dmg, tf.factors[1], tf.factors[3]);
    return place_bends(dmg, ox, oy, cx, cy, g, opts);
}

void verify_order_invariants(const LinearOrder& order, const DirectedMultigraph& dmg,
                             const std::vector<int>& fa) {
    const int n = dmg.n;
    // Bijectivity.
    std::vector<char> seen(size_t(n), 0);
    for (int v = 0; v < n; ++v) {
        int r = order.rank[size_t(v)];
        if (r < 0 || r >= n || seen[size_t(r)]) throw std::logic_error("rank is not a bijection");
        seen[size_t(r)] = 1;
        if (order.by_rank[size_t(r)] != v) throw std::logic_error("rank tables disagree");
    }
    FactorView A(dmg, fa);
    // Invariant I.1.
    for (size_t i = 0; i < order.special.size(); ++i) {
        int u = order.special[i];
        int r = order.rank[size_t(u)];
        if (order.cycle_size[i] > 1) {
            bool ok = false;
            for (int dr : {-1, 1}) {
                int rr = r + dr;
                if (rr < 0 || rr >= n) continue;
                int w = order.by_rank[size_t(rr)];
                if (order.cycle_of[size_t(w)] == int(i) && w != u) ok = true;
            }
            if (!ok) throw std::logic_error("I.1 violated: special vertex not next to its path");
        } else {
            if (i == 0) {
                // First vertex of the whole order unless every earlier cycle is
                // empty; with i == 0 it must be rank 0.
                if (r != 0) throw std::logic_error("I.1 violated at first singleton cycle");
            } else {
                if (r == 0) throw std::logic_error("I.1 violated: singleton at front");
                int w = order.by_rank[size_t(r - 1)];
                if (order.cycle_of[size_t(w)] != int(i) - 1)
                    throw std::logic_error("I.1 violated: singleton not after previous cycle");
            }
        }
    }
    // Observation 1: cycles occupy contiguous, increasing rank ranges.
    for (int r = 1; r < n; ++r) {
        int c0 = order.cycle_of[size_t(order.by_rank[size_t(r - 1)])];
        int c1 = order.cycle_of[size_t(order.by_rank[size_t(r)])];
        if (c1 < c0 || c1 > c0 + 1)
            throw std::logic_error("cycle blocks are not contiguous in the order");
    }
}

void verify_classification_invariants(const LinearOrder& order, const DirectedMultigraph& dmg,
                                      const std::vector<ClassifiedArc>& arcs) {
    std::vector<std::array<int, 2>> used(size_t(dmg.n), {0, 0});
    for (const auto& ca : arcs) {
        int ru = order.rank[size_t(ca.src)];
        int rv = order.rank[size_t(ca.dst)];
        if (ca.oblique2) {
            if (ru + 1 != rv && rv + 1 != ru)
                throw std::logic_error("I.2 violated: oblique-2 endpoints not consecutive");
        } else {
            if (ru + 1 == rv || rv + 1 == ru)
                throw std::logic_error("consecutive endpoints classified oblique-1");
            Port expect = ru < rv ? Port::East : Port::West;
            if (ca.port != expect) throw std::logic_error("I.3 violated: wrong port side");
            if (++used[size_t(ca.src)][ca.port == Port::West ? 0 : 1] > 1)
                throw std::logic_error("I.4 violated: port doubly assigned");
        }
    }
}

}  // namespace aprac
