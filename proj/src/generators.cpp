#include "aprac/generators.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace aprac {

namespace {

void add_straight(GeneratedFamily& f, int u, int v) {
    f.graph.add_edge(u, v);
    DrawnEdge e;
    e.u = u;
    e.v = v;
    f.drawing.edges.push_back(std::move(e));
}

void add_polyline(GeneratedFamily& f, int u, int v, std::vector<Pt> bends) {
    f.graph.add_edge(u, v);
    DrawnEdge e;
    e.u = u;
    e.v = v;
    e.bends = std::move(bends);
    f.drawing.edges.push_back(std::move(e));
}

}  // namespace

// ---------------------------------------------------------------------------
// Straight-line family: diamond-rotated grid, crossing diagonals in every
// face, poles N and S fanned to the upper and lower staircase boundaries.
// ---------------------------------------------------------------------------

GeneratedFamily gen_aprac0(int k) {
    if (k < 4 || k % 2 != 0)
        throw std::runtime_error("gen_aprac0 requires an even parameter k >= 4");
    GeneratedFamily f;
    const int n = k * k + 2;
    f.graph = Graph(n);
    f.drawing.positions.resize(size_t(n));
    auto id = [&](int c, int r) { return c * k + r; };
    for (int c = 0; c < k; ++c)
        for (int r = 0; r < k; ++r)
            f.drawing.positions[size_t(id(c, r))] = {2LL * (c + r), 2LL * (c - r)};
    const int N = k * k, S = k * k + 1;
    // N sits up-right of the grid with height exceeding its abscissa, which
    // keeps every fan edge outside the rotated grid; S mirrors it below.
    const coord_t a = 4LL * k - 2, h = 4LL * k;
    f.drawing.positions[size_t(N)] = {a, h};
    f.drawing.positions[size_t(S)] = {a, -h};

    for (int c = 0; c < k; ++c)
        for (int r = 0; r < k; ++r) {
            if (c + 1 < k) add_straight(f, id(c, r), id(c + 1, r));
            if (r + 1 < k) add_straight(f, id(c, r), id(c, r + 1));
        }
    for (int c = 0; c + 1 < k; ++c)
        for (int r = 0; r + 1 < k; ++r) {
            add_straight(f, id(c, r), id(c + 1, r + 1));      // horizontal diagonal
            add_straight(f, id(c + 1, r), id(c, r + 1));      // vertical diagonal
        }
    // Upper boundary: row r=0 then column c=k-1 (2k-1 vertices).
    for (int c = 0; c < k; ++c) add_straight(f, N, id(c, 0));
    for (int r = 1; r < k; ++r) add_straight(f, N, id(k - 1, r));
    // Lower boundary: column c=0 then row r=k-1.
    for (int r = 0; r < k; ++r) add_straight(f, S, id(0, r));
    for (int c = 1; c < k; ++c) add_straight(f, S, id(c, k - 1));
    add_straight(f, N, S);
    return f;
}

// ---------------------------------------------------------------------------
// 1-bend family: legs of slope +-2, inner zig-zag path, fans rising to
// uniform bend lines, K4 routed around the outside.
// ---------------------------------------------------------------------------

GeneratedFamily gen_aprac1(int n) {
    if (n < 8) throw std::runtime_error("gen_aprac1 requires n >= 8");
    GeneratedFamily f;
    f.graph = Graph(n);
    f.drawing.positions.resize(size_t(n));
    const int p = (n - 4) / 2;
    const int q = (n - 4) - p;
    const coord_t B = 8LL * (n - 4);
    const coord_t ymax = 16LL * q - 8;
    const coord_t delta = ymax + 8;
    const coord_t ny = delta + 2 * B + 24;

    auto L = [&](int i) { return i - 1; };      // L_1..L_p -> 0..p-1
    auto R = [&](int j) { return p + j - 1; };  // R_1..R_q -> p..p+q-1
    const int N = n - 4, S = n - 3, W = n - 2, E = n - 1;

    for (int i = 1; i <= p; ++i)
        f.drawing.positions[size_t(L(i))] = {8LL * (i - 1), 16LL * (i - 1)};
    f.drawing.positions[size_t(R(1))] = {B, 0};
    for (int j = 2; j <= q; ++j)
        f.drawing.positions[size_t(R(j))] = {B - 4LL * (2 * j - 1), 16LL * j - 8};
    f.drawing.positions[size_t(N)] = {B + 4, ny};
    f.drawing.positions[size_t(S)] = {B / 2, -24};
    f.drawing.positions[size_t(W)] = {-16, -4};
    f.drawing.positions[size_t(E)] = {B + 16, -4};

    auto pos = [&](int v) { return f.drawing.positions[size_t(v)]; };

    // Cycle: the two legs, the base, the apex.
    for (int i = 1; i < p; ++i) add_straight(f, L(i), L(i + 1));
    for (int j = 1; j < q; ++j) add_straight(f, R(j), R(j + 1));
    add_straight(f, L(1), R(1));
    add_straight(f, L(p), R(q));

    // Inner y-monotone path R_1, L_2, R_2, ... excluding L_1 and R_q.
    // Each edge: horizontal port at its upper endpoint, steep stub into the
    // lower one.
    for (int j = 1; j < p; ++j) {
        // (R_j, L_{j+1}): horizontal at y(L_{j+1}) from L_{j+1} toward R_j.
        Pt bend{B - 8LL * j - 2, 16LL * j};
        add_polyline(f, R(j), L(j + 1), {bend});
    }
    int top_b = (q == p) ? p - 1 : p;
    for (int i = 2; i <= top_b; ++i) {
        // (L_i, R_i): horizontal at y(R_i) from R_i toward L_i.
        Pt bend{8LL * i - 3, 16LL * i - 8};
        add_polyline(f, L(i), R(i), {bend});
    }

    // Fans. Bends on uniform lines keep every oblique strictly on its own
    // side of the line.
    for (int v = 0; v < n - 4; ++v) {
        Pt pv = pos(v);
        add_polyline(f, N, v, {{pv.x, pv.y + delta}});
        add_polyline(f, S, v, {{pv.x, -8}});
    }
    for (int i = 1; i <= p; ++i)
        add_polyline(f, W, L(i), {{-8, pos(L(i)).y}});
    add_polyline(f, W, R(q), {{-8, pos(R(q)).y}});
    for (int j = 1; j <= q; ++j)
        add_polyline(f, E, R(j), {{B + 8, pos(R(j)).y}});

    // K4 on the extremal vertices.
    add_polyline(f, N, W, {{-16, ny}});
    add_polyline(f, N, E, {{B + 16, ny}});
    add_polyline(f, N, S, {{B + 4, -32}});
    add_polyline(f, S, W, {{-16, -24}});
    add_polyline(f, S, E, {{B + 16, -24}});
    add_straight(f, W, E);
    return f;
}

// ---------------------------------------------------------------------------
// 2-bend family: sheared k x k grid with the 8-pitch box discipline.
// ---------------------------------------------------------------------------

namespace {

long long aprac2_xrank(int /*k*/, int pid) { return pid; }  // id(c,r) = c*k + r
long long aprac2_yrank(int k, int pid) {
    int c = pid / k, r = pid % k;
    return (long long)r * k + c;
}

}  // namespace

long long aprac2_dist_x(int k, int p, int q) {
    return std::llabs(aprac2_xrank(k, p) - aprac2_xrank(k, q)) - 1;
}
long long aprac2_dist_y(int k, int p, int q) {
    return std::llabs(aprac2_yrank(k, p) - aprac2_yrank(k, q)) - 1;
}

GeneratedFamily gen_aprac2(int k) {
    if (k < 6) throw std::runtime_error("gen_aprac2 requires k >= 6");
    GeneratedFamily f;
    const int kk = k * k;
    const int n = kk + 4;
    f.graph = Graph(n);
    f.drawing.positions.resize(size_t(n));
    const coord_t M = 8LL * (kk - 1);
    // A column/row coordinate congruent to 5 mod 8 near the middle: clear of
    // every structure class used inside the grid.
    const coord_t C5 = (M / 2 % 8 == 4) ? M / 2 + 1 : M / 2 + 5;

    auto xr = [&](int pid) { return aprac2_xrank(k, pid); };
    auto yr = [&](int pid) { return aprac2_yrank(k, pid); };
    for (int pid = 0; pid < kk; ++pid)
        f.drawing.positions[size_t(pid)] = {8LL * xr(pid), 8LL * yr(pid)};
    const int N = kk, E = kk + 1, S = kk + 2, W = kk + 3;
    f.drawing.positions[size_t(N)] = {C5, M + 24};
    f.drawing.positions[size_t(E)] = {M + 24, -48};
    f.drawing.positions[size_t(S)] = {C5, -24};
    f.drawing.positions[size_t(W)] = {-24, C5};

    auto pos = [&](int v) { return f.drawing.positions[size_t(v)]; };
    std::vector<int> by_xrank(static_cast<size_t>(kk));
    std::vector<int> by_yrank(static_cast<size_t>(kk));
    for (int pid = 0; pid < kk; ++pid) {
        by_xrank[size_t(xr(pid))] = pid;
        by_yrank[size_t(yr(pid))] = pid;
    }

    // (a) oblique-2 edges between rank-consecutive pairs.
    for (int t = 0; t + 1 < kk; ++t) {
        int u = by_xrank[size_t(t)], v = by_xrank[size_t(t) + 1];
        Pt pu = pos(u), pv = pos(v);
        coord_t X = pu.x + 4;
        add_polyline(f, u, v,
                     {{X, pu.y + (pv.y > pu.y ? 3 : -3)}, {X, pv.y + (pu.y > pv.y ? 3 : -3)}});
    }
    for (int t = 0; t + 1 < kk; ++t) {
        int u = by_yrank[size_t(t)], v = by_yrank[size_t(t) + 1];
        Pt pu = pos(u), pv = pos(v);
        coord_t Y = pu.y + 4;
        add_polyline(f, u, v,
                     {{pu.x + (pv.x > pu.x ? 3 : -3), Y}, {pv.x + (pu.x > pv.x ? 3 : -3), Y}});
    }

    // (b) every point to each pole: short oblique stub, long orthogonal run
    // to the pole's uniform bend line, oblique into the pole.
    for (int pid = 0; pid < kk; ++pid) {
        Pt pp = pos(pid);
        add_polyline(f, pid, N, {{pp.x + 1, pp.y + 4}, {pp.x + 1, M + 16}});
        add_polyline(f, pid, S, {{pp.x - 1, pp.y - 4}, {pp.x - 1, -16}});
        add_polyline(f, pid, E, {{pp.x + 4, pp.y + 1}, {M + 16, pp.y + 1}});
        add_polyline(f, pid, W, {{pp.x - 4, pp.y - 1}, {-16, pp.y - 1}});
    }

    // (c) orthogonal-port edges to nearby ranks: E-port to x-distance 1,
    // W-port to x-distance 2, and the vertical analogues.
    for (int t = 0; t < kk; ++t) {
        int u = by_xrank[size_t(t)];
        Pt pu = pos(u);
        if (t + 2 < kk) {
            int v = by_xrank[size_t(t) + 2];
            Pt pv = pos(v);
            add_polyline(f, u, v,
                         {{pv.x + 2, pu.y}, {pv.x + 2, pv.y + (pu.y > pv.y ? 4 : -4)}});
        }
        if (t - 3 >= 0) {
            int v = by_xrank[size_t(t) - 3];
            Pt pv = pos(v);
            add_polyline(f, u, v,
                         {{pv.x - 2, pu.y}, {pv.x - 2, pv.y + (pu.y > pv.y ? 4 : -4)}});
        }
    }
    for (int t = 0; t < kk; ++t) {
        int u = by_yrank[size_t(t)];
        Pt pu = pos(u);
        if (t + 2 < kk) {
            int v = by_yrank[size_t(t) + 2];
            Pt pv = pos(v);
            add_polyline(f, u, v,
                         {{pu.x, pv.y + 2}, {pv.x + (pu.x > pv.x ? 4 : -4), pv.y + 2}});
        }
        if (t - 3 >= 0) {
            int v = by_yrank[size_t(t) - 3];
            Pt pv = pos(v);
            add_polyline(f, u, v,
                         {{pu.x, pv.y - 2}, {pv.x + (pu.x > pv.x ? 4 : -4), pv.y - 2}});
        }
    }

    // (d) K4 on the poles, routed through the clear outer corridors.
    add_polyline(f, N, W, {{-24, M + 24}});
    add_polyline(f, N, E, {{C5, M + 32}, {M + 24, M + 32}});
    add_polyline(f, N, S, {{M + 8, M + 24}, {M + 8, -24}});
    add_polyline(f, S, W, {{-24, -24}});
    add_polyline(f, S, E, {{C5, -56}, {M + 24, -56}});
    add_polyline(f, W, E, {{-40, C5}, {-40, -48}});
    return f;
}

}  // namespace aprac
