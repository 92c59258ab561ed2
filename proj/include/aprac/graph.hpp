#pragma once

#include <string>
#include <vector>

namespace aprac {

using EdgeId = int;

struct GraphEdge {
    int u = 0;
    int v = 0;
    bool augmented = false;
};

// Undirected simple graph. Edge ids are the positions in edges(); they stay
// stable through every pipeline stage.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n) {}

    int n() const { return n_; }
    int m() const { return int(edges_.size()); }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    const GraphEdge& edge(EdgeId id) const { return edges_[size_t(id)]; }

    EdgeId add_edge(int u, int v, bool augmented = false);
    bool has_edge(int u, int v) const;
    int max_degree() const;

    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    std::vector<GraphEdge> edges_;
};

struct Arc {
    EdgeId id = 0;
    int from = 0;
    int to = 0;
    bool augmented = false;
};

// Directed multigraph produced by regularization; parallel arcs and
// self-loops allowed.
struct DirectedMultigraph {
    int n = 0;
    std::vector<Arc> arcs;

    int indegree(int v) const;
    int outdegree(int v) const;
};

// Partition of a multigraph's arcs into d spanning sets of vertex-disjoint
// directed cycles. Stores arc indices into DirectedMultigraph::arcs.
struct TwoFactorSet {
    std::vector<std::vector<int>> factors;
};

Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);
int max_degree(const Graph& g);

}  // namespace aprac
