#include "aprac/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace aprac {

EdgeId Graph::add_edge(int u, int v, bool augmented) {
    edges_.push_back({u, v, augmented});
    return EdgeId(edges_.size()) - 1;
}

bool Graph::has_edge(int u, int v) const {
    for (const auto& e : edges_)
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
    return false;
}

int Graph::max_degree() const {
    std::vector<int> deg(size_t(n_), 0);
    for (const auto& e : edges_) {
        if (!e.augmented) {
            deg[size_t(e.u)]++;
            deg[size_t(e.v)]++;
        }
    }
    int best = 0;
    for (int d : deg) best = std::max(best, d);
    return best;
}

bool Graph::operator==(const Graph& other) const {
    if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i) {
        const auto& a = edges_[i];
        const auto& b = other.edges_[i];
        if (a.u != b.u || a.v != b.v || a.augmented != b.augmented) return false;
    }
    return true;
}

int DirectedMultigraph::indegree(int v) const {
    int d = 0;
    for (const auto& a : arcs) d += (a.to == v);
    return d;
}

int DirectedMultigraph::outdegree(int v) const {
    int d = 0;
    for (const auto& a : arcs) d += (a.from == v);
    return d;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_n = false;
    Graph g;
    std::unordered_set<long long> seen;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "n") {
            if (have_n) parse_fail(lineno, "duplicate header line");
            long long n;
            if (!(ls >> n) || n < 0) parse_fail(lineno, "malformed vertex count");
            g = Graph(int(n));
            have_n = true;
        } else if (tag == "e") {
            if (!have_n) parse_fail(lineno, "edge before header line");
            long long u, v;
            if (!(ls >> u >> v)) parse_fail(lineno, "malformed edge line");
            if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
                parse_fail(lineno, "vertex id out of range");
            if (u == v) parse_fail(lineno, "self-loop");
            long long a = std::min(u, v), b = std::max(u, v);
            long long key = a * (g.n() + 1LL) + b;
            if (!seen.insert(key).second) parse_fail(lineno, "duplicate edge");
            g.add_edge(int(u), int(v));
        } else {
            parse_fail(lineno, "unknown directive '" + tag + "'");
        }
        std::string rest;
        if (ls >> rest) parse_fail(lineno, "trailing tokens");
    }
    if (!have_n) throw std::runtime_error("line 1: missing header line 'n <count>'");
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.n() << "\n";
    for (const auto& e : g.edges()) out << "e " << e.u << " " << e.v << "\n";
    return out.str();
}

int max_degree(const Graph& g) { return g.max_degree(); }

}  // namespace aprac
