#pragma once

#include <optional>
#include <vector>

namespace hamc {

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// Loops (v adjacent to itself) are stored once and only accepted when the
// graph was created with allows_loops.  degree() counts a loop once, i.e.
// degree(v) == |N(v)| with v in its own neighbourhood iff it has a loop.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, bool allows_loops = false)
        : n_(n), allows_loops_(allows_loops), adj_(static_cast<std::size_t>(n)) {}

    int n() const { return n_; }
    bool allows_loops() const { return allows_loops_; }

    // Number of edges; a loop counts as one edge.
    long long m() const;

    void add_edge(int u, int v); // idempotent; validates range and loop policy
    bool has_edge(int u, int v) const;
    bool has_loop(int v) const { return has_edge(v, v); }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool connected() const;          // vacuously true for n <= 1
    int component_count() const;
    std::vector<int> component_ids() const;

    // All edges as (u, v) with u <= v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    bool allows_loops_ = false;
    std::vector<std::vector<int>> adj_;
};

// Union of two graphs on the same vertex count: edge set is the set union.
Graph union_graph(const Graph& a, const Graph& b);

// Exact girth (length of a shortest cycle), or nullopt for acyclic graphs.
// A loop counts as a cycle of length 1.  Computed by removing each edge in
// turn and measuring the shortest remaining path between its endpoints.
std::optional<int> girth(const Graph& g);

// log(n) + sum over vertices of log(degree); -infinity if any degree is 0
// (or the graph is empty).  Natural logarithm.
double degree_product_log(const Graph& g);

} // namespace hamc
