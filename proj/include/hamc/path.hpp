#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "hamc/graph.hpp"

namespace hamc {

// A Hamiltonian path of the complete graph on {0..n-1}: a sequence visiting
// every vertex exactly once.  Undirected paths are kept in canonical
// orientation (first vertex < last vertex) so that equality is set-equality
// of edge sets for paths; directed paths keep their orientation.
class HamPath {
public:
    HamPath() = default;
    HamPath(std::vector<int> order, bool directed);

    int n() const { return static_cast<int>(order_.size()); }
    bool directed() const { return directed_; }
    const std::vector<int>& order() const { return order_; }

    // position[v] = index of v along the path.
    std::vector<int> positions() const;

    bool has_edge(int u, int v) const; // ignores direction
    std::vector<std::pair<int, int>> edges() const; // (u, v) with u < v

    Graph as_graph() const;

    // Copy with vertex v mapped to sigma[v], re-canonicalized when undirected.
    HamPath relabeled(const std::vector<int>& sigma) const;

    HamPath as_undirected() const; // canonicalized copy with directed = false

    bool operator==(const HamPath& o) const { return directed_ == o.directed_ && order_ == o.order_; }
    bool operator<(const HamPath& o) const { return order_ < o.order_; }

private:
    std::vector<int> order_;
    bool directed_ = false;
};

// A family of Hamiltonian paths on a common vertex set with a common
// directedness.  add() rejects duplicates so |family| is always the number
// of distinct paths.
class PathFamily {
public:
    PathFamily() = default;
    PathFamily(int n, bool directed) : n_(n), directed_(directed) {}

    int n() const { return n_; }
    bool directed() const { return directed_; }
    std::size_t size() const { return paths_.size(); }
    bool empty() const { return paths_.empty(); }

    const HamPath& operator[](std::size_t i) const { return paths_[i]; }
    const std::vector<HamPath>& paths() const { return paths_; }

    void add(HamPath p); // throws on n/directedness mismatch or duplicate
    bool contains(const HamPath& p) const;

    // Undirected view: canonicalize every path and drop duplicates that
    // arise from orientation reversal.
    PathFamily as_undirected() const;

private:
    int n_ = 0;
    bool directed_ = false;
    std::vector<HamPath> paths_;
    std::set<std::vector<int>> keys_; // orders, for O(log) duplicate checks
};

} // namespace hamc
