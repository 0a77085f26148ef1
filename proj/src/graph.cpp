#include "hamc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hamc/errors.hpp"

namespace hamc {

long long Graph::m() const {
    long long twice = 0, loops = 0;
    for (int v = 0; v < n_; ++v) {
        twice += degree(v);
        if (has_loop(v)) ++loops;
    }
    // Each non-loop edge contributes 2 to the degree total, each loop 1.
    return (twice - loops) / 2 + loops;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw precondition_error("add_edge: vertex out of range");
    if (u == v && !allows_loops_)
        throw precondition_error("add_edge: loop on a loop-free graph");
    auto insert_sorted = [](std::vector<int>& lst, int x) {
        auto it = std::lower_bound(lst.begin(), lst.end(), x);
        if (it == lst.end() || *it != x) lst.insert(it, x);
    };
    insert_sorted(adj_[static_cast<std::size_t>(u)], v);
    if (u != v) insert_sorted(adj_[static_cast<std::size_t>(v)], u);
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& lst = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(lst.begin(), lst.end(), v);
}

std::vector<int> Graph::component_ids() const {
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    int next_id = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        comp[static_cast<std::size_t>(s)] = next_id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : neighbors(v)) {
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = next_id;
                    stack.push_back(w);
                }
            }
        }
        ++next_id;
    }
    return comp;
}

int Graph::component_count() const {
    auto comp = component_ids();
    int best = 0;
    for (int c : comp) best = std::max(best, c + 1);
    return best;
}

bool Graph::connected() const { return component_count() <= 1; }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u <= v) out.emplace_back(u, v);
    return out;
}

Graph union_graph(const Graph& a, const Graph& b) {
    if (a.n() != b.n())
        throw precondition_error("union_graph: vertex counts differ");
    Graph u(a.n(), a.allows_loops() || b.allows_loops());
    for (auto [x, y] : a.edges()) u.add_edge(x, y);
    for (auto [x, y] : b.edges()) u.add_edge(x, y);
    return u;
}

namespace {

// Shortest path length between s and t avoiding the edge (s, t), searching
// only paths of length <= max_len; -1 when there is none.
int bfs_avoiding_edge(const Graph& g, int s, int t, int max_len, std::vector<int>& dist,
                      std::vector<int>& queue_buf) {
    std::fill(dist.begin(), dist.end(), -1);
    queue_buf.clear();
    dist[static_cast<std::size_t>(s)] = 0;
    queue_buf.push_back(s);
    for (std::size_t head = 0; head < queue_buf.size(); ++head) {
        int v = queue_buf[head];
        int dv = dist[static_cast<std::size_t>(v)];
        if (dv >= max_len) break; // queue is in distance order
        for (int w : g.neighbors(v)) {
            if (v == s && w == t) continue; // skip the removed edge once
            if (dist[static_cast<std::size_t>(w)] == -1) {
                dist[static_cast<std::size_t>(w)] = dv + 1;
                if (w == t) return dv + 1;
                queue_buf.push_back(w);
            }
        }
    }
    return -1;
}

} // namespace

std::optional<int> girth(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    for (int v = 0; v < g.n(); ++v)
        if (g.has_loop(v)) best = 1;
    if (best == 1) return 1;

    // Parallel-edge-free representation: a shortest cycle through edge (u,v)
    // has length 1 + shortest u-v path not using that edge.  Every cycle is
    // counted at each of its edges, so the minimum over edges is exact.
    // Paths that cannot beat the best cycle found so far are not explored.
    std::vector<int> dist(static_cast<std::size_t>(g.n()));
    std::vector<int> queue_buf;
    queue_buf.reserve(static_cast<std::size_t>(g.n()));
    for (auto [u, v] : g.edges()) {
        if (u == v) continue;
        if (best <= 3) break; // a triangle cannot be beaten in a simple graph
        int cap = best == std::numeric_limits<int>::max() ? g.n() : best - 2;
        int d = bfs_avoiding_edge(g, u, v, cap, dist, queue_buf);
        if (d >= 0) best = std::min(best, d + 1);
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

double degree_product_log(const Graph& g) {
    if (g.n() == 0) return -std::numeric_limits<double>::infinity();
    double total = std::log(static_cast<double>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        if (d == 0) return -std::numeric_limits<double>::infinity();
        total += std::log(static_cast<double>(d));
    }
    return total;
}

} // namespace hamc
