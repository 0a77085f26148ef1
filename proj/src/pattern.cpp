#include "hamc/pattern.hpp"

#include <algorithm>

#include "hamc/errors.hpp"

namespace hamc {

Pattern Pattern::cycle(int length) {
    if (length < 3) throw precondition_error("Pattern::cycle: length must be >= 3");
    return Pattern(Kind::CycleExact, length, 0, 0);
}

Pattern Pattern::odd_cycle() { return Pattern(Kind::OddCycle, 0, 0, 0); }
Pattern Pattern::even_cycle() { return Pattern(Kind::EvenCycle, 0, 0, 0); }

Pattern Pattern::complete_bipartite(int s, int t) {
    if (s < 1 || s > t)
        throw precondition_error("Pattern::complete_bipartite: need 1 <= s <= t");
    return Pattern(Kind::CompleteBipartite, 0, s, t);
}

std::string Pattern::token() const {
    switch (kind_) {
    case Kind::CycleExact:
        if (length_ % 2 == 0) {
            if (length_ == 4) return "c4";
            return "c2k:" + std::to_string(length_ / 2);
        }
        return "c" + std::to_string(length_);
    case Kind::OddCycle: return "odd";
    case Kind::EvenCycle: return "even";
    case Kind::CompleteBipartite:
        if (s_ <= 9 && t_ <= 9) return "k" + std::to_string(s_) + std::to_string(t_);
        return "k" + std::to_string(s_) + "," + std::to_string(t_);
    }
    return "?";
}

Pattern Pattern::parse(const std::string& tok) {
    if (tok == "odd") return odd_cycle();
    if (tok == "even") return even_cycle();
    if (tok == "c3") return cycle(3);
    if (tok == "c4") return cycle(4);
    if (tok.rfind("c2k:", 0) == 0) {
        int k = std::stoi(tok.substr(4));
        if (k < 2) throw precondition_error("pattern token: c2k:<k> needs k >= 2");
        return cycle(2 * k);
    }
    if (tok.size() >= 2 && tok[0] == 'c') {
        int L = std::stoi(tok.substr(1));
        return cycle(L);
    }
    if (tok.size() >= 2 && tok[0] == 'k') {
        std::string body = tok.substr(1);
        auto comma = body.find(',');
        int s, t;
        if (comma != std::string::npos) {
            s = std::stoi(body.substr(0, comma));
            t = std::stoi(body.substr(comma + 1));
        } else if (body.size() == 2) {
            s = body[0] - '0';
            t = body[1] - '0';
        } else {
            throw precondition_error("pattern token: cannot parse " + tok);
        }
        return complete_bipartite(s, t);
    }
    throw precondition_error("pattern token: cannot parse " + tok);
}

namespace {

// Depth-first search for the lexicographically smallest cycle of exact
// length L whose minimum vertex is the start.  Neighbour lists are sorted,
// so sequences are generated in lexicographic order and the first complete
// cycle is the smallest one (its reversal, also a candidate, would have
// been generated earlier if it were smaller).
struct CycleSearch {
    const Graph& g;
    int length;
    std::vector<int> path;
    std::vector<char> used;

    explicit CycleSearch(const Graph& graph, int L)
        : g(graph), length(L), used(static_cast<std::size_t>(graph.n()), 0) {}

    bool run(int start) {
        path.assign(1, start);
        used.assign(used.size(), 0);
        used[static_cast<std::size_t>(start)] = 1;
        return extend(start);
    }

    bool extend(int start) {
        if (static_cast<int>(path.size()) == length)
            return g.has_edge(path.back(), start);
        for (int w : g.neighbors(path.back())) {
            if (w <= start || used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            if (extend(start)) return true;
            path.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    }
};

std::optional<std::vector<int>> find_cycle_exact(const Graph& g, int L) {
    if (L > g.n()) return std::nullopt;
    CycleSearch search(g, L);
    for (int s = 0; s < g.n(); ++s)
        if (search.run(s)) return search.path;
    return std::nullopt;
}

// Length of a shortest odd closed walk (equivalently, a shortest odd
// cycle), by breadth-first search on the parity double cover; -1 if the
// graph is bipartite.
int odd_girth(const Graph& g) {
    const int n = g.n();
    int best = -1;
    std::vector<int> dist(2 * static_cast<std::size_t>(n));
    std::vector<int> queue_buf;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue_buf.clear();
        dist[static_cast<std::size_t>(2 * s)] = 0;
        queue_buf.push_back(2 * s);
        for (std::size_t head = 0; head < queue_buf.size(); ++head) {
            int node = queue_buf[head];
            int v = node / 2, parity = node % 2, d = dist[static_cast<std::size_t>(node)];
            if (best != -1 && d + 1 >= best) break; // cannot improve
            for (int w : g.neighbors(v)) {
                int next = 2 * w + (1 - parity);
                if (dist[static_cast<std::size_t>(next)] == -1) {
                    dist[static_cast<std::size_t>(next)] = d + 1;
                    queue_buf.push_back(next);
                }
            }
        }
        int through_s = dist[static_cast<std::size_t>(2 * s + 1)];
        if (through_s != -1 && (best == -1 || through_s < best)) best = through_s;
    }
    return best;
}

// True iff some even cycle exists: a biconnected block contains an even
// cycle unless it is a single edge or an odd cycle (a non-cycle block has a
// cycle plus an ear, and of the three cycles these form, one is even).
bool has_even_cycle(const Graph& g) {
    const int n = g.n();
    // Iterative Tarjan biconnected components over the edge stack.
    std::vector<int> num(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edge_stack;
    int counter = 0;

    struct Frame {
        int v, parent;
        std::size_t next_idx;
    };

    auto check_block = [&](std::vector<std::pair<int, int>>& block_edges) {
        if (block_edges.size() <= 1) return false; // a bridge
        // Count distinct vertices; a block that is a cycle has exactly as
        // many vertices as edges, and an even edge count means even cycle.
        std::vector<int> verts;
        for (auto [a, b] : block_edges) {
            verts.push_back(a);
            verts.push_back(b);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (verts.size() != block_edges.size()) return true; // not a cycle
        return block_edges.size() % 2 == 0;                  // an even cycle
    };

    for (int root = 0; root < n; ++root) {
        if (num[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<Frame> stack{{root, -1, 0}};
        num[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nbrs = g.neighbors(f.v);
            if (f.next_idx < nbrs.size()) {
                int w = nbrs[f.next_idx++];
                if (w == f.parent) {
                    // Skip one parent edge occurrence (no parallel edges).
                    f.parent = -2;
                    continue;
                }
                if (num[static_cast<std::size_t>(w)] == -1) {
                    edge_stack.emplace_back(f.v, w);
                    num[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
                    stack.push_back({w, f.v, 0});
                } else if (num[static_cast<std::size_t>(w)] < num[static_cast<std::size_t>(f.v)]) {
                    edge_stack.emplace_back(f.v, w);
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], num[static_cast<std::size_t>(w)]);
                }
            } else {
                int v = f.v;
                stack.pop_back();
                if (stack.empty()) continue;
                int p = stack.back().v;
                low[static_cast<std::size_t>(p)] =
                    std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
                if (low[static_cast<std::size_t>(v)] >= num[static_cast<std::size_t>(p)]) {
                    // One biconnected block: everything pushed after the
                    // tree edge (p, v), including that edge itself.
                    std::vector<std::pair<int, int>> block;
                    while (!edge_stack.empty()) {
                        auto e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e.first == p && e.second == v) break;
                    }
                    if (check_block(block)) return true;
                }
            }
        }
    }
    return false;
}

std::optional<std::vector<int>> find_complete_bipartite(const Graph& g, int s, int t) {
    const int n = g.n();
    if (s + t > n) return std::nullopt;
    std::vector<int> left(static_cast<std::size_t>(s));
    std::vector<int> common;

    // Enumerate left sides in lexicographic order; prune on degree and on
    // the shrinking common neighbourhood.
    struct Rec {
        const Graph& g;
        int s, t, n;
        std::vector<int>& left;
        std::optional<std::vector<int>> result;

        void expand(int depth, int min_vertex, const std::vector<int>& common_prefix) {
            if (result) return;
            if (depth == s) {
                std::vector<int> right;
                for (int w : common_prefix) {
                    if (std::find(left.begin(), left.end(), w) == left.end()) {
                        right.push_back(w);
                        if (static_cast<int>(right.size()) == t) break;
                    }
                }
                if (static_cast<int>(right.size()) == t) {
                    std::vector<int> witness = left;
                    witness.insert(witness.end(), right.begin(), right.end());
                    result = witness;
                }
                return;
            }
            for (int v = min_vertex; v < n; ++v) {
                if (g.degree(v) < t) continue;
                std::vector<int> next_common;
                if (depth == 0) {
                    next_common = g.neighbors(v);
                } else {
                    std::set_intersection(common_prefix.begin(), common_prefix.end(),
                                          g.neighbors(v).begin(), g.neighbors(v).end(),
                                          std::back_inserter(next_common));
                }
                // Even if every remaining pick lands inside the common set,
                // we still need t right vertices outside the left side.
                if (static_cast<int>(next_common.size()) < t) continue;
                left[static_cast<std::size_t>(depth)] = v;
                expand(depth + 1, v + 1, next_common);
                if (result) return;
            }
        }
    };

    Rec rec{g, s, t, n, left, std::nullopt};
    rec.expand(0, 0, common);
    return rec.result;
}

} // namespace

std::optional<SubgraphWitness> find_pattern(const Graph& g, const Pattern& pattern) {
    auto cycle_pre = [&]() {
        for (int v = 0; v < g.n(); ++v)
            if (g.has_loop(v))
                throw precondition_error("find_pattern: cycle patterns require a loop-free graph");
    };

    switch (pattern.kind()) {
    case Pattern::Kind::CycleExact: {
        cycle_pre();
        auto cyc = find_cycle_exact(g, pattern.length());
        if (!cyc) return std::nullopt;
        return SubgraphWitness{pattern, *cyc};
    }
    case Pattern::Kind::OddCycle: {
        cycle_pre();
        int L = odd_girth(g);
        if (L == -1) return std::nullopt;
        auto cyc = find_cycle_exact(g, L);
        return SubgraphWitness{pattern, *cyc};
    }
    case Pattern::Kind::EvenCycle: {
        cycle_pre();
        if (!has_even_cycle(g)) return std::nullopt;
        for (int L = 4; L <= g.n(); L += 2) {
            auto cyc = find_cycle_exact(g, L);
            if (cyc) return SubgraphWitness{pattern, *cyc};
        }
        return std::nullopt; // unreachable: the decision said a cycle exists
    }
    case Pattern::Kind::CompleteBipartite: {
        auto w = find_complete_bipartite(g, pattern.s(), pattern.t());
        if (!w) return std::nullopt;
        return SubgraphWitness{pattern, *w};
    }
    }
    return std::nullopt;
}

} // namespace hamc
