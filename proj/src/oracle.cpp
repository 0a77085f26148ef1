#include "hamc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hamc/errors.hpp"

namespace hamc {
namespace {

// Fixed-width bitset over object indices, 64 bits per word.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_(static_cast<std::size_t>((n + 63) / 64)) {}

    void set(int i) { w_[static_cast<std::size_t>(i >> 6)] |= 1ull << (i & 63); }
    bool test(int i) const { return (w_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (std::uint64_t x : w_) c += std::popcount(x);
        return c;
    }
    bool empty() const {
        for (std::uint64_t x : w_) if (x != 0) return false;
        return true;
    }
    Bits and_with(const Bits& o) const {
        Bits r(n_);
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
        return r;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }
    template <typename Fn>
    void for_each(Fn fn) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t x = w_[k];
            while (x) {
                fn(static_cast<int>(k * 64) + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Branch-and-bound maximum clique over a bitset adjacency matrix, with a
// greedy-coloring upper bound (Tomita-style).  Deterministic: candidate
// lists keep ascending index order, ties never depend on timing.
class CliqueSolver {
public:
    CliqueSolver(const std::vector<Bits>& adj, std::uint64_t budget, std::uint64_t& nodes)
        : adj_(adj), budget_(budget), nodes_(nodes) {}

    // Largest clique in the whole graph.
    std::vector<int> maximum() {
        best_.clear();
        target_ = -1;
        std::vector<int> order(adj_.size());
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> r;
        expand(r, degeneracy_order(order));
        return best_;
    }

    // Whether `pool` contains a clique of size `need`.
    bool decide(const std::vector<int>& pool, int need) {
        if (need <= 0) return true;
        best_.clear();
        target_ = need;
        std::vector<int> r;
        expand(r, pool);
        return static_cast<int>(best_.size()) >= need;
    }

private:
    // Smallest-last ordering; a good initial order for the coloring bound.
    std::vector<int> degeneracy_order(const std::vector<int>& verts) const {
        const int n = static_cast<int>(adj_.size());
        Bits left(n);
        std::vector<int> deg(adj_.size(), 0);
        for (int v : verts) left.set(v);
        for (int v : verts) deg[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)].and_with(left).count();
        std::vector<int> out;
        out.reserve(verts.size());
        Bits removed(n);
        for (std::size_t step = 0; step < verts.size(); ++step) {
            int pick = -1;
            for (int v : verts)
                if (!removed.test(v) && (pick < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]))
                    pick = v;
            removed.set(pick);
            out.push_back(pick);
            adj_[static_cast<std::size_t>(pick)].for_each([&](int u) {
                if (!removed.test(u)) --deg[static_cast<std::size_t>(u)];
            });
        }
        // Smallest-last: highest-degeneracy vertices first in the reversal.
        std::reverse(out.begin(), out.end());
        return out;
    }

    void expand(std::vector<int>& r, const std::vector<int>& p) {
        if (++nodes_ > budget_)
            throw resource_limit_error("extremal search exceeded its node budget of " +
                                       std::to_string(budget_) + " nodes");
        if (done()) return;
        if (p.empty()) {
            if (r.size() > best_.size()) best_ = r;
            return;
        }
        // Greedy coloring of p in order; colors[i] bounds any clique inside
        // p[0..i] and the vertices come back grouped by ascending color.
        const int n = static_cast<int>(adj_.size());
        std::vector<int> order, colors;
        order.reserve(p.size());
        colors.reserve(p.size());
        {
            std::vector<Bits> classes;
            std::vector<std::vector<int>> members;
            for (int v : p) {
                std::size_t c = 0;
                while (c < classes.size() && adj_[static_cast<std::size_t>(v)].intersects(classes[c])) ++c;
                if (c == classes.size()) {
                    classes.emplace_back(n);
                    members.emplace_back();
                }
                classes[c].set(v);
                members[c].push_back(v);
            }
            for (std::size_t c = 0; c < members.size(); ++c)
                for (int v : members[c]) {
                    order.push_back(v);
                    colors.push_back(static_cast<int>(c) + 1);
                }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(r.size()) + colors[static_cast<std::size_t>(i)] <= bound()) return;
            const int v = order[static_cast<std::size_t>(i)];
            r.push_back(v);
            std::vector<int> next;
            next.reserve(static_cast<std::size_t>(i));
            for (int j = 0; j < i; ++j)
                if (adj_[static_cast<std::size_t>(v)].test(order[static_cast<std::size_t>(j)]))
                    next.push_back(order[static_cast<std::size_t>(j)]);
            expand(r, next);
            r.pop_back();
            if (done()) return;
        }
    }

    bool done() const { return target_ > 0 && static_cast<int>(best_.size()) >= target_; }
    int bound() const {
        // In decision mode anything below the target is prunable.
        if (target_ > 0) return target_ - 1;
        return static_cast<int>(best_.size());
    }

    const std::vector<Bits>& adj_;
    std::uint64_t budget_;
    std::uint64_t& nodes_;
    std::vector<int> best_;
    int target_ = -1;
};

std::vector<Bits> relation_adjacency(int count, const std::function<bool(int, int)>& related,
                                     ExtremalMode mode) {
    std::vector<Bits> adj(static_cast<std::size_t>(count), Bits(count));
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) {
            bool edge = related(i, j);
            if (mode == ExtremalMode::Independent) edge = !edge;
            if (edge) {
                adj[static_cast<std::size_t>(i)].set(j);
                adj[static_cast<std::size_t>(j)].set(i);
            }
        }
    return adj;
}

} // namespace

PathFamily enumerate_ham_paths(int n) {
    if (n < 3 || n > 8)
        throw precondition_error("Hamiltonian path enumeration supports 3 <= n <= 8");
    PathFamily out(n, false);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    do {
        if (order.front() < order.back()) out.add(HamPath(order, false));
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

std::vector<Matching> enumerate_matchings(int n) {
    if (n < 4 || n > 10 || n % 2 != 0)
        throw precondition_error("matching enumeration supports even 4 <= n <= 10");
    std::vector<Matching> out;
    Matching cur;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto rec = [&](auto&& self) -> void {
        int u = 0;
        while (u < n && used[static_cast<std::size_t>(u)]) ++u;
        if (u == n) {
            out.push_back(cur);
            return;
        }
        used[static_cast<std::size_t>(u)] = true;
        for (int v = u + 1; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            cur.emplace_back(u, v);
            self(self);
            cur.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
        used[static_cast<std::size_t>(u)] = false;
    };
    rec(rec);
    return out;
}

Graph matching_graph(const Matching& m, int n) {
    Graph g(n);
    for (auto [u, v] : m) g.add_edge(u, v);
    return g;
}

OracleResult exact_extremal(int count, const std::function<bool(int, int)>& related,
                            ExtremalMode mode, std::uint64_t node_budget) {
    if (count < 0) throw precondition_error("object count must be nonnegative");
    if (count > 5000)
        throw resource_limit_error("extremal search supports at most 5000 objects, got " +
                                   std::to_string(count));
    OracleResult res;
    res.objects_enumerated = static_cast<std::uint64_t>(count);
    if (count == 0) return res;

    const std::vector<Bits> adj = relation_adjacency(count, related, mode);
    CliqueSolver solver(adj, node_budget, res.search_nodes);
    const std::vector<int> opt = solver.maximum();
    res.value = static_cast<long long>(opt.size());

    // Rebuild the witness as the lexicographically smallest optimum: grow an
    // ascending prefix, keeping a candidate index only when a clique of the
    // required size still exists above it inside the common neighborhood.
    std::vector<int> witness;
    std::vector<int> pool(static_cast<std::size_t>(count));
    std::iota(pool.begin(), pool.end(), 0);
    while (static_cast<int>(witness.size()) < res.value) {
        bool extended = false;
        for (std::size_t pi = 0; pi < pool.size(); ++pi) {
            const int c = pool[pi];
            std::vector<int> next;
            for (std::size_t qi = pi + 1; qi < pool.size(); ++qi)
                if (adj[static_cast<std::size_t>(c)].test(pool[qi])) next.push_back(pool[qi]);
            const int need = res.value - static_cast<int>(witness.size()) - 1;
            if (solver.decide(next, need)) {
                witness.push_back(c);
                pool = std::move(next);
                extended = true;
                break;
            }
        }
        if (!extended)
            throw std::logic_error("witness reconstruction lost the optimum");
    }
    res.witness_indices = std::move(witness);
    return res;
}

OracleResult exhaustive_extremal(int count, const std::function<bool(int, int)>& related,
                                 ExtremalMode mode) {
    if (count < 0) throw precondition_error("object count must be nonnegative");
    if (count > 20)
        throw resource_limit_error("exhaustive subset oracle supports at most 20 objects");
    OracleResult res;
    res.objects_enumerated = static_cast<std::uint64_t>(count);
    if (count == 0) return res;

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(count), 0);
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) {
            bool edge = related(i, j);
            if (mode == ExtremalMode::Independent) edge = !edge;
            if (edge) {
                adj[static_cast<std::size_t>(i)] |= 1u << j;
                adj[static_cast<std::size_t>(j)] |= 1u << i;
            }
        }

    const std::uint32_t total = 1u << count;
    std::vector<char> ok(total, 0);
    ok[0] = 1;
    std::uint32_t best_mask = 0;
    int best_size = 0;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        const int low = std::countr_zero(mask);
        const std::uint32_t rest = mask & (mask - 1);
        ok[mask] = ok[rest] && (adj[static_cast<std::size_t>(low)] & rest) == rest;
        if (ok[mask]) {
            const int size = std::popcount(mask);
            if (size > best_size) {
                best_size = size;
                best_mask = mask;
            }
        }
    }
    res.search_nodes = total;
    res.value = best_size;
    for (int i = 0; i < count; ++i)
        if ((best_mask >> i) & 1) res.witness_indices.push_back(i);
    return res;
}

OracleResult exact_c4_ways_extremal(int n, const WaySet& ways, SharedEdgeRule rule) {
    if (n < 3 || n > 6)
        throw precondition_error("way-restricted extremal search supports 3 <= n <= 6");
    const PathFamily paths = enumerate_ham_paths(n);
    auto related = [&](int i, int j) {
        return creates_c4_with_way(paths[static_cast<std::size_t>(i)],
                                   paths[static_cast<std::size_t>(j)], ways, rule);
    };
    return exact_extremal(static_cast<int>(paths.size()), related, ExtremalMode::Clique);
}

OracleResult exact_rp(int n) {
    if (n < 2 || n > 5)
        throw precondition_error("reversing-permutation search supports 2 <= n <= 5");
    std::vector<PartialWord> perms;
    std::vector<int> entries(static_cast<std::size_t>(n));
    std::iota(entries.begin(), entries.end(), 0);
    do {
        perms.emplace_back(entries, n);
    } while (std::next_permutation(entries.begin(), entries.end()));
    auto related = [&](int i, int j) {
        return is_reversing(perms[static_cast<std::size_t>(i)], perms[static_cast<std::size_t>(j)]);
    };
    return exact_extremal(static_cast<int>(perms.size()), related, ExtremalMode::Clique);
}

namespace {

struct HamCounter {
    std::vector<std::uint32_t> adj;
    std::uint32_t full = 0;
    bool cycles = false;
    int start = 0;
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;

    bool feasible(int cur, std::uint32_t rem) const {
        const std::uint32_t anchor = cycles ? (1u << start) : 0;
        const std::uint32_t scope = rem | (1u << cur) | anchor;
        // Degree prune: a not-yet-visited vertex must keep 2 usable
        // neighbors (1 when it may end a path), and the cycle anchor must
        // stay reachable from the unvisited region.
        int endpoints = 0;
        std::uint32_t r = rem;
        while (r) {
            const int v = std::countr_zero(r);
            r &= r - 1;
            const int d = std::popcount(adj[static_cast<std::size_t>(v)] & scope);
            if (cycles) {
                if (d < 2) return false;
            } else {
                if (d == 0) return false;
                if (d == 1 && ++endpoints > 1) return false;
            }
        }
        if (cycles && rem != 0 && (adj[static_cast<std::size_t>(start)] & rem) == 0) return false;
        // Connectivity: everything left must be reachable from cur inside
        // the unvisited region (plus the anchor for cycles).
        std::uint32_t seen = 1u << cur;
        std::uint32_t stack = seen;
        while (stack) {
            const int v = std::countr_zero(stack);
            stack &= stack - 1;
            const std::uint32_t nb = adj[static_cast<std::size_t>(v)] & scope & ~seen;
            seen |= nb;
            stack |= nb;
        }
        if ((seen & rem) != rem) return false;
        if (cycles && rem != 0 && !(seen & anchor)) return false;
        return true;
    }

    long long dfs(int cur, std::uint32_t visited) {
        if (++nodes > budget)
            throw resource_limit_error("Hamiltonian count exceeded its node budget of " +
                                       std::to_string(budget) + " nodes");
        const std::uint32_t rem = full & ~visited;
        if (rem == 0) return cycles ? ((adj[static_cast<std::size_t>(cur)] >> start) & 1) : 1;
        if (!feasible(cur, rem)) return 0;
        long long total = 0;
        std::uint32_t cand = adj[static_cast<std::size_t>(cur)] & rem;
        while (cand) {
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            total += dfs(v, visited | (1u << v));
        }
        return total;
    }
};

} // namespace

long long count_ham(const Graph& g, HamKind kind, std::uint64_t node_budget) {
    const int n = g.n();
    if (n > 30)
        throw resource_limit_error("Hamiltonian counting supports at most 30 vertices, got " +
                                   std::to_string(n));
    for (int v = 0; v < n; ++v)
        if (g.has_loop(v)) throw precondition_error("Hamiltonian counting requires a loop-free graph");
    if (kind == HamKind::Cycles && n < 3)
        throw precondition_error("Hamiltonian cycles need at least 3 vertices");
    if (kind == HamKind::Paths && n < 2)
        throw precondition_error("Hamiltonian paths need at least 2 vertices");

    HamCounter hc;
    hc.adj.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) hc.adj[static_cast<std::size_t>(v)] |= 1u << u;
    hc.full = (1u << n) - 1;
    hc.cycles = kind == HamKind::Cycles;
    hc.budget = node_budget;

    long long directed = 0;
    if (hc.cycles) {
        // Every Hamiltonian cycle passes through vertex 0; fixing the start
        // counts each cycle once per direction.
        hc.start = 0;
        directed = hc.dfs(0, 1u);
    } else {
        for (int s = 0; s < n; ++s) directed += hc.dfs(s, 1u << s);
    }
    return directed / 2;
}

double kriv_estimate(int n, int d) {
    if (d < 1 || d >= n) throw precondition_error("estimate requires 1 <= d < n");
    return std::lgamma(static_cast<double>(n) + 1.0) +
           n * (std::log(static_cast<double>(d)) - std::log(static_cast<double>(n)));
}

} // namespace hamc
