#include "hamc/relations.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <functional>
#include <thread>
#include <utility>

#include "hamc/errors.hpp"
#include "hamc/graph.hpp"
#include "hamc/rng.hpp"

namespace hamc {

std::string WaySet::token() const {
    std::string out;
    auto add = [&](const char* t) {
        if (!out.empty()) out += ',';
        out += t;
    };
    if (h1) add("h1");
    if (h2) add("h2");
    if (h3) add("h3");
    return out;
}

WaySet WaySet::parse(const std::string& tok) {
    WaySet w;
    std::size_t pos = 0;
    while (pos < tok.size()) {
        std::size_t comma = tok.find(',', pos);
        std::string part = tok.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (part == "h1")
            w.h1 = true;
        else if (part == "h2")
            w.h2 = true;
        else if (part == "h3")
            w.h3 = true;
        else
            throw precondition_error("unknown way token: " + part);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (!w.any()) throw precondition_error("empty way restriction");
    return w;
}

namespace {

// Ways a 4-cycle with path-containment masks ea, eb (bit k = cyclic edge k
// lies in that path) can split its edges into one share per path.  A split
// is feasible when each share is contained in its path's mask; an edge in
// both masks may serve either share.  Returns a bitmask with bit w set when
// some share pattern whose longest chain is w works: bit 3 for a 3-chain
// plus the opposite edge, bit 2 for two opposite 2-chains, bit 1 for two
// interleaved pairs of opposite edges.
unsigned cycle_way_set(unsigned ea, unsigned eb) {
    auto fits = [&](unsigned sa, unsigned sb) {
        return ((sa & ea) == sa && (sb & eb) == sb) || ((sa & eb) == sa && (sb & ea) == sb);
    };
    unsigned ways = 0;
    for (unsigned i = 0; i < 4; ++i) {
        const unsigned arc = ((0b0111u << i) | (0b0111u << i >> 4)) & 0b1111u;
        if (fits(arc, arc ^ 0b1111u)) {
            ways |= 1u << 3;
            break;
        }
    }
    if (fits(0b0011u, 0b1100u) || fits(0b0110u, 0b1001u)) ways |= 1u << 2;
    if (fits(0b0101u, 0b1010u)) ways |= 1u << 1;
    return ways;
}

// Visits every 4-cycle of union(a, b) once, calling fn with each way the
// cycle's edges can be split between the paths; stops early when fn
// returns true.
bool for_each_c4_way(const HamPath& a, const HamPath& b, SharedEdgeRule rule,
                     const std::function<bool(int)>& fn) {
    if (a.n() != b.n())
        throw precondition_error("paths live on different vertex counts");
    const Graph g = union_graph(a.as_graph(), b.as_graph());
    const std::vector<int> pa = a.positions();
    const std::vector<int> pb = b.positions();
    auto in_path = [](const std::vector<int>& pos, int u, int v) {
        int d = pos[u] - pos[v];
        return d == 1 || d == -1;
    };
    const int n = g.n();
    std::vector<int> common;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const auto& nu = g.neighbors(u);
            const auto& nv = g.neighbors(v);
            common.clear();
            std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                                  std::back_inserter(common));
            // Canonical form: u is the least vertex of the cycle, so the
            // opposite diagonal {x, y} must lie strictly above u.
            while (!common.empty() && common.front() <= u) common.erase(common.begin());
            for (std::size_t xi = 0; xi < common.size(); ++xi) {
                for (std::size_t yi = xi + 1; yi < common.size(); ++yi) {
                    const int c[4] = {u, common[xi], v, common[yi]};
                    unsigned ea = 0, eb = 0;
                    for (unsigned k = 0; k < 4; ++k) {
                        int p = c[k], q = c[(k + 1) % 4];
                        bool ia = in_path(pa, p, q);
                        bool ib = in_path(pb, p, q);
                        if (rule == SharedEdgeRule::CountsForNeither && ia && ib) ia = ib = false;
                        if (ia) ea |= 1u << k;
                        if (ib) eb |= 1u << k;
                    }
                    // Every cycle edge lies in some path but no path holds
                    // all four, so under the default rule a split exists.
                    const unsigned ways = cycle_way_set(ea, eb);
                    assert(ways != 0 || rule == SharedEdgeRule::CountsForNeither);
                    for (int way = 1; way <= 3; ++way)
                        if ((ways >> way & 1u) && fn(way)) return true;
                }
            }
        }
    }
    return false;
}

bool c4_way_hit(const HamPath& a, const HamPath& b, const WaySet& ways,
                SharedEdgeRule rule = SharedEdgeRule::CountsForBoth) {
    return for_each_c4_way(a, b, rule, [&](int way) { return ways.contains(way); });
}

struct PairScan {
    bool ok = true;
    std::uint64_t pairs_checked = 0;
    long long vi = -1, vj = -1;
};

std::uint64_t pair_count(std::size_t f) {
    return static_cast<std::uint64_t>(f) * (f - 1) / 2;
}

std::pair<std::size_t, std::size_t> unrank_pair(std::uint64_t k, std::size_t f) {
    std::size_t i = 0;
    std::uint64_t row = f - 1;
    while (k >= row) {
        k -= row;
        --row;
        ++i;
    }
    return {i, i + 1 + static_cast<std::size_t>(k)};
}

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Scans all unordered index pairs for violations.  The outcome (first
// violating pair in rank order, count of pairs up to it) is identical for
// every worker count: a rank is only skipped when a violation at a smaller
// or equal rank is already known, so the minimum violating rank is exact.
PairScan scan_pairs(std::size_t f, int jobs,
                    const std::function<bool(std::size_t, std::size_t)>& violates) {
    PairScan out;
    const std::uint64_t total = f < 2 ? 0 : pair_count(f);
    if (total == 0) {
        out.pairs_checked = 0;
        return out;
    }
    const std::uint64_t kNone = ~std::uint64_t{0};
    std::atomic<std::uint64_t> best{kNone};
    int workers = resolve_jobs(jobs);
    if (static_cast<std::uint64_t>(workers) > total)
        workers = static_cast<int>(total);

    auto run = [&](std::uint64_t lo, std::uint64_t hi) {
        auto [i, j] = unrank_pair(lo, f);
        for (std::uint64_t k = lo; k < hi; ++k) {
            if (k >= best.load(std::memory_order_relaxed)) break;
            if (violates(i, j)) {
                std::uint64_t seen = best.load(std::memory_order_relaxed);
                while (k < seen &&
                       !best.compare_exchange_weak(seen, k, std::memory_order_relaxed)) {
                }
                break;
            }
            if (++j == f) {
                ++i;
                j = i + 1;
            }
        }
    };

    if (workers <= 1) {
        run(0, total);
    } else {
        const std::uint64_t kChunk = 512;
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    std::uint64_t lo = next.fetch_add(kChunk, std::memory_order_relaxed);
                    if (lo >= total || lo >= best.load(std::memory_order_relaxed)) break;
                    run(lo, std::min(lo + kChunk, total));
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    std::uint64_t found = best.load();
    if (found == kNone) {
        out.ok = true;
        out.pairs_checked = total;
    } else {
        out.ok = false;
        out.pairs_checked = found + 1;
        auto [i, j] = unrank_pair(found, f);
        out.vi = static_cast<long long>(i);
        out.vj = static_cast<long long>(j);
    }
    return out;
}

VerifyReport report_from(PairScan scan, std::string pattern, std::string ways) {
    VerifyReport r;
    r.pattern = std::move(pattern);
    r.ways = std::move(ways);
    r.pairs_checked = scan.pairs_checked;
    r.ok = scan.ok;
    r.violation_i = scan.vi;
    r.violation_j = scan.vj;
    return r;
}

} // namespace

std::set<int> classify_c4_ways(const HamPath& a, const HamPath& b, SharedEdgeRule rule) {
    std::set<int> ways;
    for_each_c4_way(a, b, rule, [&](int way) {
        ways.insert(way);
        return ways.size() == 3;
    });
    return ways;
}

std::optional<SubgraphWitness> creates(const HamPath& a, const HamPath& b,
                                       const Pattern& pattern) {
    if (a.n() != b.n())
        throw precondition_error("paths live on different vertex counts");
    return find_pattern(union_graph(a.as_graph(), b.as_graph()), pattern);
}

bool creates_c4_with_way(const HamPath& a, const HamPath& b, const WaySet& ways,
                         SharedEdgeRule rule) {
    return c4_way_hit(a, b, ways, rule);
}

VerifyReport verify_family(const PathFamily& f, const Pattern& pattern, VerifyMode mode,
                           const std::optional<WaySet>& ways, int jobs, SharedEdgeRule rule) {
    if (ways && !(pattern.kind() == Pattern::Kind::CycleExact && pattern.length() == 4))
        throw precondition_error("way restrictions apply only to the 4-cycle pattern");
    const auto& members = f.paths();
    auto satisfied = [&](std::size_t i, std::size_t j) {
        if (ways) return c4_way_hit(members[i], members[j], *ways, rule);
        return creates(members[i], members[j], pattern).has_value();
    };
    auto violates = [&](std::size_t i, std::size_t j) {
        bool hit = satisfied(i, j);
        return mode == VerifyMode::AllCreate ? !hit : hit;
    };
    return report_from(scan_pairs(members.size(), jobs, violates), pattern.token(),
                       ways ? ways->token() : std::string{});
}

VerifyReport verify_family_good_k24(const PathFamily& f, VerifyMode mode, int jobs) {
    const auto& members = f.paths();
    auto violates = [&](std::size_t i, std::size_t j) {
        bool hit = is_good_k24(members[i], members[j]).has_value();
        return mode == VerifyMode::AllCreate ? !hit : hit;
    };
    return report_from(scan_pairs(members.size(), jobs, violates), "good-k24", {});
}

VerifyReport verify_words_reversing(const std::vector<PartialWord>& words, VerifyMode mode,
                                    int jobs) {
    auto violates = [&](std::size_t i, std::size_t j) {
        bool hit = is_reversing(words[i], words[j]);
        return mode == VerifyMode::AllCreate ? !hit : hit;
    };
    return report_from(scan_pairs(words.size(), jobs, violates), "reverse", {});
}

bool is_reversing(const PartialWord& u, const PartialWord& v) {
    if (u.length() != v.length() || u.alphabet_size() != v.alphabet_size())
        throw precondition_error(
            "reversing check requires words of equal length over the same alphabet");
    const int len = u.length();
    std::vector<int> pos_v(static_cast<std::size_t>(v.alphabet_size()), -1);
    for (int i = 0; i < len; ++i)
        if (!v.blank(i)) pos_v[static_cast<std::size_t>(v.at(i))] = i;
    for (int i = 0; i < len; ++i) {
        if (u.blank(i)) continue;
        const int a = u.at(i);
        const int j = pos_v[static_cast<std::size_t>(a)];
        // Need coordinates i != j with u(i) = v(j) = a and u(j) = v(i) = b != a.
        if (j < 0 || j == i) continue;
        if (u.blank(j) || v.blank(i)) continue;
        if (u.at(j) == v.at(i) && u.at(j) != a) return true;
    }
    return false;
}

PathFamily relabel_filter(const PathFamily& x, const PathFamily& i, int trials,
                          std::uint64_t seed) {
    if (x.n() != i.n())
        throw precondition_error("families live on different vertex counts");
    if (x.directed() != i.directed())
        throw precondition_error("families disagree on orientation");
    if (trials < 1) throw precondition_error("trials must be positive");
    Rng rng(seed);
    std::vector<HamPath> best;
    bool have_best = false;
    for (int t = 0; t < trials; ++t) {
        const std::vector<int> sigma = rng.permutation(x.n());
        std::vector<HamPath> cur;
        for (const HamPath& p : i.paths()) {
            HamPath q = p.relabeled(sigma);
            if (x.contains(q)) cur.push_back(std::move(q));
        }
        if (!have_best || cur.size() > best.size()) {
            best = std::move(cur);
            have_best = true;
        }
    }
    PathFamily out(x.n(), x.directed());
    for (const HamPath& p : best) out.add(p);
    return out;
}

PartialWord path_to_reverse_vector(const HamPath& h) {
    const int n = h.n();
    if (n < 2) throw precondition_error("reverse vector needs at least two vertices");
    const std::vector<int>& order = h.order();
    const std::size_t len = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<int> entries(len, PartialWord::kBlank);
    auto index = [n](int u, int v) {
        // Row-major upper triangle over unordered pairs, u < v.
        return static_cast<std::size_t>(u) * (2 * n - u - 1) / 2 +
               static_cast<std::size_t>(v - u - 1);
    };
    for (int p = 0; p + 2 < n; ++p) {
        const int a = order[p], w = order[p + 1], b = order[p + 2];
        entries[index(std::min(a, b), std::max(a, b))] = w;
    }
    return PartialWord(std::move(entries), n);
}

std::optional<SubgraphWitness> is_good_k24(const HamPath& a, const HamPath& b) {
    if (a.n() != b.n())
        throw precondition_error("paths live on different vertex counts");
    const int n = a.n();
    const std::vector<int>& oa = a.order();
    const std::vector<int>& ob = b.order();
    const std::vector<int> pa = a.positions();
    const std::vector<int> pb = b.positions();
    auto interior = [n](const std::vector<int>& pos, int v) {
        return pos[v] >= 1 && pos[v] <= n - 2;
    };
    auto star = [](const std::vector<int>& order, const std::vector<int>& pos, int v) {
        return std::minmax(order[pos[v] - 1], order[pos[v] + 1]);
    };
    for (int c1 = 0; c1 < n; ++c1) {
        if (!interior(pa, c1) || !interior(pb, c1)) continue;
        const auto a1 = star(oa, pa, c1);
        const auto b1 = star(ob, pb, c1);
        for (int c2 = c1 + 1; c2 < n; ++c2) {
            if (!interior(pa, c2) || !interior(pb, c2)) continue;
            const auto a2 = star(oa, pa, c2);
            const auto b2 = star(ob, pb, c2);
            // The two paths must swap the leaf pairs between the centres,
            // and the four leaves must be distinct vertices.
            if (!(b1 == a2 && b2 == a1)) continue;
            if (a1.first == a2.first || a1.first == a2.second || a1.second == a2.first ||
                a1.second == a2.second)
                continue;
            std::vector<int> leaves = {a1.first, a1.second, a2.first, a2.second};
            std::sort(leaves.begin(), leaves.end());
            leaves.insert(leaves.begin(), {c1, c2});
            return SubgraphWitness{Pattern::complete_bipartite(2, 4), std::move(leaves)};
        }
    }
    return std::nullopt;
}

} // namespace hamc
