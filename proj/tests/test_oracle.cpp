#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "hamc/errors.hpp"
#include "hamc/graph.hpp"
#include "hamc/oracle.hpp"
#include "hamc/partial_word.hpp"
#include "hamc/path.hpp"
#include "hamc/pattern.hpp"
#include "hamc/relations.hpp"
#include "hamc/rng.hpp"

using namespace hamc;

namespace {

// Reference extremal solver: walk every subset mask and keep the best
// feasible one; among optima, remember the lexicographically smallest index
// vector (masks enumerated ascending give that automatically when ties keep
// the first).  Only for count <= ~20.
struct SubsetOptimum {
    long long value = 0;
    std::vector<int> witness;
};

SubsetOptimum subset_oracle(int count, const std::function<bool(int, int)>& related,
                            ExtremalMode mode) {
    SubsetOptimum best;
    const auto fits = [&](int i, int j) {
        const bool r = related(i, j);
        return mode == ExtremalMode::Clique ? r : !r;
    };
    for (std::uint32_t mask = 0; mask < (1u << count); ++mask) {
        std::vector<int> picked;
        for (int i = 0; i < count; ++i)
            if (mask >> i & 1u) picked.push_back(i);
        if (static_cast<long long>(picked.size()) < best.value) continue;
        bool ok = true;
        for (std::size_t a = 0; a < picked.size() && ok; ++a)
            for (std::size_t b = a + 1; b < picked.size() && ok; ++b)
                ok = fits(picked[a], picked[b]);
        if (!ok) continue;
        if (static_cast<long long>(picked.size()) > best.value ||
            (static_cast<long long>(picked.size()) == best.value &&
             (best.witness.empty() || picked < best.witness))) {
            best.value = static_cast<long long>(picked.size());
            best.witness = picked;
        }
    }
    return best;
}

void check_feasible(const OracleResult& r, int count,
                    const std::function<bool(int, int)>& related, ExtremalMode mode) {
    CHECK(static_cast<long long>(r.witness_indices.size()) == r.value);
    CHECK(std::is_sorted(r.witness_indices.begin(), r.witness_indices.end()));
    for (int idx : r.witness_indices) {
        CHECK(idx >= 0);
        CHECK(idx < count);
    }
    for (std::size_t a = 0; a < r.witness_indices.size(); ++a)
        for (std::size_t b = a + 1; b < r.witness_indices.size(); ++b) {
            const bool rel = related(r.witness_indices[a], r.witness_indices[b]);
            CHECK(rel == (mode == ExtremalMode::Clique));
        }
}

long long brute_count_ham(const Graph& g, HamKind kind) {
    const int n = g.n();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    long long total = 0;
    do {
        bool ok = true;
        for (int i = 0; i + 1 < n && ok; ++i)
            ok = g.has_edge(perm[static_cast<std::size_t>(i)],
                            perm[static_cast<std::size_t>(i + 1)]);
        if (!ok) continue;
        if (kind == HamKind::Cycles) {
            if (g.has_edge(perm.front(), perm.back())) ++total;
        } else {
            ++total;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    // Each undirected cycle is traversed 2n ways, each path twice.
    return kind == HamKind::Cycles ? total / (2 * n) : total / 2;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete_bipartite_graph(int s, int t) {
    Graph g(s + t);
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) g.add_edge(u, s + v);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);
        g.add_edge(v, v + 5);
        g.add_edge(v + 5, (v + 2) % 5 + 5);
    }
    return g;
}

Graph random_graph(Rng& rng, int n, int percent) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_below(100) < static_cast<std::uint64_t>(percent)) g.add_edge(u, v);
    return g;
}

// Relation "the union of paths i and j contains the pattern".
std::function<bool(int, int)> creates_relation(const PathFamily& f, const Pattern& pat) {
    return [&f, pat](int i, int j) {
        return creates(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)], pat)
            .has_value();
    };
}

} // namespace

TEST_CASE("path and matching enumerations") {
    CHECK(enumerate_ham_paths(3).size() == 3);
    CHECK(enumerate_ham_paths(4).size() == 12);
    CHECK(enumerate_ham_paths(5).size() == 60);
    const PathFamily f = enumerate_ham_paths(4);
    for (std::size_t i = 1; i < f.size(); ++i) CHECK(f[i - 1].order() < f[i].order());
    for (std::size_t i = 0; i < f.size(); ++i)
        CHECK(f[i].order().front() < f[i].order().back());
    CHECK_THROWS_AS(enumerate_ham_paths(2), precondition_error);
    CHECK_THROWS_AS(enumerate_ham_paths(9), precondition_error);

    CHECK(enumerate_matchings(4).size() == 3);
    CHECK(enumerate_matchings(6).size() == 15);
    CHECK(enumerate_matchings(10).size() == 945);
    const auto ms = enumerate_matchings(6);
    for (std::size_t i = 1; i < ms.size(); ++i) CHECK(ms[i - 1] < ms[i]);
    for (const Matching& m : ms) {
        std::vector<int> seen;
        for (const auto& [u, v] : m) {
            CHECK(u < v);
            seen.push_back(u);
            seen.push_back(v);
        }
        std::vector<int> sorted = seen;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5});
        const Graph g = matching_graph(m, 6);
        for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 1);
    }
    CHECK_THROWS_AS(enumerate_matchings(5), precondition_error);
    CHECK_THROWS_AS(enumerate_matchings(12), precondition_error);
}

TEST_CASE("branch-and-bound equals full subset enumeration") {
    Rng rng(0x0bacca7au);
    for (int trial = 0; trial < 100; ++trial) {
        const int count = 2 + static_cast<int>(rng.next_below(11)); // 2..12
        const int percent = 10 + static_cast<int>(rng.next_below(81));
        std::vector<std::vector<bool>> rel(static_cast<std::size_t>(count),
                                           std::vector<bool>(static_cast<std::size_t>(count)));
        for (int i = 0; i < count; ++i)
            for (int j = i + 1; j < count; ++j)
                rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    rel[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                        rng.next_below(100) < static_cast<std::uint64_t>(percent);
        const auto related = [&rel](int i, int j) {
            return rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        };
        const ExtremalMode mode =
            trial % 2 == 0 ? ExtremalMode::Clique : ExtremalMode::Independent;

        const SubsetOptimum want = subset_oracle(count, related, mode);
        const OracleResult bnb = exact_extremal(count, related, mode);
        const OracleResult exh = exhaustive_extremal(count, related, mode);

        CHECK(bnb.value == want.value);
        CHECK(exh.value == want.value);
        CHECK(bnb.witness_indices == want.witness); // lexicographic optimum
        check_feasible(bnb, count, related, mode);
        check_feasible(exh, count, related, mode);
        CHECK(bnb.objects_enumerated == static_cast<std::uint64_t>(count));
        CHECK(bnb.search_nodes > 0);
    }

    const auto never = [](int, int) { return false; };
    CHECK(exact_extremal(0, never, ExtremalMode::Clique).value == 0);
    CHECK(exact_extremal(1, never, ExtremalMode::Clique).value == 1);
    CHECK(exact_extremal(7, never, ExtremalMode::Independent).value == 7);
    CHECK(exact_extremal(7, never, ExtremalMode::Clique).value == 1);
    CHECK_THROWS_AS(exact_extremal(-1, never, ExtremalMode::Clique), precondition_error);
    CHECK_THROWS_AS(exact_extremal(5001, never, ExtremalMode::Clique), resource_limit_error);
    CHECK_THROWS_AS(exhaustive_extremal(21, never, ExtremalMode::Clique), resource_limit_error);

    // A starved budget dies loudly instead of answering.
    Rng rng2(42);
    std::vector<std::vector<bool>> rel(24, std::vector<bool>(24));
    for (int i = 0; i < 24; ++i)
        for (int j = i + 1; j < 24; ++j)
            rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                rel[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                    rng2.next_below(2) == 0;
    const auto related24 = [&rel](int i, int j) {
        return rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    };
    CHECK_THROWS_AS(exact_extremal(24, related24, ExtremalMode::Clique, 3),
                    resource_limit_error);
}

TEST_CASE("largest pairwise triangle-creating path families") {
    const Pattern c3 = Pattern::cycle(3);

    const PathFamily f4 = enumerate_ham_paths(4);
    const OracleResult h4 =
        exact_extremal(static_cast<int>(f4.size()), creates_relation(f4, c3), ExtremalMode::Clique);
    CHECK(h4.value == 3);

    const PathFamily f5 = enumerate_ham_paths(5);
    const OracleResult h5 =
        exact_extremal(static_cast<int>(f5.size()), creates_relation(f5, c3), ExtremalMode::Clique);
    CHECK(h5.value == 10);

    // Gate the solver with the exhaustive oracle on the n = 4 instance.
    const OracleResult gate = exhaustive_extremal(static_cast<int>(f4.size()),
                                                  creates_relation(f4, c3), ExtremalMode::Clique);
    CHECK(gate.value == h4.value);
}

TEST_CASE("largest 4-cycle-creating and 4-cycle-avoiding families on four vertices") {
    const Pattern c4 = Pattern::cycle(4);
    const PathFamily f4 = enumerate_ham_paths(4);
    const auto rel = creates_relation(f4, c4);
    const int count = static_cast<int>(f4.size());

    const OracleResult h = exact_extremal(count, rel, ExtremalMode::Clique);
    const OracleResult hbar = exact_extremal(count, rel, ExtremalMode::Independent);
    CHECK(h.value == 6);
    CHECK(hbar.value == 2);
    CHECK(h.value * hbar.value == 12); // n!/2 exactly at n = 4

    // Both numbers re-validated by full subset enumeration over all 2^12 sets.
    const SubsetOptimum subset_h = subset_oracle(count, rel, ExtremalMode::Clique);
    const SubsetOptimum subset_hbar = subset_oracle(count, rel, ExtremalMode::Independent);
    CHECK(subset_h.value == 6);
    CHECK(subset_hbar.value == 2);

    // The way-restricted front end reproduces the unrestricted answer when
    // every way is allowed.
    const OracleResult ways_all = exact_c4_ways_extremal(4, WaySet{true, true, true});
    CHECK(ways_all.value == 6);
    CHECK(ways_all.witness_indices == h.witness_indices);
    CHECK_THROWS_AS(exact_c4_ways_extremal(7, WaySet{true, true, true}), precondition_error);

    // The creating/avoiding product bound also holds one size up.
    const PathFamily f5 = enumerate_ham_paths(5);
    const auto rel5 = creates_relation(f5, c4);
    const int count5 = static_cast<int>(f5.size());
    const OracleResult h5 = exact_extremal(count5, rel5, ExtremalMode::Clique);
    const OracleResult hbar5 = exact_extremal(count5, rel5, ExtremalMode::Independent);
    CHECK(h5.value >= 1);
    CHECK(hbar5.value >= 1);
    CHECK(h5.value * hbar5.value <= 60); // 5!/2
}

TEST_CASE("way-restricted family maxima on five vertices") {
    // Test-side wiring through the generic solver must agree with the
    // dedicated entry point, for each single way and both edge rules.
    const PathFamily f5 = enumerate_ham_paths(5);
    const int count = static_cast<int>(f5.size());
    for (int way = 1; way <= 3; ++way) {
        WaySet ws;
        (way == 1 ? ws.h1 : way == 2 ? ws.h2 : ws.h3) = true;
        for (const auto rule :
             {SharedEdgeRule::CountsForBoth, SharedEdgeRule::CountsForNeither}) {
            const auto rel = [&f5, &ws, rule](int i, int j) {
                return creates_c4_with_way(f5[static_cast<std::size_t>(i)],
                                           f5[static_cast<std::size_t>(j)], ws, rule);
            };
            const OracleResult direct = exact_c4_ways_extremal(5, ws, rule);
            const OracleResult generic = exact_extremal(count, rel, ExtremalMode::Clique);
            CHECK(direct.value == generic.value);
            CHECK(direct.witness_indices == generic.witness_indices);
        }
    }
    // The 2+2 way already admits the full star-filling family.
    const OracleResult h2only = exact_c4_ways_extremal(5, WaySet{false, true, false});
    CHECK(h2only.value >= 3);
}

TEST_CASE("maximum pairwise reversing permutation sets") {
    const OracleResult rp2 = exact_rp(2);
    CHECK(rp2.value == 2); // (0,1) and (1,0) reverse each other

    // Gate n = 3 with a full subset scan over all six permutations.
    std::vector<PartialWord> perms3;
    std::vector<int> p{0, 1, 2};
    do {
        perms3.push_back(PartialWord(p, 3));
    } while (std::next_permutation(p.begin(), p.end()));
    const auto rel3 = [&perms3](int i, int j) {
        return is_reversing(perms3[static_cast<std::size_t>(i)],
                            perms3[static_cast<std::size_t>(j)]);
    };
    const SubsetOptimum want3 = subset_oracle(6, rel3, ExtremalMode::Clique);
    const OracleResult rp3 = exact_rp(3);
    CHECK(rp3.value == want3.value);
    CHECK(rp3.value == 2);

    const OracleResult rp4 = exact_rp(4);
    CHECK(rp4.value >= 4); // the block gadgets achieve four
    CHECK(rp4.objects_enumerated == 24);

    CHECK_THROWS_AS(exact_rp(1), precondition_error);
    CHECK_THROWS_AS(exact_rp(6), precondition_error);
}

TEST_CASE("Hamiltonian counting: fixed graphs and a brute-force gate") {
    CHECK(count_ham(complete_graph(4), HamKind::Cycles) == 3);
    CHECK(count_ham(complete_graph(5), HamKind::Cycles) == 12);
    CHECK(count_ham(cycle_graph(5), HamKind::Cycles) == 1);
    CHECK(count_ham(cycle_graph(5), HamKind::Paths) == 5);
    CHECK(count_ham(complete_bipartite_graph(3, 3), HamKind::Cycles) == 6);
    CHECK(count_ham(petersen(), HamKind::Cycles) == 0);
    CHECK(count_ham(complete_graph(4), HamKind::Paths) == 12);

    Rng rng(0xc0ffee11u);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng.next_below(5)); // 3..7
        const Graph g = random_graph(rng, n, 30 + static_cast<int>(rng.next_below(60)));
        CHECK(count_ham(g, HamKind::Cycles) == brute_count_ham(g, HamKind::Cycles));
        CHECK(count_ham(g, HamKind::Paths) == brute_count_ham(g, HamKind::Paths));
    }

    CHECK_THROWS_AS(count_ham(complete_graph(10), HamKind::Cycles, 5), resource_limit_error);
    CHECK_THROWS_AS(count_ham(Graph(31), HamKind::Cycles), resource_limit_error);
    Graph loopy(4, /*allow_loops=*/true);
    loopy.add_edge(0, 0);
    CHECK_THROWS_AS(count_ham(loopy, HamKind::Cycles), precondition_error);
    CHECK_THROWS_AS(count_ham(Graph(2), HamKind::Cycles), precondition_error);
}

TEST_CASE("first-order Hamiltonian count estimate") {
    const auto reference = [](int n, int d) {
        double log_fact = 0.0;
        for (int k = 2; k <= n; ++k) log_fact += std::log(static_cast<double>(k));
        return log_fact +
               n * (std::log(static_cast<double>(d)) - std::log(static_cast<double>(n)));
    };
    CHECK(kriv_estimate(25, 4) == doctest::Approx(reference(25, 4)).epsilon(1e-12));
    CHECK(kriv_estimate(25, 4) == doctest::Approx(12.189068629).epsilon(1e-6));
    CHECK(kriv_estimate(2, 1) == doctest::Approx(-std::log(2.0)).epsilon(1e-12));
    CHECK(kriv_estimate(100, 10) == doctest::Approx(reference(100, 10)).epsilon(1e-10));
    CHECK_THROWS_AS(kriv_estimate(10, 0), precondition_error);
    CHECK_THROWS_AS(kriv_estimate(10, 10), precondition_error);
}

TEST_SUITE("slow") {

TEST_CASE("largest triangle-creating family on six vertices") {
    const PathFamily f6 = enumerate_ham_paths(6);
    const OracleResult h6 = exact_extremal(static_cast<int>(f6.size()),
                                           creates_relation(f6, Pattern::cycle(3)),
                                           ExtremalMode::Clique);
    CHECK(h6.value == 10);
    check_feasible(h6, static_cast<int>(f6.size()),
                   creates_relation(f6, Pattern::cycle(3)), ExtremalMode::Clique);
}

TEST_CASE("maximum reversing permutation set on five symbols") {
    const OracleResult rp5 = exact_rp(5);
    CHECK(rp5.value >= 4); // one block of gadgets plus fixed tail coordinates
    CHECK(rp5.objects_enumerated == 120);
    // Exact optimum is re-checked against the generic solver wiring.
    std::vector<PartialWord> perms5;
    std::vector<int> p{0, 1, 2, 3, 4};
    do {
        perms5.push_back(PartialWord(p, 5));
    } while (std::next_permutation(p.begin(), p.end()));
    const auto rel5 = [&perms5](int i, int j) {
        return is_reversing(perms5[static_cast<std::size_t>(i)],
                            perms5[static_cast<std::size_t>(j)]);
    };
    const OracleResult generic = exact_extremal(120, rel5, ExtremalMode::Clique);
    CHECK(rp5.value == generic.value);
}

} // TEST_SUITE("slow")
