#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "hamc/graph.hpp"
#include "hamc/path.hpp"
#include "hamc/relations.hpp"

namespace hamc {

// Exact extremal answer over an enumerated object list.  witness_indices is
// the lexicographically smallest optimum (ascending indices into the list).
struct OracleResult {
    long long value = 0;
    std::vector<int> witness_indices;
    std::uint64_t objects_enumerated = 0;
    std::uint64_t search_nodes = 0;
};

enum class ExtremalMode { Clique, Independent };

inline constexpr std::uint64_t kDefaultExtremalBudget = 2'000'000'000;
inline constexpr std::uint64_t kDefaultHamBudget = 20'000'000'000;

// All n!/2 undirected Hamiltonian paths of K_n in lexicographic order of
// their canonical vertex sequences (3 <= n <= 8).
PathFamily enumerate_ham_paths(int n);

// A perfect matching of K_n: n/2 vertex-disjoint pairs (u, v), u < v,
// sorted by first vertex.
using Matching = std::vector<std::pair<int, int>>;

// All (n-1)!! perfect matchings of K_n in lexicographic order
// (4 <= n <= 10, n even).
std::vector<Matching> enumerate_matchings(int n);

Graph matching_graph(const Matching& m, int n);

// Exact maximum clique (mode Clique: pairwise related) or maximum
// independent set (mode Independent: pairwise unrelated) over objects
// 0..count-1, by branch-and-bound with a greedy-coloring bound.  related
// must be symmetric and is never called on the diagonal.  count is capped
// at 5000; node_budget caps search nodes across the value search and the
// lexicographic witness reconstruction.
OracleResult exact_extremal(int count, const std::function<bool(int, int)>& related,
                            ExtremalMode mode, std::uint64_t node_budget = kDefaultExtremalBudget);

// Independent gate for the solver: full subset enumeration, count <= 20.
// The witness is some optimum, not necessarily the lexicographic one.
OracleResult exhaustive_extremal(int count, const std::function<bool(int, int)>& related,
                                 ExtremalMode mode);

// Maximum pairwise 4-cycle-creating path family of K_n where every pair
// must realize a way in `ways` (3 <= n <= 6).
OracleResult exact_c4_ways_extremal(int n, const WaySet& ways,
                                    SharedEdgeRule rule = SharedEdgeRule::CountsForBoth);

// Maximum pairwise reversing set of permutations of {0..n-1} (2 <= n <= 5).
OracleResult exact_rp(int n);

enum class HamKind { Cycles, Paths };

// Exact number of Hamiltonian cycles (each undirected cycle once) or
// Hamiltonian paths (each undirected path once) of g, by pruned DFS.
// Loop-free graphs with at most 30 vertices; node_budget caps DFS nodes.
long long count_ham(const Graph& g, HamKind kind, std::uint64_t node_budget = kDefaultHamBudget);

// log(n! (d/n)^n): first-order estimate of the Hamiltonian cycle count of a
// near-regular degree-d pseudorandom graph; the subexponential correction
// factor is deliberately omitted.  Requires 1 <= d < n.
double kriv_estimate(int n, int d);

} // namespace hamc
