#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hamc/partial_word.hpp"
#include "hamc/path.hpp"
#include "hamc/pattern.hpp"

namespace hamc {

// Subset of the three ways two paths can assemble a 4-cycle from their
// edges.  Every 4-cycle in a union of two acyclic graphs splits its four
// edges into two shares, one per path; up to symmetry the split is a
// 3-chain plus the opposite edge (H3), two opposite 2-chains (H2), or two
// interleaved pairs of opposite edges (H1).  The index is the longest
// consecutive chain that one share contributes.
struct WaySet {
    bool h1 = false, h2 = false, h3 = false;

    bool any() const { return h1 || h2 || h3; }
    bool contains(int way) const { return way == 1 ? h1 : way == 2 ? h2 : way == 3 ? h3 : false; }

    std::string token() const; // "h1,h3" etc., empty for none
    static WaySet parse(const std::string& tok);
};

// How an edge lying in both paths may be assigned when splitting a 4-cycle
// into two shares: to either path (the default) or to neither (which makes
// cycles through shared edges unassemblable; kept for comparison).
enum class SharedEdgeRule { CountsForBoth, CountsForNeither };

// For every 4-cycle in union(a, b), every way its edges can be split
// between the two paths; returns the set of ways over all 4-cycles.  A
// single cycle can admit several ways when an edge lies in both paths.
std::set<int> classify_c4_ways(const HamPath& a, const HamPath& b,
                               SharedEdgeRule rule = SharedEdgeRule::CountsForBoth);

// Witness that union(a, b) contains the pattern, when it does.
std::optional<SubgraphWitness> creates(const HamPath& a, const HamPath& b, const Pattern& pattern);

// True when some 4-cycle of union(a, b) can be split in a way in the set.
bool creates_c4_with_way(const HamPath& a, const HamPath& b, const WaySet& ways,
                         SharedEdgeRule rule = SharedEdgeRule::CountsForBoth);

enum class VerifyMode { AllCreate, NoneCreate };

struct VerifyReport {
    std::string pattern;          // pattern token ("c4", "good-k24", "reverse", ...)
    std::string ways;             // restriction token, empty when unrestricted
    std::uint64_t pairs_checked = 0;
    bool ok = false;
    long long violation_i = -1;   // first violating pair in generation order
    long long violation_j = -1;
};

// Checks every unordered pair of family members against the pattern.
// AllCreate demands a pattern occurrence for each pair (restricted to the
// given ways when provided; ways require the 4-cycle pattern); NoneCreate
// demands the opposite.  The first violating pair in index order is
// reported, and results are independent of the worker count.
VerifyReport verify_family(const PathFamily& f, const Pattern& pattern, VerifyMode mode,
                           const std::optional<WaySet>& ways = std::nullopt, int jobs = 0,
                           SharedEdgeRule rule = SharedEdgeRule::CountsForBoth);

// Same contract for the relations that are not plain subgraph patterns.
VerifyReport verify_family_good_k24(const PathFamily& f, VerifyMode mode, int jobs = 0);
VerifyReport verify_words_reversing(const std::vector<PartialWord>& words, VerifyMode mode,
                                    int jobs = 0);

// Two partial words are reversing when two coordinates hold the same two
// symbols in opposite orders (all four entries non-blank).
bool is_reversing(const PartialWord& u, const PartialWord& v);

// Best random-relabeling intersection: applies `trials` uniformly random
// vertex relabelings to family i and returns the largest intersection with
// x (earliest trial wins ties).  Deterministic for a fixed seed.
PathFamily relabel_filter(const PathFamily& x, const PathFamily& i, int trials,
                          std::uint64_t seed);

// The reverse vector of a path: one coordinate per unordered vertex pair,
// holding the middle vertex when the pair sits at distance 2 on the path.
// Exactly n-2 coordinates are filled, with distinct values.
PartialWord path_to_reverse_vector(const HamPath& h);

// Detects a K_{2,4} in union(a, b) realized the swapped-star way: each path
// contributes two vertex-disjoint 3-vertex stars centred at the two
// left-side vertices, and the two paths swap the star leaf sets.  Witness
// lists the two centres then the four leaves.
std::optional<SubgraphWitness> is_good_k24(const HamPath& a, const HamPath& b);

} // namespace hamc
