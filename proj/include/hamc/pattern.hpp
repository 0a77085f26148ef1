#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamc/graph.hpp"

namespace hamc {

// A subgraph pattern to search for: a cycle of an exact length, any odd or
// any even cycle, or a complete bipartite graph K_{s,t} with s <= t.
class Pattern {
public:
    enum class Kind { CycleExact, OddCycle, EvenCycle, CompleteBipartite };

    static Pattern cycle(int length);              // length >= 3
    static Pattern odd_cycle();
    static Pattern even_cycle();
    static Pattern complete_bipartite(int s, int t); // 1 <= s <= t

    Kind kind() const { return kind_; }
    int length() const { return length_; }  // CycleExact only
    int s() const { return s_; }            // CompleteBipartite only
    int t() const { return t_; }

    // Token used in files, reports and the command line: c3, c4, c2k:5,
    // odd, even, k24, k33, k2,7, ...
    std::string token() const;
    static Pattern parse(const std::string& token);

    bool operator==(const Pattern& o) const {
        return kind_ == o.kind_ && length_ == o.length_ && s_ == o.s_ && t_ == o.t_;
    }

private:
    Pattern(Kind k, int length, int s, int t) : kind_(k), length_(length), s_(s), t_(t) {}

    Kind kind_;
    int length_ = 0;
    int s_ = 0, t_ = 0;
};

// Occurrence of a pattern: for cycles, the vertices in cycle order; for
// K_{s,t}, the s left-side vertices followed by the t right-side vertices.
struct SubgraphWitness {
    Pattern pattern;
    std::vector<int> vertices;
};

// Search g for the pattern.  Returns a witness iff the pattern occurs as a
// subgraph.  Witnesses are deterministic: cycles are reported as the
// lexicographically smallest vertex sequence among shortest qualifying
// cycles (for CycleExact, among all cycles of that length); bipartite
// witnesses use the lexicographically smallest left side, then the smallest
// right vertices.  Cycle patterns require a loop-free graph.
std::optional<SubgraphWitness> find_pattern(const Graph& g, const Pattern& pattern);

} // namespace hamc
