#pragma once

#include <gmpxx.h>

#include <vector>

#include "hamc/partial_word.hpp"
#include "hamc/path.hpp"

namespace hamc {

// Alternating-skeleton family: for odd n, the paths
// (0, pi(1), 2, pi(3), ..., n-3, pi(n-2), n-1) over all permutations pi of
// the odd labels; for even n, the family on n-1 vertices with vertex n-1
// appended to every path.  |family| = floor((n-1)/2)!.  Any two members
// differ in some permuted slot, which yields a 4-cycle whose edges split
// two-and-two as consecutive pairs across the union.
PathFamily cfk_family(int n); // n >= 3, undirected

// Star-filling family: start from (0, *, 1, *, ..., *); while blanks
// remain, either branch on every unused vertex at the leftmost blank (when
// the blanks are not one contiguous block, or only one blank is left) or
// deterministically place the smallest unused vertex just right of the
// leftmost blank (when the blanks form a contiguous block of length >= 2).
// |family| = prod_{i=1..floor((n-1)/2)} (n - 2i).
PathFamily recursive_c4_family(int n); // n >= 3, undirected

// Three colour classes -- the ceil(n/3) lowest ids, a middle class, and the
// floor(n/3) highest ids -- with directed paths coloured cyclically
// 1,2,3,1,2,3,...  |family| = ceil(n/3)! * mid! * floor(n/3)!.  Vertices at
// distance 3 along any member share a colour, which blocks one particular
// way of creating a 4-cycle.
PathFamily tricolor_family(int n); // n >= 3, directed

// Tiles the four pairwise-reversing 3-coordinate gadgets
// (1,2,3), (3,4,1), (2,1,4), (4,3,2) across floor(n/3) blocks of three
// coordinates; block b draws from the fresh symbol window {4b+1..4b+4}
// (1-based), so each block independently chooses one of 4 gadgets and
// drops the window symbol its gadget omits.  Trailing coordinates, when n
// is not divisible by 3, take the smallest unused symbols in increasing
// order.  Returns 4^floor(n/3) pairwise-reversing injective words for
// n >= 4 (the alphabet is max(n, 4*floor(n/3)) symbols, so for some n the
// words skip symbols); n = 3 returns the single identity word.
std::vector<PartialWord> base_reversing_family(int n); // n >= 3

// One Hamiltonian path on 4m+1 vertices per permutation of {0..m-1}: a
// spine of 2m+1 vertices alternates with 2m top vertices; odd top slots are
// fixed, even top slot i carries the vertex selected by pi(i).  Two
// reversing permutations yield paths whose union contains K_{2,4}, realized
// as two swapped pairs of vertex-disjoint stars.
PathFamily k24_paths_from_reversing(const std::vector<PartialWord>& perms);

// Complete tripartite orientation: parts as equal as possible (sizes
// descending by id), edges directed part i -> part i+1 (mod 3); returns all
// direction-respecting directed Hamiltonian paths.
PathFamily tripartite_family(int n); // n >= 3, directed

struct ProductBound {
    mpz_class value;      // prod (n - 2i), exact
    double log_value;     // natural log of the product
    double reference_log; // (n/2) * (ln n - 1), the scale it is compared to
};

ProductBound product_lower_bound(int n); // n >= 3

} // namespace hamc
