#pragma once

#include <cstdint>
#include <optional>

#include "hamc/graph.hpp"

namespace hamc {

// Vertices are the pairs (a, c) over the integers mod p, indexed
// lexicographically as a*p + c; (a, c) ~ (b, d) iff a*b = c + d (mod p).
// Loops sit exactly at the p vertices with a^2 = 2c.
Graph build_tilde_g(std::uint64_t p);

// The simple version: all edges inside a block P_a = {(a, c) : c} removed
// (loops included).  (p-1)-regular on p^2 vertices and 4-cycle-free.
Graph build_gp(std::uint64_t p);

// Structural facts about the blocks of the tilde graph.
struct BlockClaims {
    bool cross_perfect_matchings = false; // each block pair: a perfect matching
    bool intra_matching_plus_loop = false; // each block: (p-1)-vertex matching + 1 loop
    bool cross_pairs_one_common = false;   // cross-block pairs: exactly 1 common neighbor
    bool intra_pairs_zero_common = false;  // same-block distinct pairs: none

    bool all_ok() const {
        return cross_perfect_matchings && intra_matching_plus_loop && cross_pairs_one_common &&
               intra_pairs_zero_common;
    }
};

BlockClaims verify_block_claims(std::uint64_t p);

// Integer-exact eigenvalue certificate for the simple graph G(p): A^2 has
// (p-1)I diagonal blocks and 0/1 off-diagonal blocks with p-2 ones per row
// and column, so S = A^2 - J has every absolute row sum equal to 4p-5,
// bounding lambda^2 on the complement of the all-ones direction.
struct SpectralCertificate {
    std::uint64_t p = 0;
    std::uint64_t n_vertices = 0;        // p^2
    std::uint64_t degree = 0;            // p - 1
    bool blocks_ok = false;              // A^2 block structure holds exactly
    bool c4_free = false;                // every off-diagonal A^2 entry <= 1
    std::uint64_t inf_norm = 0;          // max_u sum_v |S(u,v)|, computed exactly
    std::uint64_t lambda_sq_bound = 0;   // 4p - 5
    bool connected = false;
    bool multiplicity_one_certified = false; // connected and (p-1)^2 > 4p-5
    std::optional<double> numeric_lambda2;   // advisory iterative estimate
};

SpectralCertificate spectral_certificate(std::uint64_t p, bool with_numeric);

} // namespace hamc
