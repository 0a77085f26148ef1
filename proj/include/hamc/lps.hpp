#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hamc/graph.hpp"

namespace hamc {

// 2x2 matrix over Z/qZ, row-major (m00, m01, m10, m11), entries in [0, q).
using Mat2 = std::array<std::uint64_t, 4>;

struct LpsGraph {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    Graph graph;                  // (p+1)-regular on q(q^2-1)/2 vertices
    std::vector<Mat2> generators; // canonical +/- representatives, det = 1
    double girth_lower_bound = 0; // 2 log_p q
};

// Cayley graph of PSL(2,q) on the p+1 generators obtained from the integer
// solutions of a0^2+a1^2+a2^2+a3^2 = p (a0 odd positive, a1,a2,a3 even),
// each mapped to ((a0+a1*i, a2+a3*i), (-a2+a3*i, a0-a1*i)) mod q with
// i^2 = -1 (mod q) and scaled to determinant 1.  Of M and -M the canonical
// representative is the one whose first nonzero row-major entry lies in
// {1, ..., (q-1)/2}.
//
// Preconditions (each violation raises precondition_error with its own
// message): p and q distinct primes; p = q = 1 (mod 4); p a quadratic
// residue mod q; q > 2 sqrt(p).  Oversized q raises resource_limit_error.
LpsGraph build_lps(std::uint64_t p, std::uint64_t q);

// True when every generator's inverse (its adjugate, since det = 1) is
// itself in the generator list after canonicalization.
bool lps_generators_inverse_closed(const LpsGraph& lps);

} // namespace hamc
