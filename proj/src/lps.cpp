#include "hamc/lps.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "hamc/errors.hpp"
#include "hamc/numtheory.hpp"

namespace hamc {
namespace {

using u64 = std::uint64_t;

u64 mulmod_q(u64 a, u64 b, u64 q) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % q);
}

u64 powmod_q(u64 base, u64 exp, u64 q) {
    u64 r = 1 % q;
    base %= q;
    while (exp > 0) {
        if (exp & 1) r = mulmod_q(r, base, q);
        base = mulmod_q(base, base, q);
        exp >>= 1;
    }
    return r;
}

// Smallest x in [1, q) with x^2 = target (mod q); q is small enough here
// that brute force beats anything cleverer.
u64 smallest_sqrt_mod(u64 target, u64 q) {
    target %= q;
    for (u64 x = 1; x < q; ++x)
        if (mulmod_q(x, x, q) == target) return x;
    throw std::logic_error("no square root found despite residue check");
}

Mat2 mat_mul(const Mat2& a, const Mat2& b, u64 q) {
    return Mat2{(a[0] * b[0] + a[1] * b[2]) % q, (a[0] * b[1] + a[1] * b[3]) % q,
                (a[2] * b[0] + a[3] * b[2]) % q, (a[2] * b[1] + a[3] * b[3]) % q};
}

u64 mat_det(const Mat2& m, u64 q) {
    return (m[0] * m[3] % q + q - m[1] * m[2] % q) % q;
}

// Inverse of a determinant-1 matrix: its adjugate.
Mat2 mat_inverse_det1(const Mat2& m, u64 q) {
    return Mat2{m[3], (q - m[1]) % q, (q - m[2]) % q, m[0]};
}

// Of M and -M keep the one whose first nonzero row-major entry is in
// {1, ..., (q-1)/2}; at least one entry is nonzero for invertible M.
Mat2 canonical(Mat2 m, u64 q) {
    for (u64 e : m) {
        if (e == 0) continue;
        if (e > (q - 1) / 2)
            for (u64& x : m) x = (q - x) % q;
        return m;
    }
    throw std::logic_error("zero matrix cannot be canonicalized");
}

u64 mat_key(const Mat2& m, u64 q) {
    return ((m[0] * q + m[1]) * q + m[2]) * q + m[3];
}

} // namespace

LpsGraph build_lps(u64 p, u64 q) {
    if (p == q || !is_prime(p) || !is_prime(q))
        throw precondition_error("p and q must be distinct primes");
    if (p % 4 != 1 || q % 4 != 1)
        throw precondition_error("p and q must both be congruent to 1 mod 4");
    if (jacobi(static_cast<long long>(p % q), static_cast<long long>(q)) != 1)
        throw precondition_error("p must be a quadratic residue modulo q");
    if (static_cast<unsigned __int128>(q) * q <= static_cast<unsigned __int128>(4) * p)
        throw precondition_error("q must exceed 2*sqrt(p)");

    const unsigned __int128 n_wide =
        static_cast<unsigned __int128>(q) * ((static_cast<unsigned __int128>(q) * q - 1)) / 2;
    if (n_wide > 4'000'000 || n_wide * (p + 1) > 120'000'000)
        throw resource_limit_error("PSL(2," + std::to_string(q) +
                                   ") Cayley graph too large to materialize");
    const u64 n_expected = static_cast<u64>(n_wide);

    const u64 i_root = smallest_sqrt_mod(q - 1, q); // i^2 = -1 (mod q)
    const u64 s = smallest_sqrt_mod(p, q);          // s^2 = p  (mod q)
    const u64 s_inv = powmod_q(s, q - 2, q);

    const std::vector<Quad> quads = four_squares_reps(p);
    if (quads.size() != p + 1)
        throw std::logic_error("expected p+1 four-squares representations");

    auto entry = [&](long long re, long long im) -> u64 {
        long long v = (re % static_cast<long long>(q) +
                       im % static_cast<long long>(q) * static_cast<long long>(i_root)) %
                      static_cast<long long>(q);
        if (v < 0) v += static_cast<long long>(q);
        return mulmod_q(static_cast<u64>(v), s_inv, q);
    };

    std::vector<Mat2> gens;
    gens.reserve(quads.size());
    for (const Quad& a : quads) {
        Mat2 m{entry(a.a0, a.a1), entry(a.a2, a.a3), entry(-a.a2, a.a3), entry(a.a0, -a.a1)};
        if (mat_det(m, q) != 1)
            throw std::logic_error("generator determinant is not 1 after scaling");
        gens.push_back(canonical(m, q));
    }

    {
        std::vector<u64> keys;
        keys.reserve(gens.size());
        for (const Mat2& g : gens) keys.push_back(mat_key(g, q));
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
            throw std::logic_error("generators collide in PSL(2,q)");
        for (const Mat2& g : gens) {
            const Mat2 inv = canonical(mat_inverse_det1(g, q), q);
            if (!std::binary_search(keys.begin(), keys.end(), mat_key(inv, q)))
                throw std::logic_error("generator set is not closed under inversion");
        }
    }

    LpsGraph out;
    out.p = p;
    out.q = q;
    out.generators = gens;
    out.girth_lower_bound =
        2.0 * std::log(static_cast<double>(q)) / std::log(static_cast<double>(p));
    out.graph = Graph(static_cast<int>(n_expected));

    std::unordered_map<u64, int> index;
    index.reserve(n_expected * 2);
    std::vector<Mat2> mats;
    mats.reserve(n_expected);
    const Mat2 identity{1, 0, 0, 1};
    index.emplace(mat_key(identity, q), 0);
    mats.push_back(identity);
    for (std::size_t head = 0; head < mats.size(); ++head) {
        const Mat2 cur = mats[head];
        for (const Mat2& g : gens) {
            const Mat2 nxt = canonical(mat_mul(cur, g, q), q);
            auto [it, inserted] = index.emplace(mat_key(nxt, q), static_cast<int>(mats.size()));
            if (inserted) {
                if (mats.size() >= n_expected)
                    throw std::logic_error("Cayley closure exceeds |PSL(2,q)|");
                mats.push_back(nxt);
            }
            out.graph.add_edge(static_cast<int>(head), it->second);
        }
    }
    if (mats.size() != n_expected)
        throw std::logic_error("generators span a proper subgroup of PSL(2,q)");
    for (int v = 0; v < out.graph.n(); ++v)
        if (out.graph.degree(v) != static_cast<int>(p + 1))
            throw std::logic_error("Cayley graph is not (p+1)-regular");
    return out;
}

bool lps_generators_inverse_closed(const LpsGraph& lps) {
    std::vector<u64> keys;
    keys.reserve(lps.generators.size());
    for (const Mat2& g : lps.generators) keys.push_back(mat_key(g, lps.q));
    std::sort(keys.begin(), keys.end());
    for (const Mat2& g : lps.generators) {
        if (mat_det(g, lps.q) != 1) return false;
        const Mat2 inv = canonical(mat_inverse_det1(g, lps.q), lps.q);
        if (!std::binary_search(keys.begin(), keys.end(), mat_key(inv, lps.q))) return false;
    }
    return true;
}

} // namespace hamc
