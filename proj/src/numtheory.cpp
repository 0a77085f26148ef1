#include "hamc/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hamc/errors.hpp"

namespace hamc {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = m == 1 ? 0 : 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Exact floor square root.
u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && u128{r} * r > n) --r;
    while (u128{r + 1} * (r + 1) <= n) ++r;
    return r;
}

// base^exp, or nullopt on 64-bit overflow.
std::optional<u64> ipow(u64 base, unsigned exp) {
    u128 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        r *= base;
        if (r > std::numeric_limits<u64>::max()) return std::nullopt;
    }
    return static_cast<u64>(r);
}

bool integral(double k) { return std::floor(k) == k && k >= 1 && k <= 62; }

// p^k < q, exact when k is a small integer.
bool pow_below(u64 p, double k, u64 q) {
    if (integral(k)) {
        auto v = ipow(p, static_cast<unsigned>(k));
        return v && *v < q;
    }
    return std::pow(static_cast<long double>(p), static_cast<long double>(k)) <
           static_cast<long double>(q);
}

// q < (1+eps) p^k.
bool within_upper(u64 p, double k, double eps, u64 q) {
    long double bound = (1.0L + static_cast<long double>(eps)) *
                        std::pow(static_cast<long double>(p), static_cast<long double>(k));
    return static_cast<long double>(q) < bound;
}

u64 half_q_cubed_minus_q(u64 q) {
    u128 m = (u128{q} * q - 1) * q / 2;
    if (m > std::numeric_limits<u64>::max())
        throw precondition_error("vertex count q(q^2-1)/2 exceeds 64 bits");
    return static_cast<u64>(m);
}

// Largest valid p for this q, or 0: prime, = 1 (mod 4), p != q,
// p^k < q < (1+eps) p^k, (p/q) = 1.
u64 best_p_for(u64 q, double eps, double k) {
    u64 p = static_cast<u64>(
        std::pow(static_cast<long double>(q), 1.0L / static_cast<long double>(k)));
    p += 2; // guard against floating underestimate, then walk down
    while (p >= 2 && !pow_below(p, k, q)) --p;
    u64 steps = 0;
    for (; p >= 2; --p) {
        if (!within_upper(p, k, eps, q)) break;
        if (++steps > 10000000)
            throw resource_limit_error("prime window too wide to scan (k too small)");
        if (p == q || p % 4 != 1 || !is_prime(p)) continue;
        if (jacobi(static_cast<long long>(p), static_cast<long long>(q)) == 1) return p;
    }
    return 0;
}

// Postcondition guard: every returned pair must satisfy the advertised
// relations, independently of how the search found it.
void validate_pair(const GoodPair& g) {
    bool ok = is_prime(g.p) && is_prime(g.q) && g.p != g.q && g.p % 4 == 1 && g.q % 4 == 1 &&
              pow_below(g.p, g.k, g.q) && within_upper(g.p, g.k, g.eps, g.q) &&
              jacobi(static_cast<long long>(g.p), static_cast<long long>(g.q)) == 1;
    if (!ok) throw std::logic_error("prime pair fails its own invariants");
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == s) return true;
        if (n % s == 0) return false;
    }
    u64 d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

u64 next_prime(u64 n) {
    if (n >= 18446744073709551557ull) // largest 64-bit prime
        throw precondition_error("next prime exceeds 64 bits");
    u64 c = n + 1;
    if (c <= 2) return 2;
    if (c % 2 == 0) ++c;
    while (!is_prime(c)) c += 2;
    return c;
}

int jacobi(long long a, long long m) {
    if (m <= 0 || m % 2 == 0)
        throw precondition_error("Jacobi symbol needs an odd positive modulus");
    a %= m;
    if (a < 0) a += m;
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long r = m % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, m);
        if (a % 4 == 3 && m % 4 == 3) t = -t;
        a %= m;
    }
    return m == 1 ? t : 0;
}

PrimeSquare next_prime_square(u64 n) {
    if (n < 2 || n > 1000000000000000000ull)
        throw precondition_error("next_prime_square expects 2 <= n <= 10^18");
    u64 s = isqrt(n);
    if (s * s < n) ++s;
    u64 p = is_prime(s) ? s : next_prime(s);
    PrimeSquare out;
    out.p = p;
    out.p_squared = p * p;
    out.gap_exponent =
        out.p_squared == n
            ? 0.0
            : std::log(static_cast<double>(out.p_squared - n)) / std::log(static_cast<double>(n));
    return out;
}

std::optional<GoodPair> find_good_prime(double eps, double k, u64 x) {
    if (!(eps > 0) || !(k > 0) || x < 5)
        throw precondition_error("find_good_prime expects eps > 0, k > 0, x >= 5");
    long double upper = (1.0L + static_cast<long double>(eps)) * static_cast<long double>(x);
    for (u64 q = next_prime(x); static_cast<long double>(q) < upper; q = next_prime(q)) {
        if (q % 4 != 1) continue;
        u64 p = best_p_for(q, eps, k);
        if (p == 0) continue;
        GoodPair g;
        g.p = p;
        g.q = q;
        g.m = u128{q} * (u128{q} * q - 1) / 2 <= std::numeric_limits<u64>::max()
                  ? half_q_cubed_minus_q(q)
                  : 0;
        g.eps = eps;
        g.k = k;
        validate_pair(g);
        return g;
    }
    return std::nullopt;
}

std::optional<GoodPair> lps_params(u64 n, double eps, double k) {
    if (!(eps > 0) || !(k > 0) || n < 100)
        throw precondition_error("lps_params expects eps > 0, k > 0, n >= 100");
    long double upper = (1.0L + static_cast<long double>(eps)) * static_cast<long double>(n);
    u64 guess = static_cast<u64>(std::cbrtl(2.0L * static_cast<long double>(n)));
    u64 q = guess > 12 ? guess - 10 : 2;
    if (!is_prime(q)) q = next_prime(q);
    while (half_q_cubed_minus_q(q) <= n) q = next_prime(q);
    for (; static_cast<long double>(half_q_cubed_minus_q(q)) < upper; q = next_prime(q)) {
        if (q % 4 != 1) continue;
        u64 p = best_p_for(q, eps, k);
        if (p == 0) continue;
        GoodPair g;
        g.p = p;
        g.q = q;
        g.m = half_q_cubed_minus_q(q);
        g.eps = eps;
        g.k = k;
        validate_pair(g);
        return g;
    }
    return std::nullopt;
}

std::vector<Quad> four_squares_reps(u64 p) {
    if (!is_prime(p) || p % 4 != 1)
        throw precondition_error("four-square listing expects a prime = 1 (mod 4)");
    std::vector<Quad> out;
    auto even_floor = [](u64 v) {
        u64 r = isqrt(v);
        return static_cast<long long>(r - r % 2);
    };
    for (long long a0 = 1; static_cast<u64>(a0) * a0 <= p; a0 += 2) {
        const u64 r0 = p - static_cast<u64>(a0) * a0;
        const long long e1 = even_floor(r0);
        for (long long a1 = -e1; a1 <= e1; a1 += 2) {
            const u64 r1 = r0 - static_cast<u64>(a1 * a1);
            const long long e2 = even_floor(r1);
            for (long long a2 = -e2; a2 <= e2; a2 += 2) {
                const u64 r2 = r1 - static_cast<u64>(a2 * a2);
                const u64 t = isqrt(r2);
                if (t * t != r2 || t % 2 != 0) continue;
                if (t == 0) {
                    out.push_back({a0, a1, a2, 0});
                } else {
                    out.push_back({a0, a1, a2, -static_cast<long long>(t)});
                    out.push_back({a0, a1, a2, static_cast<long long>(t)});
                }
            }
        }
    }
    return out;
}

ScanReport prime_square_gap_scan(u64 lo, u64 hi, double exponent) {
    if (lo < 2 || lo >= hi || hi > 1000000000000ull)
        throw precondition_error("scan expects 2 <= lo < hi <= 10^12");
    if (!(exponent > 0) || !(exponent <= 1))
        throw precondition_error("scan exponent must lie in (0, 1]");
    ScanReport rep;
    auto violates = [&](u64 n, u64 s) {
        return static_cast<long double>(n) +
                   std::pow(static_cast<long double>(n), static_cast<long double>(exponent)) <
               static_cast<long double>(s);
    };
    u64 prev = 1; // segment (prev, p^2] has next prime square p^2
    for (u64 p = 2; prev < hi; p = next_prime(p)) {
        const u64 s = p * p;
        const u64 seg_lo = std::max(lo, prev + 1);
        const u64 seg_hi = std::min(hi, s);
        prev = s;
        if (seg_lo > seg_hi) continue;
        if (s > seg_lo) {
            double ge = std::log(static_cast<double>(s - seg_lo)) /
                        std::log(static_cast<double>(seg_lo));
            rep.max_gap_exponent = std::max(rep.max_gap_exponent, ge);
        }
        if (!violates(seg_lo, s)) continue;
        // Violations form a prefix of the segment; binary search its end.
        u64 good = seg_lo, bad = seg_hi + 1; // violates(good), and bad is clean or past end
        while (good + 1 < bad) {
            u64 mid = good + (bad - good) / 2;
            if (mid > seg_hi || !violates(mid, s))
                bad = mid;
            else
                good = mid;
        }
        rep.violation_count += good - seg_lo + 1;
        if (!rep.violation_ranges.empty() && rep.violation_ranges.back().second + 1 == seg_lo)
            rep.violation_ranges.back().second = good;
        else
            rep.violation_ranges.emplace_back(seg_lo, good);
    }
    return rep;
}

} // namespace hamc
