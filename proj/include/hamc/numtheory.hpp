#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hamc {

// Deterministic primality test for any 64-bit value.
bool is_prime(std::uint64_t n);

// Smallest prime strictly greater than n (throws on overflow past 2^64-59).
std::uint64_t next_prime(std::uint64_t n);

// Jacobi symbol (a/m) for odd positive m.
int jacobi(long long a, long long m);

struct PrimeSquare {
    std::uint64_t p = 0;          // least prime with p^2 >= n
    std::uint64_t p_squared = 0;
    double gap_exponent = 0.0;    // log(p^2 - n) / log(n), 0 when p^2 == n
};

// Least prime square at or above n (2 <= n <= 10^18).
PrimeSquare next_prime_square(std::uint64_t n);

struct GoodPair {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t m = 0;          // q(q^2-1)/2, the graph order this q yields
    double eps = 0.0;
    double k = 0.0;
};

// Finds primes p != q, both = 1 (mod 4), with (p/q) = 1 and
// p^k < q < (1+eps) p^k, scanning q upward through (x, (1+eps)x) and, for
// each q, p downward from floor(q^(1/k)).  Empty when the window has none.
std::optional<GoodPair> find_good_prime(double eps, double k, std::uint64_t x);

// Same prime pair search, driven by a target vertex count: scans q upward
// with m = q(q^2-1)/2 in (n, (1+eps)n).
std::optional<GoodPair> lps_params(std::uint64_t n, double eps, double k);

struct Quad {
    long long a0 = 0, a1 = 0, a2 = 0, a3 = 0;
};

// All integer solutions of a0^2+a1^2+a2^2+a3^2 = p with a0 odd positive and
// a1, a2, a3 even, in lexicographic order.  For prime p = 1 (mod 4) there
// are exactly p+1 of them.
std::vector<Quad> four_squares_reps(std::uint64_t p);

struct ScanReport {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> violation_ranges; // inclusive
    std::uint64_t violation_count = 0;
    double max_gap_exponent = 0.0;
};

// Scans n in [lo, hi] for violations of n + n^exponent >= next prime square
// above n, reporting maximal runs of violating n and the largest observed
// gap exponent (2 <= lo <= hi <= 10^12).
ScanReport prime_square_gap_scan(std::uint64_t lo, std::uint64_t hi, double exponent);

} // namespace hamc
