#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "hamc/errors.hpp"
#include "hamc/numtheory.hpp"

using namespace hamc;

namespace {

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t modpow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 acc = 1, base = b % m;
    for (; e; e >>= 1) {
        if (e & 1) acc = acc * base % m;
        base = base * base % m;
    }
    return static_cast<std::uint64_t>(acc);
}

// Legendre symbol by Euler's criterion; extended to odd composite moduli by
// multiplicativity over the prime factorization.
int euler_jacobi(long long a, long long m) {
    int result = 1;
    for (long long d = 3; m > 1; d += 2) {
        while (m % d == 0) {
            m /= d;
            const long long r = (a % d + d) % d;
            if (r == 0) return 0;
            const std::uint64_t e = modpow(static_cast<std::uint64_t>(r),
                                           static_cast<std::uint64_t>((d - 1) / 2),
                                           static_cast<std::uint64_t>(d));
            if (e != 1) result = -result;
        }
    }
    return result;
}

std::size_t brute_quad_count(long long p) {
    std::size_t count = 0;
    const long long r = static_cast<long long>(std::sqrt(static_cast<double>(p))) + 1;
    for (long long a0 = 1; a0 * a0 <= p; a0 += 2)
        for (long long a1 = -r; a1 <= r; ++a1)
            for (long long a2 = -r; a2 <= r; ++a2)
                for (long long a3 = -r; a3 <= r; ++a3)
                    if (a1 % 2 == 0 && a2 % 2 == 0 && a3 % 2 == 0 &&
                        a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 == p)
                        ++count;
    return count;
}

std::uint64_t brute_next_prime_square(std::uint64_t n) {
    for (std::uint64_t p = 2;; ++p)
        if (trial_division_prime(p) && p * p >= n) return p * p;
}

} // namespace

TEST_CASE("primality and next prime") {
    for (std::uint64_t n = 0; n <= 2000; ++n) CHECK(is_prime(n) == trial_division_prime(n));
    CHECK(is_prime(561) == false);          // Carmichael number
    CHECK(is_prime(2147483647));            // 2^31 - 1
    CHECK(is_prime((1ull << 61) - 1));      // Mersenne prime
    CHECK_FALSE(is_prime(1ull << 61));
    CHECK_FALSE(is_prime(3215031751ull));   // strong pseudoprime to bases 2,3,5,7

    CHECK(next_prime(0) == 2);
    CHECK(next_prime(2) == 3);
    CHECK(next_prime(7) == 11);
    CHECK(next_prime(13) == 17);
    CHECK(next_prime(1000000000000ull) == 1000000000039ull);
    for (std::uint64_t n = 0; n < 300; ++n) {
        const std::uint64_t p = next_prime(n);
        CHECK(p > n);
        CHECK(trial_division_prime(p));
        for (std::uint64_t q = n + 1; q < p; ++q) CHECK_FALSE(trial_division_prime(q));
    }
    CHECK_THROWS_AS(next_prime(~0ull), precondition_error);
}

TEST_CASE("Jacobi symbol matches Euler's criterion") {
    CHECK(jacobi(1, 1) == 1);
    CHECK(jacobi(0, 9) == 0);
    CHECK(jacobi(4, 5) == 1);
    CHECK(jacobi(5, 13) == -1);
    CHECK(jacobi(5, 29) == 1);
    CHECK(jacobi(13, 17) == 1);
    CHECK(jacobi(2, 15) == 1);   // composite modulus: (2/3)(2/5) = (-1)(-1)
    CHECK(jacobi(-1, 7) == -1);  // 7 = 3 (mod 4)
    CHECK(jacobi(-1, 13) == 1);
    for (long long m = 3; m <= 99; m += 2)
        for (long long a = -30; a <= 30; ++a) CHECK(jacobi(a, m) == euler_jacobi(a, m));
    CHECK_THROWS_AS(jacobi(3, 4), precondition_error);
    CHECK_THROWS_AS(jacobi(3, -5), precondition_error);
    CHECK_THROWS_AS(jacobi(3, 0), precondition_error);
}

TEST_CASE("four-square representations with the odd-positive normal form") {
    for (std::uint64_t p : {5ull, 13ull, 17ull, 29ull, 37ull, 41ull, 53ull, 61ull, 73ull, 89ull,
                            97ull, 101ull, 109ull, 113ull, 137ull, 149ull, 157ull, 173ull, 181ull,
                            193ull, 197ull}) {
        const auto reps = four_squares_reps(p);
        CHECK(reps.size() == p + 1);
        for (std::size_t i = 0; i < reps.size(); ++i) {
            const Quad& q = reps[i];
            CHECK(q.a0 % 2 == 1);
            CHECK(q.a0 > 0);
            CHECK(q.a1 % 2 == 0);
            CHECK(q.a2 % 2 == 0);
            CHECK(q.a3 % 2 == 0);
            CHECK(static_cast<std::uint64_t>(q.a0 * q.a0 + q.a1 * q.a1 + q.a2 * q.a2 +
                                             q.a3 * q.a3) == p);
            if (i) {
                const Quad& prev = reps[i - 1];
                CHECK(std::make_tuple(prev.a0, prev.a1, prev.a2, prev.a3) <
                      std::make_tuple(q.a0, q.a1, q.a2, q.a3));
            }
        }
        // Exhaustive cross-check for the smaller primes.
        if (p <= 61) CHECK(reps.size() == brute_quad_count(static_cast<long long>(p)));
    }
    CHECK_THROWS_AS(four_squares_reps(7), precondition_error);  // 3 (mod 4)
    CHECK_THROWS_AS(four_squares_reps(15), precondition_error); // composite
}

TEST_CASE("next prime square and its gap exponent") {
    const PrimeSquare s10 = next_prime_square(10);
    CHECK(s10.p == 5);
    CHECK(s10.p_squared == 25);
    CHECK(s10.gap_exponent ==
          doctest::Approx(std::log(15.0) / std::log(10.0)).epsilon(1e-12));
    CHECK(next_prime_square(25).p_squared == 25);
    CHECK(next_prime_square(25).gap_exponent == 0.0);
    CHECK(next_prime_square(26).p_squared == 49);
    CHECK(next_prime_square(2).p_squared == 4);
    for (std::uint64_t n = 2; n <= 400; ++n)
        CHECK(next_prime_square(n).p_squared == brute_next_prime_square(n));
    const PrimeSquare big = next_prime_square(1000000000000000000ull);
    CHECK(big.p_squared >= 1000000000000000000ull);
    CHECK(is_prime(big.p));
    CHECK_THROWS_AS(next_prime_square(1), precondition_error);
}

TEST_CASE("prime pair search windows") {
    const auto g = find_good_prime(0.5, 2.0, 25);
    REQUIRE(g.has_value());
    CHECK(g->p == 5);
    CHECK(g->q == 29);
    CHECK(g->m == 12180); // q(q^2-1)/2 accompanies every returned pair
    CHECK(g->eps == 0.5);
    CHECK(g->k == 2.0);
    CHECK(jacobi(static_cast<long long>(g->p), static_cast<long long>(g->q)) == 1);
    CHECK(g->p % 4 == 1);
    CHECK(g->q % 4 == 1);

    const auto l = lps_params(10000, 0.25, 2.0);
    REQUIRE(l.has_value());
    CHECK(l->p == 5);
    CHECK(l->q == 29);
    CHECK(l->m == 12180);
    CHECK(l->m == l->q * (l->q * l->q - 1) / 2);
    CHECK(l->m > 10000);
    CHECK(static_cast<double>(l->m) <= 1.25 * 10000.0);

    // A window with no admissible q comes back empty rather than throwing.
    CHECK_FALSE(find_good_prime(0.05, 2.0, 6).has_value());
    CHECK_THROWS_AS(find_good_prime(0.0, 2.0, 25), precondition_error);
    CHECK_THROWS_AS(lps_params(10, 0.25, 2.0), precondition_error);
}

TEST_CASE("prime square gap scan") {
    const ScanReport r = prime_square_gap_scan(2, 100, 0.8625);
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> expected{
        {2, 2}, {10, 14}, {26, 30}, {50, 78}};
    CHECK(r.violation_ranges == expected);
    CHECK(r.violation_count == 40);
    CHECK(r.max_gap_exponent ==
          doctest::Approx(std::log(15.0) / std::log(10.0)).epsilon(1e-12));

    SUBCASE("agrees with a direct rescan at several exponents") {
        for (double e : {0.5, 0.8625, 0.99, 1.0}) {
            const ScanReport got = prime_square_gap_scan(2, 300, e);
            std::vector<std::pair<std::uint64_t, std::uint64_t>> runs;
            std::uint64_t count = 0;
            double max_exp = 0.0;
            for (std::uint64_t n = 2; n <= 300; ++n) {
                const std::uint64_t s = brute_next_prime_square(n);
                const double gap_exp =
                    s == n ? 0.0
                           : std::log(static_cast<double>(s - n)) / std::log(static_cast<double>(n));
                max_exp = std::max(max_exp, gap_exp);
                const bool viol =
                    static_cast<double>(n) + std::pow(static_cast<double>(n), e) <
                    static_cast<double>(s);
                if (!viol) continue;
                ++count;
                if (!runs.empty() && runs.back().second == n - 1)
                    runs.back().second = n;
                else
                    runs.emplace_back(n, n);
            }
            CHECK(got.violation_ranges == runs);
            CHECK(got.violation_count == count);
            CHECK(got.max_gap_exponent == doctest::Approx(max_exp).epsilon(1e-9));
        }
    }
    SUBCASE("a comfortable exponent has nothing to report") {
        const ScanReport quiet = prime_square_gap_scan(31, 49, 1.0);
        CHECK(quiet.violation_ranges.empty());
        CHECK(quiet.violation_count == 0);
        CHECK(quiet.max_gap_exponent > 0.0);
    }
    SUBCASE("argument validation") {
        CHECK_THROWS_AS(prime_square_gap_scan(100, 2, 0.8625), precondition_error);
        CHECK_THROWS_AS(prime_square_gap_scan(5, 5, 0.8625), precondition_error);
        CHECK_THROWS_AS(prime_square_gap_scan(2, 100, 0.0), precondition_error);
        CHECK_THROWS_AS(prime_square_gap_scan(2, 100, 1.5), precondition_error);
        CHECK_THROWS_AS(prime_square_gap_scan(1, 100, 0.8625), precondition_error);
    }
}
