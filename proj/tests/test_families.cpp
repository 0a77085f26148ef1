#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "hamc/errors.hpp"
#include "hamc/families.hpp"
#include "hamc/pattern.hpp"
#include "hamc/relations.hpp"

using namespace hamc;

namespace {

long long skeleton_slots_factorial(int n) {
    // floor((n-1)/2)!
    long long f = 1;
    for (long long k = 2; k <= (n - 1) / 2; ++k) f *= k;
    return f;
}

long long falling_odd_product(int n) {
    // prod_{i=1..floor((n-1)/2)} (n - 2i)
    long long p = 1;
    for (int i = 1; 2 * i <= n - 1; ++i) p *= n - 2 * i;
    return p;
}

long long tricolor_closed_form(int n) {
    auto fact = [](int k) {
        long long f = 1;
        for (int j = 2; j <= k; ++j) f *= j;
        return f;
    };
    const int hi = n / 3, lo = (n + 2) / 3, mid = n - hi - lo;
    return fact(lo) * fact(mid) * fact(hi);
}

int tricolor_color(int n, int v) {
    const int c1 = (n + 2) / 3, c3 = n / 3;
    if (v < c1) return 1;
    if (v >= n - c3) return 3;
    return 2;
}

} // namespace

TEST_CASE("star-filling family sizes match the falling product") {
    CHECK(recursive_c4_family(5).size() == 3);
    CHECK(recursive_c4_family(7).size() == 15);
    CHECK(recursive_c4_family(9).size() == 105);
    CHECK(recursive_c4_family(11).size() == 945);
    for (int n = 3; n <= 13; ++n) {
        const PathFamily f = recursive_c4_family(n);
        CHECK(static_cast<long long>(f.size()) == falling_odd_product(n));
        CHECK(f.n() == n);
        CHECK_FALSE(f.directed());
    }
    CHECK_THROWS_AS(recursive_c4_family(2), precondition_error);
}

TEST_CASE("star-filling family: deterministic first members") {
    const PathFamily f = recursive_c4_family(9);
    CHECK(f[0].order() == std::vector<int>{0, 2, 1, 4, 3, 6, 5, 8, 7});
    const PathFamily g = recursive_c4_family(5);
    REQUIRE(g.size() == 3);
    CHECK(g[0].order() == std::vector<int>{0, 2, 1, 4, 3});
    CHECK(g[1].order() == std::vector<int>{0, 3, 1, 4, 2});
    CHECK(g[2].order() == std::vector<int>{0, 4, 1, 3, 2});
}

TEST_CASE("alternating-skeleton family: size and shape") {
    CHECK(cfk_family(7).size() == 6);
    for (int n = 3; n <= 11; ++n)
        CHECK(static_cast<long long>(cfk_family(n).size()) == skeleton_slots_factorial(n));

    // Odd n: even labels sit at even positions; odd labels fill the slots.
    const PathFamily f7 = cfk_family(7);
    for (std::size_t i = 0; i < f7.size(); ++i) {
        const auto& ord = f7[i].order();
        for (int k = 0; k < 7; k += 2) CHECK(ord[static_cast<std::size_t>(k)] == k);
    }

    // Even n: the family on n-1 vertices with the last vertex appended.
    const PathFamily f8 = cfk_family(8);
    REQUIRE(f8.size() == 6);
    for (std::size_t i = 0; i < f8.size(); ++i) {
        CHECK(f8[i].n() == 8);
        const auto& ord = f8[i].order();
        CHECK((ord.front() == 7 || ord.back() == 7)); // canonicalization may flip
    }
    CHECK_THROWS_AS(cfk_family(2), precondition_error);
}

TEST_CASE("tricolor family: size, colors, and periodicity") {
    CHECK(tricolor_family(9).size() == 216);
    CHECK(tricolor_family(3).size() == 1);
    for (int n = 3; n <= 10; ++n) {
        const PathFamily f = tricolor_family(n);
        CHECK(static_cast<long long>(f.size()) == tricolor_closed_form(n));
        CHECK(f.directed());
        for (std::size_t i = 0; i < f.size(); ++i) {
            const auto& ord = f[i].order();
            for (int k = 0; k < n; ++k)
                CHECK(tricolor_color(n, ord[static_cast<std::size_t>(k)]) == k % 3 + 1);
            // Vertices three steps apart along the path share a color class.
            for (int k = 0; k + 3 < n; ++k)
                CHECK(tricolor_color(n, ord[static_cast<std::size_t>(k)]) ==
                      tricolor_color(n, ord[static_cast<std::size_t>(k + 3)]));
        }
    }
    CHECK_THROWS_AS(tricolor_family(2), precondition_error);
}

TEST_CASE("block-gadget words: exact small families and reversing property") {
    const auto w3 = base_reversing_family(3);
    REQUIRE(w3.size() == 1);
    CHECK(w3[0].entries() == std::vector<int>{0, 1, 2});

    const auto w4 = base_reversing_family(4);
    REQUIRE(w4.size() == 4);
    CHECK(w4[0].entries() == std::vector<int>{0, 1, 2, 3});
    CHECK(w4[1].entries() == std::vector<int>{2, 3, 0, 1});
    CHECK(w4[2].entries() == std::vector<int>{1, 0, 3, 2});
    CHECK(w4[3].entries() == std::vector<int>{3, 2, 1, 0});
    for (const auto& w : w4) CHECK(w.is_permutation());

    CHECK(base_reversing_family(6).size() == 16);
    for (int n = 4; n <= 12; ++n) {
        const auto ws = base_reversing_family(n);
        CHECK(ws.size() == static_cast<std::size_t>(std::llround(std::pow(4.0, n / 3))));
        for (const auto& w : ws) {
            CHECK(w.total());
            CHECK(w.length() == n);
        }
        for (std::size_t i = 0; i < ws.size(); ++i)
            for (std::size_t j = i + 1; j < ws.size(); ++j) CHECK(is_reversing(ws[i], ws[j]));
    }
    CHECK_THROWS_AS(base_reversing_family(2), precondition_error);
}

TEST_CASE("spine gadget paths from permutations") {
    const auto perms = base_reversing_family(4);
    const PathFamily f = k24_paths_from_reversing(perms);
    REQUIRE(f.size() == 4);
    CHECK(f.n() == 17);

    SUBCASE("single permutation yields a single valid path") {
        const PathFamily one = k24_paths_from_reversing({perms[0]});
        CHECK(one.size() == 1);
        CHECK(one.n() == 17);
    }
    SUBCASE("pairwise complete-bipartite creation") {
        const VerifyReport r =
            verify_family(f, Pattern::complete_bipartite(2, 4), VerifyMode::AllCreate);
        CHECK(r.ok);
        CHECK(r.pairs_checked == 6);
    }
    SUBCASE("pairwise swapped-star witnesses") {
        const VerifyReport r = verify_family_good_k24(f, VerifyMode::AllCreate);
        CHECK(r.ok);
    }
    SUBCASE("inputs must be total permutations of a common length") {
        CHECK_THROWS_AS(k24_paths_from_reversing({PartialWord({0, PartialWord::kBlank}, 2)}),
                        precondition_error);
        CHECK_THROWS_AS(k24_paths_from_reversing({perms[0], base_reversing_family(3)[0]}),
                        precondition_error);
        CHECK_THROWS_AS(k24_paths_from_reversing({}), precondition_error);
    }
}

TEST_CASE("directed tripartite family") {
    CHECK(tripartite_family(6).size() == 24);
    CHECK(tripartite_family(3).size() == 3);
    const PathFamily f = tripartite_family(6);
    CHECK(f.directed());
    const VerifyReport r =
        verify_family(f, Pattern::complete_bipartite(3, 3), VerifyMode::NoneCreate);
    CHECK(r.ok);
    CHECK(r.pairs_checked == 276);
    CHECK_THROWS_AS(tripartite_family(2), precondition_error);
}

TEST_CASE("falling product bound: exact value and log scale") {
    const ProductBound b9 = product_lower_bound(9);
    CHECK(b9.value == 105);
    CHECK(b9.log_value == doctest::Approx(std::log(105.0)).epsilon(1e-12));
    CHECK(b9.reference_log == doctest::Approx(4.5 * (std::log(9.0) - 1.0)).epsilon(1e-12));

    CHECK(product_lower_bound(5).value == 3);
    CHECK(product_lower_bound(4).value == 2);
    CHECK(product_lower_bound(3).value == 1);
    for (int n = 3; n <= 13; ++n) {
        const ProductBound b = product_lower_bound(n);
        CHECK(b.value == mpz_class(static_cast<long>(falling_odd_product(n))));
        CHECK(static_cast<long long>(recursive_c4_family(n).size()) == b.value.get_si());
    }

    // The exact integer stays exact far beyond doubles.
    const ProductBound big = product_lower_bound(201);
    CHECK(big.value > 0);
    CHECK(mpz_sizeinbase(big.value.get_mpz_t(), 2) > 64);
    CHECK(big.log_value == doctest::Approx(std::log(big.value.get_d())).epsilon(1e-9));
    CHECK_THROWS_AS(product_lower_bound(2), precondition_error);
}
