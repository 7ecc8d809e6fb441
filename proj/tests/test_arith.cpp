#include <doctest.h>

#include <random>

#include "equilab/arith.hpp"
#include "support/oracles.hpp"

using namespace equilab;
using namespace equilab::arith;

TEST_SUITE("arith") {

TEST_CASE("legendre symbol on the worked examples") {
    CHECK(legendre_symbol(1, 3) == 1);
    CHECK(legendre_symbol(4, 5) == 1);
    // Oracle: the squares mod 3 are exactly {0, 1}.
    CHECK_FALSE(oracles::brute_is_square_mod(2, 3));
    CHECK(legendre_symbol(2, 3) == -1);
    CHECK(legendre_symbol(0, 5) == 0);
    CHECK(legendre_symbol(10, 5) == 0);
}

TEST_CASE("legendre symbol agrees with exhaustion for small primes") {
    for (Int p : {3, 5, 7, 11, 13, 17, 19, 23})
        for (Int a = 0; a < p; ++a) {
            int expected = a == 0 ? 0 : (oracles::brute_is_square_mod(a, p) ? 1 : -1);
            CHECK(legendre_symbol(a, p) == expected);
        }
}

TEST_CASE("legendre symbol is completely multiplicative in a") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 2000; ++i) {
        Int p = std::vector<Int>{3, 5, 13, 101, 997, 10007}[rng() % 6];
        Int a = static_cast<Int>(rng() % 20000) - 10000;
        Int b = static_cast<Int>(rng() % 20000) - 10000;
        CHECK(legendre_symbol(a * b, p) == legendre_symbol(a, p) * legendre_symbol(b, p));
    }
}

TEST_CASE("legendre symbol rejects non-primes and even p") {
    CHECK_THROWS_AS(legendre_symbol(1, 2), precondition_error);
    CHECK_THROWS_AS(legendre_symbol(1, 4), precondition_error);
    CHECK_THROWS_AS(legendre_symbol(1, 9), precondition_error);
    CHECK_THROWS_AS(legendre_symbol(1, 561), precondition_error);
}

TEST_CASE("hensel_sqrt on the worked examples") {
    auto r1 = hensel_sqrt(4, 5, 1);
    REQUIRE(r1.has_value());
    CHECK(r1->residue == 2);

    // Oracle: exhaust the residues mod 49.
    auto expected = oracles::brute_sqrt_mod(2, 49);
    REQUIRE(expected.has_value());
    CHECK(*expected == 10);
    auto r2 = hensel_sqrt(2, 7, 2);
    REQUIRE(r2.has_value());
    CHECK(r2->residue == 10);
    CHECK(r2->prime == 7);
    CHECK(r2->precision == 2);

    CHECK_FALSE(hensel_sqrt(3, 5, 3).has_value());
    CHECK_THROWS_AS(hensel_sqrt(10, 5, 2), precondition_error);
}

TEST_CASE("hensel_sqrt lifts correctly for p <= 50, k <= 4 (exhaustive)") {
    for (Int p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
        for (int k = 1; k <= 4; ++k) {
            Int pk = ipow(p, k);
            for (Int a = 1; a < pk; ++a) {
                if (a % p == 0) continue;
                auto r = hensel_sqrt(a, p, k);
                if (legendre_symbol(a, p) != 1) {
                    CHECK_FALSE(r.has_value());
                    continue;
                }
                REQUIRE(r.has_value());
                CHECK(mulmod(r->residue, r->residue, pk) == mod_floor(a, pk));
                CHECK(r->residue <= pk - r->residue);  // smaller root
            }
        }
}

TEST_CASE("hensel_sqrt at precision 8") {
    for (Int p : {3, 7, 11}) {
        Int pk = ipow(p, 8);
        for (Int a : {2, 5, 23, 1234567}) {
            if (a % p == 0 || legendre_symbol(a, p) != 1) continue;
            auto r = hensel_sqrt(a, p, 8);
            REQUIRE(r.has_value());
            CHECK(mulmod(r->residue, r->residue, pk) == mod_floor(a, pk));
        }
    }
}

TEST_CASE("ResidueClass validates its invariants") {
    CHECK_THROWS_AS(ResidueClass(0, 2, 1), precondition_error);
    CHECK_THROWS_AS(ResidueClass(0, 9, 1), precondition_error);
    CHECK_THROWS_AS(ResidueClass(9, 3, 2), precondition_error);
    CHECK_THROWS_AS(ResidueClass(-1, 3, 2), precondition_error);
    CHECK_THROWS_AS(ResidueClass(0, 3, 0), precondition_error);
    CHECK(ResidueClass(8, 3, 2).modulus() == 9);
}

TEST_CASE("padic_valuation on the worked examples") {
    CHECK(padic_valuation(12, 2) == 2);
    CHECK_FALSE(padic_valuation(0, 5).has_value());  // +infinity
    CHECK(padic_valuation(147, 7) == 2);
    CHECK(padic_valuation(-147, 7) == 2);
}

TEST_CASE("padic_valuation is additive") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 2000; ++i) {
        Int p = std::vector<Int>{2, 3, 5, 7, 13}[rng() % 5];
        Int m = static_cast<Int>(rng() % 5000) + 1;
        Int n = static_cast<Int>(rng() % 5000) + 1;
        CHECK(*padic_valuation(m * n, p) == *padic_valuation(m, p) + *padic_valuation(n, p));
    }
}

}  // TEST_SUITE
