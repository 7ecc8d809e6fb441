#include <doctest.h>

#include <random>

#include "equilab/experiments.hpp"
#include "equilab/reps.hpp"
#include "support/oracles.hpp"

using namespace equilab;
using namespace equilab::reps;

TEST_SUITE("reps") {

TEST_CASE("ternary form basics") {
    auto Q = TernaryForm::sum_of_squares();
    CHECK(Q.positive_definite());
    CHECK(Q.value(Vec3(1, 2, 3)) == 14);
    CHECK(Q.doubled_bilinear(Vec3(1, 0, 0), Vec3(0, 1, 0)) == 0);
    CHECK(Q.doubled_bilinear(Vec3(1, 2, 0), Vec3(3, 1, 0)) == 2 * 5);

    Mat3 g;
    g << 2, 1, 0, 1, 2, 0, 0, 0, 2;  // x^2 + xy + y^2 + z^2
    TernaryForm mixed(g);
    CHECK(mixed.positive_definite());
    CHECK(mixed.value(Vec3(1, 1, 0)) == 3);

    Mat3 bad;
    bad << 2, 1, 0, 0, 2, 0, 0, 0, 2;
    CHECK_THROWS_AS(TernaryForm{bad}, precondition_error);
    CHECK_FALSE(TernaryForm::diagonal(1, 1, -1).positive_definite());
}

TEST_CASE("shells of a ternary form") {
    auto Q = TernaryForm::sum_of_squares();
    CHECK(Q.vectors_of_value(1).size() == 6);
    CHECK(Q.vectors_of_value(2).size() == 12);
    CHECK(Q.vectors_of_value(7).empty());
    auto D = TernaryForm::diagonal(1, 2, 3);
    CHECK(D.vectors_of_value(1).size() == 2);
    CHECK(D.vectors_of_value(3).size() == 6);  // (+-1,+-1,0) and (0,0,+-1)
}

TEST_CASE("integral automorphisms on the worked examples") {
    auto Q = TernaryForm::sum_of_squares();
    auto autosQ = integral_automorphisms(Q);
    CHECK(autosQ.size() == 24);
    bool has_identity = false;
    for (const auto& t : autosQ) {
        CHECK((t.transpose() * Q.doubled_gram() * t) == Q.doubled_gram());
        if (t == Mat3::Identity()) has_identity = true;
    }
    CHECK(has_identity);

    auto autosD = integral_automorphisms(TernaryForm::diagonal(1, 2, 3));
    CHECK(autosD.size() == 4);

    CHECK_THROWS_AS(integral_automorphisms(TernaryForm::diagonal(1, 1, -1)),
                    precondition_error);
}

TEST_CASE("representation counts on the worked examples") {
    auto Q = TernaryForm::sum_of_squares();
    auto r1 = count_representations(Q, {1, 0, 1});
    CHECK(r1.embeddings == 24);
    CHECK(r1.orbits == 1);

    auto r2 = count_representations(Q, {7, 0, 1});
    CHECK(r2.embeddings == 0);
    CHECK(r2.orbits == 0);

    // Odd middle coefficients are never represented by an integral bilinear
    // lattice.
    auto r3 = count_representations(Q, {1, 1, 1});
    CHECK(r3.embeddings == 0);

    CHECK_THROWS_AS(count_representations(TernaryForm::diagonal(1, 1, -1), {1, 0, 1}),
                    precondition_error);
    CHECK_THROWS_AS(count_representations(Q, {1, 4, 1}), precondition_error);
}

TEST_CASE("orbit counts agree between the pair loop and the stabilizer route") {
    std::mt19937_64 rng(13);
    auto Q = TernaryForm::sum_of_squares();
    for (int i = 0; i < 60; ++i) {
        Int a = static_cast<Int>(rng() % 30) + 1;
        Int c = static_cast<Int>(rng() % 30) + 1;
        Int bmax = isqrt(4 * a * c - 1);
        Int b = static_cast<Int>(rng() % (2 * bmax + 1)) - bmax;
        forms::BinaryForm q{a, b, c};
        if (q.discriminant() >= 0) continue;
        auto direct = count_representations(Q, q);
        CHECK(direct.orbits == experiments::sum_of_squares_orbit_count(q));
    }
}

TEST_CASE("divisor counts") {
    CHECK(divisor_count(12) == 6);
    CHECK(divisor_count(1) == 1);
    for (Int p : {2, 3, 5, 97, 9973}) CHECK(divisor_count(p) == 2);
    for (Int n = 1; n <= 1000; ++n) CHECK(divisor_count(n) == oracles::divisor_pairs(n));
    CHECK_THROWS_AS(divisor_count(0), precondition_error);
    CHECK_THROWS_AS(divisor_count(-6), precondition_error);
}

TEST_CASE("census on the worked examples") {
    auto c2 = basic_lemma_census(2, 3, 1);
    CHECK(c2.ordered_pairs == 0);
    CHECK(c2.classes == 0);

    auto c5 = basic_lemma_census(5, 3, 1);
    CHECK(c5.ordered_pairs == 24);
    CHECK(c5.classes == 1);

    CHECK_THROWS_AS(basic_lemma_census(6, 3, 1), precondition_error);  // p | d
    CHECK_THROWS_AS(basic_lemma_census(5, 2, 1), precondition_error);
}

TEST_CASE("census matches a direct all-pairs oracle") {
    for (Int d = 1; d <= 300; ++d) {
        if (!spheres::legendre_admissible(d) || d % 3 == 0) continue;
        auto pts = spheres::enumerate_primitive_points(d);
        Int expected = 0;
        for (const auto& w1 : pts.points)
            for (const auto& w2 : pts.points) {
                if (w1.v == w2.v) continue;
                if (mod_floor(w1.v.x() - w2.v.x(), 3) == 0 &&
                    mod_floor(w1.v.y() - w2.v.y(), 3) == 0 &&
                    mod_floor(w1.v.z() - w2.v.z(), 3) == 0)
                    ++expected;
            }
        auto census = basic_lemma_census(pts, 3, 1);
        CHECK(census.ordered_pairs == expected);
        CHECK(census.classes <= census.ordered_pairs);
    }
}

TEST_CASE("census is empty once p^2m exceeds 4d") {
    for (Int d = 1; d <= 500; ++d) {
        if (!spheres::legendre_admissible(d) || d % 5 == 0) continue;
        int m = 1;
        while (ipow(5, 2 * m) <= 4 * d) ++m;
        CHECK(basic_lemma_census(d, 5, m).ordered_pairs == 0);
    }
}

}  // TEST_SUITE
