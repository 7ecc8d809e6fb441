#include <doctest.h>

#include <random>
#include <set>

#include "equilab/experiments.hpp"
#include "equilab/forms.hpp"
#include "support/oracles.hpp"

using namespace equilab;
using namespace equilab::forms;

TEST_SUITE("forms") {

TEST_CASE("discriminant predicate") {
    CHECK(is_discriminant(-3));
    CHECK(is_discriminant(-4));
    CHECK_FALSE(is_discriminant(-5));
    CHECK(is_discriminant(0));
    CHECK(is_discriminant(5));
    CHECK_FALSE(is_discriminant(-6));
}

TEST_CASE("reduction on the worked examples") {
    auto r1 = reduce({1, 0, 1});
    CHECK(r1.form == BinaryForm{1, 0, 1});
    CHECK(r1.transform == Mat2::Identity());

    auto r2 = reduce({1, 2, 2});
    CHECK(r2.form == BinaryForm{1, 0, 1});

    auto r3 = reduce({2, 2, 3});
    CHECK(r3.form == BinaryForm{2, 2, 3});

    CHECK_THROWS_AS(reduce({1, 0, -1}), precondition_error);
    CHECK_THROWS_AS(reduce({-1, 0, -1}), precondition_error);
}

TEST_CASE("reduction transform certifies the output") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 3000; ++i) {
        Int a = static_cast<Int>(rng() % 50) + 1;
        Int b = static_cast<Int>(rng() % 201) - 100;
        Int cmin = (b * b) / (4 * a) + 1;
        Int c = cmin + static_cast<Int>(rng() % 50);
        BinaryForm f{a, b, c};
        if (f.discriminant() >= 0) continue;
        auto r = reduce(f);
        CHECK(is_reduced(r.form));
        CHECK(r.form.discriminant() == f.discriminant());
        Int det = r.transform(0, 0) * r.transform(1, 1) - r.transform(0, 1) * r.transform(1, 0);
        CHECK(det == 1);
        CHECK(f.transformed(r.transform) == r.form);
    }
}

TEST_CASE("class groups on the worked examples") {
    auto g3 = class_group(-3);
    CHECK(g3.class_number() == 1);
    CHECK(g3.reduced_forms[0] == BinaryForm{1, 1, 1});

    auto g4 = class_group(-4);
    CHECK(g4.class_number() == 1);
    CHECK(g4.reduced_forms[0] == BinaryForm{1, 0, 1});

    auto g23 = class_group(-23);
    REQUIRE(g23.class_number() == 3);
    CHECK(g23.reduced_forms[0] == BinaryForm{1, 1, 6});
    CHECK(g23.reduced_forms[1] == BinaryForm{2, -1, 3});
    CHECK(g23.reduced_forms[2] == BinaryForm{2, 1, 3});

    CHECK(class_group(-20).class_number() == 2);
    CHECK_THROWS_AS(class_group(-5), precondition_error);
    CHECK_THROWS_AS(class_group(4), precondition_error);
}

TEST_CASE("class groups agree with the direct reduced-triple oracle") {
    for (Int d = -1; d >= -2000; --d) {
        if (!is_discriminant(d)) continue;
        auto grp = class_group(d);
        CHECK(static_cast<Int>(grp.class_number()) == oracles::reduced_form_count(d));
        for (const auto& f : grp.reduced_forms) {
            CHECK(is_reduced(f));
            CHECK(f.is_primitive());
            CHECK(f.discriminant() == d);
        }
        CHECK(grp.principal().a == 1);
    }
}

TEST_CASE("composition: identity, inverses and the worked square") {
    // (a, -b, c) inverts every class, exhaustively for d >= -2000.
    for (Int d = -3; d >= -2000; --d) {
        if (!is_discriminant(d)) continue;
        auto grp = class_group(d);
        const auto& e = grp.principal();
        for (const auto& f : grp.reduced_forms) {
            CHECK(compose(e, f) == f);
            CHECK(compose(f, inverse(f)) == e);
        }
    }
    CHECK(compose({2, 1, 3}, {2, 1, 3}) == BinaryForm{2, -1, 3});
}

TEST_CASE("composition agrees with the ideal-multiplication oracle") {
    for (Int d : {-23, -47, -71, -84, -48, -72, -260, -403, -1235}) {
        auto grp = class_group(d);
        for (const auto& f1 : grp.reduced_forms)
            for (const auto& f2 : grp.reduced_forms)
                CHECK(compose(f1, f2) == oracles::compose_by_ideals(f1, f2));
    }
}

TEST_CASE("composition is commutative and associative") {
    std::mt19937_64 rng(11);
    for (Int d : {-84, -231, -419, -1076}) {
        auto grp = class_group(d);
        auto pick = [&]() -> const BinaryForm& {
            return grp.reduced_forms[rng() % grp.class_number()];
        };
        for (int i = 0; i < 50; ++i) {
            const auto &a = pick(), &b = pick(), &c = pick();
            CHECK(compose(a, b) == compose(b, a));
            CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        }
    }
    CHECK_THROWS_AS(compose({1, 0, 1}, {1, 1, 1}), precondition_error);
    CHECK_THROWS_AS(compose({2, 0, 2}, {1, 0, 4}), precondition_error);
}

TEST_CASE("the composition table is a finite abelian group") {
    for (Int d : {-23, -47, -84, -419}) {
        auto grp = class_group(d);
        auto table = grp.composition_table();
        std::size_t h = grp.class_number();
        std::size_t e = grp.index_of(grp.principal());
        for (std::size_t i = 0; i < h; ++i) {
            CHECK(table[e][i] == i);          // identity
            bool has_inverse = false;         // inverses
            for (std::size_t j = 0; j < h; ++j)
                if (table[i][j] == e) has_inverse = true;
            CHECK(has_inverse);
            std::set<std::size_t> row(table[i].begin(), table[i].end());
            CHECK(row.size() == h);           // Latin square row
        }
    }
}

TEST_CASE("composition is a class function") {
    // Unreduced representatives of the same classes compose to the same
    // reduced result.
    BinaryForm f{2, 1, 3};  // d = -23
    Mat2 m;
    m << 3, 1, 2, 1;  // determinant 1
    BinaryForm g = f.transformed(m);
    CHECK(reduce(g).form == f);
    CHECK(compose(g, g) == compose(f, f));
    CHECK(compose(g, f) == compose(f, f));

    std::mt19937_64 rng(29);
    for (Int d : {-84, -419, -1155}) {
        auto grp = class_group(d);
        for (int i = 0; i < 30; ++i) {
            const auto& f1 = grp.reduced_forms[rng() % grp.class_number()];
            const auto& f2 = grp.reduced_forms[rng() % grp.class_number()];
            Mat2 t;
            Int x = static_cast<Int>(rng() % 7) - 3;
            t << 1, x, 0, 1;
            Mat2 s;
            s << 0, -1, 1, 0;
            BinaryForm g1 = f1.transformed(Mat2(t * s));
            BinaryForm g2 = f2.transformed(t);
            CHECK(compose(g1, g2) == compose(f1, f2));
        }
    }
}

TEST_CASE("two-torsion counts on the worked examples") {
    CHECK(two_torsion_count(-4) == 1);
    CHECK(two_torsion_count(-20) == 2);
    CHECK(two_torsion_count(-23) == 1);
    // Both classes of d = -32 are ambiguous even though 32 has no odd prime
    // factor; the genus bound needs the prime 2.
    CHECK(two_torsion_count(-32) == 2);
}

TEST_CASE("two-torsion is bounded by the genus estimates") {
    for (Int d = -3; d >= -3000; --d) {
        if (!is_discriminant(d)) continue;
        Int t = two_torsion_count(d);
        CHECK(t <= Int(1) << omega(d));
        CHECK(t <= Int(2) << omega(d, /*odd_only=*/true));
    }
}

TEST_CASE("omega counts distinct primes") {
    CHECK(omega(12) == 2);
    CHECK(omega(12, true) == 1);
    CHECK(omega(-32) == 1);
    CHECK(omega(-32, true) == 0);
    CHECK(omega(30030) == 6);
    CHECK(omega(1) == 0);
}

TEST_CASE("CM points on the worked examples") {
    auto z1 = cm_point({1, 0, 1});
    CHECK(z1.real() == 0.0);
    CHECK(z1.imag() == 1.0);

    auto z2 = cm_point({1, 1, 1});
    CHECK(z2.real() == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(z2.imag() == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));

    auto z3 = cm_point({2, 1, 3});
    CHECK(z3.real() == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(z3.imag() == doctest::Approx(std::sqrt(23.0) / 4.0).epsilon(1e-15));

    CHECK_THROWS_AS(cm_point({-1, 0, -1}), precondition_error);
    CHECK_THROWS_AS(cm_point({2, 0, 2}), precondition_error);
}

TEST_CASE("reduced forms give CM points in the closed fundamental domain") {
    for (Int d = -3; d >= -3000; --d) {
        if (!is_discriminant(d)) continue;
        for (const auto& f : class_group(d).reduced_forms) {
            // |Re| <= 1/2 exactly: |b| <= a; |z| >= 1 exactly: c >= a.
            CHECK(2 * (f.b < 0 ? -f.b : f.b) <= 2 * f.a);
            CHECK(f.c >= f.a);
        }
    }
}

TEST_CASE("discriminant attached to a norm") {
    CHECK(discriminant_from_norm(3) == -3);
    CHECK(discriminant_from_norm(2) == -8);
    CHECK(discriminant_from_norm(5) == -20);
    CHECK(discriminant_from_norm(1) == -4);
    CHECK(discriminant_from_norm(7) == -7);
    CHECK_THROWS_AS(discriminant_from_norm(0), precondition_error);
}

TEST_CASE("large inputs stay exact") {
    // The documented working range reaches discriminants around 10^7.
    Int d = -9999996;  // = 0 mod 4
    REQUIRE(is_discriminant(d));
    auto grp = class_group(d);
    CHECK(grp.class_number() == static_cast<std::size_t>(oracles::reduced_form_count(d)));
    const auto& f = grp.reduced_forms[grp.class_number() / 2];
    CHECK(compose(f, inverse(f)) == grp.principal());
    auto z = surface::reduce_to_fundamental_domain(cm_point(f)).point;
    CHECK(z.cm().a >= 1);
}

TEST_CASE("class numbers grow like |d|^(1/2+o(1))") {
    // Dyadic medians of log h / log |d| over [-2^17, -2^12].
    for (int k = 12; k <= 16; ++k) {
        Int lo = Int(1) << k, hi = Int(1) << (k + 1);
        std::vector<Int> ds;
        for (Int ad = lo; ad < hi; ++ad)
            if (is_discriminant(-ad)) ds.push_back(-ad);
        std::vector<double> exps(ds.size());
        experiments::parallel_for(ds.size(), 0, [&](std::size_t i) {
            double h = static_cast<double>(class_group(ds[i]).class_number());
            exps[i] = std::log(h) / std::log(static_cast<double>(-ds[i]));
        });
        std::sort(exps.begin(), exps.end());
        double median = exps[exps.size() / 2];
        CHECK(median >= 0.35);
        CHECK(median <= 0.75);
    }
}

}  // TEST_SUITE
