#include <doctest.h>

#include <random>
#include <set>

#include "equilab/hurwitz.hpp"
#include "equilab/spheres.hpp"

using namespace equilab;
using namespace equilab::hurwitz;
using spheres::LatticePoint3;

namespace {

Quaternion qi() { return Quaternion::from_integers(0, 1, 0, 0); }
Quaternion qj() { return Quaternion::from_integers(0, 0, 1, 0); }
Quaternion qk() { return Quaternion::from_integers(0, 0, 0, 1); }

Quaternion random_hurwitz(std::mt19937_64& rng, Int box) {
    Int parity = static_cast<Int>(rng() % 2);
    auto pick = [&] {
        Int raw = static_cast<Int>(rng() % (2 * box)) - box;
        return 2 * raw + parity;
    };
    return Quaternion::from_doubled(pick(), pick(), pick(), pick());
}

std::array<Int, 9> matrix_key(const RotationMatrix& m) {
    std::array<Int, 9> key;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            key[3 * i + j] = m(i, j).num() * 1000 + m(i, j).den();
        }
    return key;
}

}  // namespace

TEST_SUITE("hurwitz") {

TEST_CASE("Hamilton relations") {
    CHECK(qi() * qj() == qk());
    CHECK(qj() * qi() == Quaternion::from_integers(0, 0, 0, -1));
    Quaternion half = Quaternion::from_doubled(1, 1, 1, 1);  // (1+i+j+k)/2
    CHECK(half * half == Quaternion::from_doubled(-1, 1, 1, 1));
}

TEST_CASE("norm and trace") {
    CHECK(norm(qi()) == 1);
    CHECK(norm(Quaternion::from_doubled(1, 1, 1, 1)) == 1);
    CHECK(trace(Quaternion::from_integers(3, 2, 0, 0)) == 6);
    CHECK(trace(Quaternion::from_doubled(1, 1, 1, 1)) == 1);
    Quaternion q = Quaternion::from_integers(2, -3, 1, 5);
    CHECK(norm(q) == 4 + 9 + 1 + 25);
    CHECK(q * conjugate(q) == Quaternion::from_integers(norm(q), 0, 0, 0));
    CHECK(q + conjugate(q) == Quaternion::from_integers(trace(q), 0, 0, 0));
}

TEST_CASE("parity invariant is enforced") {
    CHECK_THROWS_AS(Quaternion::from_doubled(1, 0, 0, 0), precondition_error);
    CHECK_THROWS_AS(Quaternion::from_doubled(2, 1, 1, 1), precondition_error);
    CHECK_NOTHROW(Quaternion::from_doubled(1, -1, 3, 5));
}

TEST_CASE("norm is multiplicative on random Hurwitz pairs") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 10000; ++i) {
        Quaternion a = random_hurwitz(rng, 50);
        Quaternion b = random_hurwitz(rng, 50);
        CHECK(norm(a * b) == norm(a) * norm(b));
    }
}

TEST_CASE("the 24 Hurwitz units") {
    const auto& units = hurwitz_units();
    REQUIRE(units.size() == 24);
    auto contains = [&](const Quaternion& q) {
        for (const auto& u : units)
            if (u == q) return true;
        return false;
    };
    CHECK(contains(Quaternion::from_integers(1, 0, 0, 0)));
    CHECK(contains(Quaternion::from_integers(-1, 0, 0, 0)));
    CHECK(contains(qi()));
    CHECK(contains(Quaternion::from_doubled(1, 1, 1, 1)));
    int half_units = 0;
    for (const auto& u : units) {
        CHECK(norm(u) == 1);
        if (!u.has_integer_coordinates()) ++half_units;
    }
    CHECK(half_units == 16);
}

TEST_CASE("rotation_of on the worked examples") {
    auto id = rotation_of(Quaternion::from_integers(1, 0, 0, 0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(id(i, j) == Rational(i == j ? 1 : 0));

    auto ri = rotation_of(qi());
    CHECK(ri(0, 0) == Rational(1));
    CHECK(ri(1, 1) == Rational(-1));
    CHECK(ri(2, 2) == Rational(-1));
    CHECK(ri(0, 1) == Rational(0));

    // 1 + i: fixes i, sends j to k and k to -j.
    auto r = rotation_of(Quaternion::from_integers(1, 1, 0, 0));
    CHECK(r(0, 0) == Rational(1));
    CHECK(r(2, 1) == Rational(1));   // j -> k
    CHECK(r(1, 2) == Rational(-1));  // k -> -j
    CHECK(r(1, 1) == Rational(0));
}

TEST_CASE("rotation_of is an exact homomorphism into SO3") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Quaternion a = random_hurwitz(rng, 6);
        Quaternion b = random_hurwitz(rng, 6);
        if (norm(a) == 0 || norm(b) == 0) continue;
        RotationMatrix ra = rotation_of(a), rb = rotation_of(b);
        RotationMatrix rab = rotation_of(a * b);
        CHECK(RotationMatrix(ra * rb) == rab);
        RotationMatrix gram = ra.transpose() * ra;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                CHECK(gram(r, c) == Rational(r == c ? 1 : 0));
        Rational det = ra(0, 0) * (ra(1, 1) * ra(2, 2) - ra(1, 2) * ra(2, 1)) -
                       ra(0, 1) * (ra(1, 0) * ra(2, 2) - ra(1, 2) * ra(2, 0)) +
                       ra(0, 2) * (ra(1, 0) * ra(2, 1) - ra(1, 1) * ra(2, 0));
        CHECK(det == Rational(1));
    }
}

TEST_CASE("the 24 units induce exactly 12 rotations") {
    std::set<std::array<Int, 9>> images;
    for (const auto& u : hurwitz_units()) images.insert(matrix_key(rotation_of(u)));
    CHECK(images.size() == 12);
    CHECK(projectively_equal(Quaternion::from_integers(1, 0, 0, 0),
                             Quaternion::from_integers(-1, 0, 0, 0)));
    CHECK_FALSE(projectively_equal(qi(), qj()));
}

TEST_CASE("projectively equal quaternions rotate identically") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 200; ++i) {
        Quaternion q = random_hurwitz(rng, 8);
        if (norm(q) == 0) continue;
        Quaternion scaled = Quaternion(Vec4(3 * q.doubled()));
        CHECK(projectively_equal(q, scaled));
        CHECK(rotation_of(q) == rotation_of(scaled));
    }
}

TEST_CASE("stabilizer membership") {
    CHECK(stabilizer_check(Quaternion::from_integers(1, 1, 0, 0), LatticePoint3(1, 0, 0)));
    CHECK_FALSE(stabilizer_check(qj(), LatticePoint3(1, 0, 0)));
    CHECK(stabilizer_check(Quaternion::from_integers(5, 0, 0, 0), LatticePoint3(2, 1, 0)));
    CHECK_THROWS_AS(stabilizer_check(Quaternion(), LatticePoint3(1, 0, 0)),
                    precondition_error);
}

namespace {

void check_witness(const Quaternion& g, const LatticePoint3& v1, const LatticePoint3& v2,
                   Int p, int k) {
    Int pk = ipow(p, k);
    CHECK(std::gcd(norm(g), p) == 1);
    Quaternion lhs = g * Quaternion::from_pure(v1);
    Quaternion rhs = Quaternion::from_pure(v2) * g;
    for (int i = 0; i < 4; ++i)
        CHECK(mod_floor(lhs.doubled()[i] - rhs.doubled()[i], 2 * pk) == 0);
}

}  // namespace

TEST_CASE("local transitivity probe on the worked examples") {
    LatticePoint3 vi(1, 0, 0), vj(0, 1, 0), vni(-1, 0, 0);
    auto w1 = local_transitivity_probe(vi, vi, 3, 1);
    REQUIRE(w1.has_value());
    check_witness(*w1, vi, vi, 3, 1);

    auto w2 = local_transitivity_probe(vi, vj, 3, 1);
    REQUIRE(w2.has_value());
    check_witness(*w2, vi, vj, 3, 1);
    // i + j conjugates i to j exactly, so a witness certainly exists.
    check_witness(Quaternion::from_integers(0, 1, 1, 0), vi, vj, 3, 1);

    auto w3 = local_transitivity_probe(vi, vni, 3, 1);
    REQUIRE(w3.has_value());
    check_witness(*w3, vi, vni, 3, 1);
    check_witness(qj(), vi, vni, 3, 1);
}

TEST_CASE("local transitivity probe over random equal-norm pairs") {
    std::mt19937_64 rng(99);
    for (Int p : {3, 5, 7, 11, 13})
        for (int k = 1; k <= 2; ++k) {
            int done = 0;
            while (done < 10) {
                Int d = static_cast<Int>(rng() % 400) + 1;
                if (!spheres::legendre_admissible(d) || d % p == 0) continue;
                auto shell = spheres::enumerate_primitive_points(d);
                if (shell.empty()) continue;
                const auto& v1 = shell.points[rng() % shell.size()];
                const auto& v2 = shell.points[rng() % shell.size()];
                auto w = local_transitivity_probe(v1, v2, p, k);
                REQUIRE(w.has_value());
                check_witness(*w, v1, v2, p, k);
                ++done;
            }
        }
}

TEST_CASE("local transitivity probe rejects bad inputs") {
    LatticePoint3 vi(1, 0, 0);
    CHECK_THROWS_AS(local_transitivity_probe(vi, vi, 2, 1), precondition_error);
    CHECK_THROWS_AS(local_transitivity_probe(LatticePoint3(2, 0, 0), vi, 3, 1),
                    precondition_error);
    CHECK_THROWS_AS(local_transitivity_probe(LatticePoint3(1, 1, 1), vi, 3, 1),
                    precondition_error);  // p divides the norm
    CHECK_THROWS_AS(local_transitivity_probe(vi, LatticePoint3(1, 1, 0), 3, 1),
                    precondition_error);  // unequal norms mod p
}

}  // TEST_SUITE
