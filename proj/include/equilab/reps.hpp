#pragma once

#include <Eigen/Core>
#include <map>
#include <vector>

#include "equilab/forms.hpp"
#include "equilab/spheres.hpp"

namespace equilab::reps {

using Vec3 = spheres::Vec3;
using Mat3 = spheres::Mat3;

// Integral ternary quadratic form. The Gram matrix has integer diagonal and
// half-integer off-diagonal entries, so the doubled matrix 2G is stored:
// Q(x) = x^T (2G) x / 2 and the doubled bilinear form x^T (2G) y = 2 B(x, y)
// is always integral.
class TernaryForm {
  public:
    explicit TernaryForm(const Mat3& doubled_gram);

    static TernaryForm diagonal(Int a, Int b, Int c);
    static TernaryForm sum_of_squares() { return diagonal(1, 1, 1); }

    const Mat3& doubled_gram() const { return gram2_; }
    bool positive_definite() const;

    Int value(const Vec3& x) const;       // Q(x)
    Int doubled_bilinear(const Vec3& x, const Vec3& y) const;  // 2 B(x, y)

    // All integer vectors with Q(v) = n (empty for n < 0); cached per form
    // instance.
    const std::vector<Vec3>& vectors_of_value(Int n) const;

  private:
    Mat3 gram2_;
    mutable std::map<Int, std::vector<Vec3>> shells_;
};

// All determinant-one integer matrices T with T^T G T = G. Requires a
// positive definite form (the search is a finite vector matching).
std::vector<Mat3> integral_automorphisms(const TernaryForm& q);

struct RepresentationCount {
    Int embeddings;  // ordered pairs (u, w): Q(u) = a, Q(w) = c, 2B(u, w) = b
    Int orbits;      // the same pairs modulo the diagonal SO_Q(Z) action
};

// Embeddings of the binary lattice (Z^2, q) into (Z^3, Q). Returns (0, 0)
// when some coefficient is not represented.
RepresentationCount count_representations(const TernaryForm& Q, const forms::BinaryForm& q);

// Number of positive divisors. The pairs (x, y) with xy = n and x > 0 are
// in bijection with these.
Int divisor_count(Int n);

// Census of p-adically close pairs on the shell of norm d: ordered pairs of
// distinct primitive points congruent mod p^m, and their diagonal orbit
// classes under the 24 integral rotations. Verifies the middle-coefficient
// constraints of q(x, y) = Nr(x w1 + y w2) = d x^2 + e xy + d y^2 for every
// pair: e != +-2d, |2d - e| <= 4d and p^{2m} | (2d - e).
struct PairCensus {
    Int d, p;
    int m;
    Int ordered_pairs;
    Int classes;
};

PairCensus basic_lemma_census(Int d, Int p, int m);
PairCensus basic_lemma_census(const spheres::SpherePointSet& points, Int p, int m);

}  // namespace equilab::reps
