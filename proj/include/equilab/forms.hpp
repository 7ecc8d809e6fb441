#pragma once

#include <Eigen/Core>
#include <vector>

#include "equilab/numeric.hpp"
#include "equilab/surface.hpp"

namespace equilab::forms {

using Mat2 = Eigen::Matrix<Int, 2, 2>;

// Binary quadratic form a x^2 + b xy + c y^2.
struct BinaryForm {
    Int a, b, c;

    Int discriminant() const {
        return checked_cast(Int128(b) * b - Int128(4) * a * c);
    }
    bool is_primitive() const { return gcd3(a, b, c) == 1; }
    bool is_positive_definite() const { return a > 0 && discriminant() < 0; }
    Int eval(Int x, Int y) const {
        return checked_cast(Int128(a) * x * x + Int128(b) * x * y + Int128(c) * y * y);
    }
    // Pullback under the column action (x, y) -> M (x, y)^T.
    BinaryForm transformed(const Mat2& m) const;

    friend bool operator==(const BinaryForm& l, const BinaryForm& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c;
    }
    friend bool operator<(const BinaryForm& l, const BinaryForm& r) {
        if (l.a != r.a) return l.a < r.a;
        if (l.b != r.b) return l.b < r.b;
        return l.c < r.c;
    }
};

// d = 0 or 1 mod 4.
bool is_discriminant(Int d);

bool is_reduced(const BinaryForm& f);

struct ReduceResult {
    BinaryForm form;      // |b| <= a <= c, b >= 0 on the boundary
    Mat2 transform;       // determinant one, f.transformed(transform) == form
};

// Gauss reduction of a positive definite form.
ReduceResult reduce(const BinaryForm& f);

inline BinaryForm inverse(const BinaryForm& f) { return {f.a, -f.b, f.c}; }

// The form class group of a negative discriminant.
struct FormClassGroup {
    Int discriminant = 0;
    std::vector<BinaryForm> reduced_forms;  // sorted by (a, b, c)

    std::size_t class_number() const { return reduced_forms.size(); }
    const BinaryForm& principal() const;
    std::size_t index_of(const BinaryForm& reduced) const;

    // table[i][j] = index of the composite of classes i and j.
    std::vector<std::vector<std::size_t>> composition_table() const;
};

// Enumerates all primitive reduced forms by scanning b and factoring
// (b^2 - d)/4.
FormClassGroup class_group(Int d);

// Dirichlet composition (via united forms) followed by reduction; a class
// function of its two arguments.
BinaryForm compose(const BinaryForm& f1, const BinaryForm& f2);

// Number of classes f with f * f principal.
Int two_torsion_count(Int d);

// Number of distinct prime divisors; odd_only skips the prime 2.
int omega(Int n, bool odd_only = false);

// The CM point (-b + sqrt(|d|) i) / (2a), carried exactly.
surface::HalfPlanePoint cm_point(const BinaryForm& f);

// d = -D when D = 3 mod 4, else -4D: the discriminant of the order attached
// to an integer point of norm D.
Int discriminant_from_norm(Int D);

}  // namespace equilab::forms
