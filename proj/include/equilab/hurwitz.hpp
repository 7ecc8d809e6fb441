#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "equilab/rational.hpp"
#include "equilab/spheres.hpp"

namespace equilab::hurwitz {

using Vec4 = Eigen::Matrix<Int, 4, 1>;
using RotationMatrix = Eigen::Matrix<Rational, 3, 3>;

// Hamiltonian quaternion a + bi + cj + dk with half-integer entries, stored
// through doubled coordinates (2a, 2b, 2c, 2d). The Hurwitz condition is
// that the four doubled coordinates share parity.
class Quaternion {
  public:
    Quaternion() : w_(Vec4::Zero()) {}

    // From doubled coordinates; enforces the parity invariant.
    explicit Quaternion(const Vec4& doubled);
    static Quaternion from_doubled(Int r2, Int x2, Int y2, Int z2) {
        return Quaternion(Vec4(r2, x2, y2, z2));
    }
    // Integral (Lipschitz) quaternion r + xi + yj + zk.
    static Quaternion from_integers(Int r, Int x, Int y, Int z) {
        return Quaternion(Vec4(2 * r, 2 * x, 2 * y, 2 * z));
    }
    static Quaternion from_pure(const spheres::LatticePoint3& v) {
        return from_integers(0, v.v.x(), v.v.y(), v.v.z());
    }

    const Vec4& doubled() const { return w_; }
    bool is_zero() const { return w_ == Vec4::Zero(); }
    bool is_pure() const { return w_[0] == 0; }
    bool has_integer_coordinates() const { return w_[0] % 2 == 0; }

    // Vector part as a lattice point; requires integer coordinates.
    spheres::LatticePoint3 pure_part() const;

    friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return Quaternion(a.w_ + b.w_);
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return Quaternion(a.w_ - b.w_);
    }
    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w_ == b.w_;
    }

  private:
    Vec4 w_;
};

// Reduced norm a^2 + b^2 + c^2 + d^2; integral on the Hurwitz order.
Int norm(const Quaternion& q);

// Reduced trace 2a.
Int trace(const Quaternion& q);

Quaternion conjugate(const Quaternion& q);

// q1 ~ lambda q2 for a nonzero rational lambda.
bool projectively_equal(const Quaternion& q1, const Quaternion& q2);

// The 24 Hurwitz units: 8 Lipschitz units and 16 half-units.
const std::vector<Quaternion>& hurwitz_units();

// Matrix of v -> q v q^{-1} on the basis (i, j, k): exact rational entries,
// orthogonal with determinant one. Requires Nr(q) > 0.
RotationMatrix rotation_of(const Quaternion& q);

// Whether q lies (projectively) in the stabilizer torus of v.
bool stabilizer_check(const Quaternion& q, const spheres::LatticePoint3& v);

// A Hurwitz residue g mod p^k, invertible mod p, with g v1 g^{-1} = v2
// mod p^k. Requires v1, v2 primitive of equal norm mod p^k with p odd not
// dividing 2 Nr(v1). Stagewise deterministic search: an exhaustive pass mod
// p followed by one linear-corrector pass per extra digit. The correction
// equation is solvable because ad_{v2} is invertible on the complement of
// the centralizer (its eigenvalues are units when p does not divide 2d),
// so absence of a witness contradicts local transitivity.
std::optional<Quaternion> local_transitivity_probe(const spheres::LatticePoint3& v1,
                                                   const spheres::LatticePoint3& v2,
                                                   Int p, int precision);

}  // namespace equilab::hurwitz
