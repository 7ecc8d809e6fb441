#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <vector>

#include "equilab/numeric.hpp"

namespace equilab::spheres {

using Vec3 = Eigen::Matrix<Int, 3, 1>;
using Mat3 = Eigen::Matrix<Int, 3, 3>;

// Integer point with cached norm d = x^2 + y^2 + z^2 and primitivity flag.
struct LatticePoint3 {
    Vec3 v;
    Int d;
    bool primitive;

    LatticePoint3(Int x, Int y, Int z);
    explicit LatticePoint3(const Vec3& v);
};

inline bool lex_less(const Vec3& a, const Vec3& b) {
    if (a.x() != b.x()) return a.x() < b.x();
    if (a.y() != b.y()) return a.y() < b.y();
    return a.z() < b.z();
}

inline bool operator==(const LatticePoint3& a, const LatticePoint3& b) {
    return a.v == b.v;
}

// Primitive solutions of x^2 + y^2 + z^2 = d, stored in lexicographic order.
struct SpherePointSet {
    Int d = 0;
    std::vector<LatticePoint3> points;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

// Legendre's condition: d mod 8 not in {0, 4, 7}.
bool legendre_admissible(Int d);

// Linnik's condition at the odd prime p: Legendre-admissible and -d a
// nonzero square mod p.
bool linnik_admissible(Int d, Int p);

// Full box scan with pruning on partial sums; O(d) per shell.
SpherePointSet enumerate_primitive_points(Int d);

// Counting-only path, same scan without materializing the points.
Int count_primitive_points(Int d);

// counts[d] = |primitive points of norm d| for all 0 <= d <= limit, computed
// by one octant sieve over the ball plus Moebius inversion over square
// divisors. Much faster than per-shell scans for long ranges.
std::vector<Int> primitive_count_table(Int limit);

// v / sqrt(d); throws on the zero vector.
Eigen::Vector3d project_to_sphere(const LatticePoint3& v);

struct ResidueSpread {
    std::size_t occupied;
    std::size_t max_multiplicity;
};

// Classifies points by their coordinate triple mod p^m.
ResidueSpread residue_spread(const SpherePointSet& points, Int p, int m);

// The 24 signed permutation matrices of determinant one, built once.
const std::vector<Mat3>& rotation_group();

struct OrbitClass {
    LatticePoint3 representative;  // lexicographically minimal in its orbit
    std::size_t size;
};

// Partition of the set into orbits under the rotation group, sorted by
// representative.
std::vector<OrbitClass> so3z_orbit_classes(const SpherePointSet& points);

}  // namespace equilab::spheres
