#include "equilab/spheres.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "equilab/arith.hpp"

namespace equilab::spheres {

LatticePoint3::LatticePoint3(Int x, Int y, Int z)
    : v(x, y, z),
      d(checked_cast(Int128(x) * x + Int128(y) * y + Int128(z) * z)),
      primitive(gcd3(x < 0 ? -x : x, y < 0 ? -y : y, z < 0 ? -z : z) == 1) {}

LatticePoint3::LatticePoint3(const Vec3& v) : LatticePoint3(v.x(), v.y(), v.z()) {}

bool legendre_admissible(Int d) {
    if (d < 1) throw precondition_error("legendre_admissible: d must be positive");
    Int r = d % 8;
    return r != 0 && r != 4 && r != 7;
}

bool linnik_admissible(Int d, Int p) {
    if (!legendre_admissible(d)) return false;
    return arith::legendre_symbol(-d, p) == 1;
}

namespace {

template <typename Visit>
void scan_shell(Int d, Visit&& visit) {
    Int r = isqrt(d);
    for (Int x = -r; x <= r; ++x) {
        Int rem_x = d - x * x;
        Int ry = isqrt(rem_x);
        for (Int y = -ry; y <= ry; ++y) {
            Int rem = rem_x - y * y;
            Int z;
            if (!is_square(rem, &z)) continue;
            if (z == 0) {
                if (gcd3(std::abs(x), std::abs(y), 0) == 1) visit(x, y, Int(0));
            } else {
                if (gcd3(std::abs(x), std::abs(y), z) == 1) {
                    visit(x, y, -z);
                    visit(x, y, z);
                }
            }
        }
    }
}

}  // namespace

SpherePointSet enumerate_primitive_points(Int d) {
    if (d < 1) throw precondition_error("enumerate_primitive_points: d must be positive");
    SpherePointSet out;
    out.d = d;
    scan_shell(d, [&](Int x, Int y, Int z) { out.points.emplace_back(x, y, z); });
    // scan_shell emits -z before z for fixed (x, y), so the order is already
    // lexicographic.
    return out;
}

Int count_primitive_points(Int d) {
    if (d < 1) throw precondition_error("count_primitive_points: d must be positive");
    Int n = 0;
    scan_shell(d, [&](Int, Int, Int) { ++n; });
    return n;
}

std::vector<Int> primitive_count_table(Int limit) {
    if (limit < 0) throw precondition_error("primitive_count_table: negative limit");
    std::vector<Int> total(limit + 1, 0);
    Int r = isqrt(limit);
    for (Int x = 0; x <= r; ++x) {
        Int xx = x * x;
        Int ry = isqrt(limit - xx);
        for (Int y = 0; y <= ry; ++y) {
            Int base = xx + y * y;
            Int rz = isqrt(limit - base);
            Int w_xy = (x ? 2 : 1) * (y ? 2 : 1);
            for (Int z = 0; z <= rz; ++z)
                total[base + z * z] += w_xy * (z ? 2 : 1);
        }
    }
    total[0] = 0;

    // Moebius function up to sqrt(limit).
    std::vector<int> mu(r + 1, 1);
    std::vector<bool> composite(r + 1, false);
    std::vector<Int> primes;
    for (Int i = 2; i <= r; ++i) {
        if (!composite[i]) { primes.push_back(i); mu[i] = -1; }
        for (Int p : primes) {
            if (i * p > r) break;
            composite[i * p] = true;
            mu[i * p] = (i % p == 0) ? 0 : -mu[i];
            if (i % p == 0) break;
        }
    }

    // total(d) = sum over f^2 | d of primitive(d / f^2).
    std::vector<Int> prim(limit + 1, 0);
    for (Int f = 1; f <= r; ++f) {
        if (mu[f] == 0) continue;
        Int f2 = f * f;
        for (Int m = 1; m * f2 <= limit; ++m)
            prim[m * f2] += mu[f] * total[m];
    }
    return prim;
}

Eigen::Vector3d project_to_sphere(const LatticePoint3& v) {
    if (v.d == 0) throw precondition_error("project_to_sphere: zero vector");
    double s = 1.0 / std::sqrt(static_cast<double>(v.d));
    return Eigen::Vector3d(v.v.x() * s, v.v.y() * s, v.v.z() * s);
}

ResidueSpread residue_spread(const SpherePointSet& points, Int p, int m) {
    arith::require_odd_prime(p);
    if (m < 1) throw precondition_error("residue_spread: m must be >= 1");
    Int q = ipow(p, m);
    if (q >= (Int(1) << 21))
        throw precondition_error("residue_spread: modulus p^m too large");
    std::unordered_map<std::uint64_t, std::size_t> classes;
    for (const auto& pt : points.points) {
        std::uint64_t key = static_cast<std::uint64_t>(mod_floor(pt.v.x(), q));
        key = key * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(mod_floor(pt.v.y(), q));
        key = key * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(mod_floor(pt.v.z(), q));
        ++classes[key];
    }
    std::size_t max_mult = 0;
    for (const auto& [key, n] : classes) max_mult = std::max(max_mult, n);
    return {classes.size(), max_mult};
}

const std::vector<Mat3>& rotation_group() {
    static const std::vector<Mat3> group = [] {
        std::vector<Mat3> out;
        int perm[3] = {0, 1, 2};
        std::sort(perm, perm + 3);
        do {
            for (int signs = 0; signs < 8; ++signs) {
                Mat3 m = Mat3::Zero();
                for (int i = 0; i < 3; ++i)
                    m(perm[i], i) = (signs >> i) & 1 ? -1 : 1;
                Int det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                          m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                          m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
                if (det == 1) out.push_back(m);
            }
        } while (std::next_permutation(perm, perm + 3));
        return out;
    }();
    return group;
}

std::vector<OrbitClass> so3z_orbit_classes(const SpherePointSet& points) {
    const auto& group = rotation_group();
    auto cmp = [](const Vec3& a, const Vec3& b) { return lex_less(a, b); };
    std::map<Vec3, std::size_t, decltype(cmp)> orbit_sizes(cmp);
    for (const auto& pt : points.points) {
        Vec3 best = pt.v;
        for (const auto& g : group) {
            Vec3 img = g * pt.v;
            if (lex_less(img, best)) best = img;
        }
        ++orbit_sizes[best];
    }
    std::vector<OrbitClass> out;
    out.reserve(orbit_sizes.size());
    for (const auto& [rep, size] : orbit_sizes)
        out.push_back({LatticePoint3(rep), size});
    return out;
}

}  // namespace equilab::spheres
