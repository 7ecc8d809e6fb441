#include "equilab/hurwitz.hpp"

#include <array>

#include "equilab/arith.hpp"

namespace equilab::hurwitz {

Quaternion::Quaternion(const Vec4& doubled) : w_(doubled) {
    Int parity = mod_floor(w_[0], 2);
    for (int i = 1; i < 4; ++i)
        if (mod_floor(w_[i], 2) != parity)
            throw precondition_error("Quaternion: doubled coordinates must share parity");
}

spheres::LatticePoint3 Quaternion::pure_part() const {
    if (!has_integer_coordinates())
        throw precondition_error("Quaternion: pure_part needs integer coordinates");
    return spheres::LatticePoint3(w_[1] / 2, w_[2] / 2, w_[3] / 2);
}

namespace {

// Hamilton product on raw 4-vectors (exact, 128-bit accumulation).
std::array<Int128, 4> raw_product(const Vec4& a, const Vec4& b) {
    Int128 r1 = a[0], x1 = a[1], y1 = a[2], z1 = a[3];
    Int128 r2 = b[0], x2 = b[1], y2 = b[2], z2 = b[3];
    return {r1 * r2 - x1 * x2 - y1 * y2 - z1 * z2,
            r1 * x2 + x1 * r2 + y1 * z2 - z1 * y2,
            r1 * y2 - x1 * z2 + y1 * r2 + z1 * x2,
            r1 * z2 + x1 * y2 - y1 * x2 + z1 * r2};
}

}  // namespace

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    // Doubled coordinates multiply as D(ab) = D(a) D(b) / 2; the quotient is
    // integral because the Hurwitz order is closed under multiplication.
    auto p = raw_product(a.w_, b.w_);
    Vec4 out;
    for (int i = 0; i < 4; ++i) {
        if (p[i] % 2 != 0)
            throw std::logic_error("Quaternion product left the Hurwitz lattice");
        out[i] = checked_cast(p[i] / 2);
    }
    return Quaternion(out);
}

Int norm(const Quaternion& q) {
    const Vec4& w = q.doubled();
    Int128 s = Int128(w[0]) * w[0] + Int128(w[1]) * w[1] +
               Int128(w[2]) * w[2] + Int128(w[3]) * w[3];
    return checked_cast(s / 4);  // multiple of 4 by the parity invariant
}

Int trace(const Quaternion& q) { return q.doubled()[0]; }

Quaternion conjugate(const Quaternion& q) {
    const Vec4& w = q.doubled();
    return Quaternion(Vec4(w[0], -w[1], -w[2], -w[3]));
}

bool projectively_equal(const Quaternion& q1, const Quaternion& q2) {
    if (q1.is_zero() || q2.is_zero()) return q1.is_zero() && q2.is_zero();
    const Vec4& a = q1.doubled();
    const Vec4& b = q2.doubled();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (Int128(a[i]) * b[j] != Int128(a[j]) * b[i]) return false;
    return true;
}

const std::vector<Quaternion>& hurwitz_units() {
    static const std::vector<Quaternion> units = [] {
        std::vector<Quaternion> out;
        for (Int r = -2; r <= 2; ++r)
            for (Int x = -2; x <= 2; ++x)
                for (Int y = -2; y <= 2; ++y)
                    for (Int z = -2; z <= 2; ++z) {
                        Int parity = mod_floor(r, 2);
                        if (mod_floor(x, 2) != parity || mod_floor(y, 2) != parity ||
                            mod_floor(z, 2) != parity)
                            continue;
                        if (r * r + x * x + y * y + z * z != 4) continue;
                        out.push_back(Quaternion::from_doubled(r, x, y, z));
                    }
        return out;
    }();
    return units;
}

RotationMatrix rotation_of(const Quaternion& q) {
    if (q.is_zero()) throw precondition_error("rotation_of: zero quaternion");
    const Vec4& w = q.doubled();
    Int nr4 = checked_cast(Int128(w[0]) * w[0] + Int128(w[1]) * w[1] +
                           Int128(w[2]) * w[2] + Int128(w[3]) * w[3]);
    RotationMatrix m;
    Vec4 conj(w[0], -w[1], -w[2], -w[3]);
    for (int col = 0; col < 3; ++col) {
        Vec4 basis = Vec4::Zero();
        basis[col + 1] = 1;
        auto left = raw_product(w, basis);
        Vec4 mid;
        for (int i = 0; i < 4; ++i) mid[i] = checked_cast(left[i]);
        auto full = raw_product(mid, conj);
        // Column = vector part of w e w~ over |w|^2 = 4 Nr(q).
        for (int row = 0; row < 3; ++row)
            m(row, col) = Rational(checked_cast(full[row + 1]), nr4);
    }
    return m;
}

bool stabilizer_check(const Quaternion& q, const spheres::LatticePoint3& v) {
    if (norm(q) == 0) throw precondition_error("stabilizer_check: norm zero");
    Quaternion pure = Quaternion::from_pure(v);
    return q * pure == pure * q;
}

namespace {

using Coords = std::array<Int, 4>;

// Integer quaternion product mod m on plain coordinates.
Coords product_mod(const Coords& a, const Coords& b, Int m) {
    Int128 r1 = a[0], x1 = a[1], y1 = a[2], z1 = a[3];
    Int128 r2 = b[0], x2 = b[1], y2 = b[2], z2 = b[3];
    auto md = [m](Int128 v) { return static_cast<Int>(((v % m) + m) % m); };
    return {md(r1 * r2 - x1 * x2 - y1 * y2 - z1 * z2),
            md(r1 * x2 + x1 * r2 + y1 * z2 - z1 * y2),
            md(r1 * y2 - x1 * z2 + y1 * r2 + z1 * x2),
            md(r1 * z2 + x1 * y2 - y1 * x2 + z1 * r2)};
}

// First g in lexicographic order over [0,p)^4 with accept(g) true.
template <typename Accept>
std::optional<Coords> scan_mod_p(Int p, Accept&& accept) {
    Coords g{};
    for (g[0] = 0; g[0] < p; ++g[0])
        for (g[1] = 0; g[1] < p; ++g[1])
            for (g[2] = 0; g[2] < p; ++g[2])
                for (g[3] = 0; g[3] < p; ++g[3])
                    if (accept(g)) return g;
    return std::nullopt;
}

}  // namespace

std::optional<Quaternion> local_transitivity_probe(const spheres::LatticePoint3& v1,
                                                   const spheres::LatticePoint3& v2,
                                                   Int p, int precision) {
    arith::require_odd_prime(p);
    if (precision < 1)
        throw precondition_error("local_transitivity_probe: precision must be >= 1");
    if (!v1.primitive || !v2.primitive)
        throw precondition_error("local_transitivity_probe: points must be primitive");
    if (mod_floor(v1.d, p) == 0)
        throw precondition_error("local_transitivity_probe: p must not divide 2 Nr(v1)");
    Int pk = ipow(p, precision);
    if (mod_floor(v1.d - v2.d, pk) != 0)
        throw precondition_error("local_transitivity_probe: norms differ mod p^k");

    const Coords a1 = {0, v1.v.x(), v1.v.y(), v1.v.z()};
    const Coords a2 = {0, v2.v.x(), v2.v.y(), v2.v.z()};

    // For odd p every Hurwitz residue mod p^k has an integer-coordinate
    // representative, so the search ranges over plain integer quaternions.
    auto base = scan_mod_p(p, [&](const Coords& g) {
        Int nr = (g[0] * g[0] + g[1] * g[1] + g[2] * g[2] + g[3] * g[3]) % p;
        return nr != 0 && product_mod(g, a1, p) == product_mod(a2, g, p);
    });
    if (!base) return std::nullopt;
    Coords g = *base;

    Int modulus = p;
    for (int digit = 1; digit < precision; ++digit) {
        Int next = checked_mul(modulus, p);
        Coords lhs = product_mod(g, a1, next);
        Coords rhs = product_mod(a2, g, next);
        Coords residual;
        for (int i = 0; i < 4; ++i) {
            Int diff = mod_floor(lhs[i] - rhs[i], next);
            if (diff % modulus != 0)
                throw std::logic_error("local_transitivity_probe: lift invariant broken");
            residual[i] = (diff / modulus) % p;
        }
        // g' = g + modulus * h must satisfy h a1 - a2 h = -residual mod p.
        auto corr = scan_mod_p(p, [&](const Coords& h) {
            Coords l = product_mod(h, a1, p);
            Coords r = product_mod(a2, h, p);
            for (int i = 0; i < 4; ++i)
                if (mod_floor(l[i] - r[i] + residual[i], p) != 0) return false;
            return true;
        });
        if (!corr) return std::nullopt;
        for (int i = 0; i < 4; ++i) g[i] += modulus * (*corr)[i];
        modulus = next;
    }
    return Quaternion::from_integers(g[0], g[1], g[2], g[3]);
}

}  // namespace equilab::hurwitz
