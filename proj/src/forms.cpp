#include "equilab/forms.hpp"

#include <algorithm>

namespace equilab::forms {

BinaryForm BinaryForm::transformed(const Mat2& m) const {
    Int p = m(0, 0), q = m(0, 1), r = m(1, 0), s = m(1, 1);
    Int128 na = Int128(a) * p * p + Int128(b) * p * r + Int128(c) * r * r;
    Int128 nb = Int128(2) * a * p * q + Int128(b) * (Int128(p) * s + Int128(q) * r) +
                Int128(2) * c * r * s;
    Int128 nc = Int128(a) * q * q + Int128(b) * q * s + Int128(c) * s * s;
    return {checked_cast(na), checked_cast(nb), checked_cast(nc)};
}

bool is_discriminant(Int d) {
    Int r = mod_floor(d, 4);
    return r == 0 || r == 1;
}

bool is_reduced(const BinaryForm& f) {
    Int ab = f.b < 0 ? -f.b : f.b;
    if (!(ab <= f.a && f.a <= f.c)) return false;
    if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
}

ReduceResult reduce(const BinaryForm& f) {
    if (f.discriminant() >= 0 || f.a <= 0)
        throw precondition_error("reduce: form must be positive definite");
    Int a = f.a, b = f.b, c = f.c;
    Mat2 t = Mat2::Identity();
    auto translate = [&](Int n) {
        // x -> x + n y.
        c = checked_cast(Int128(a) * n * n + Int128(b) * n + c);
        b = checked_cast(Int128(b) + Int128(2) * a * n);
        Mat2 step;
        step << 1, n, 0, 1;
        t = (t * step).eval();
    };
    for (;;) {
        Int q = floor_div(b + a, 2 * a);
        if (b - 2 * a * q == -a) --q;  // boundary: b = a preferred over -a
        if (q != 0) translate(-q);
        if (a > c || (a == c && b < 0)) {
            std::swap(a, c);
            b = -b;
            Mat2 s;
            s << 0, -1, 1, 0;
            t = (t * s).eval();
            continue;
        }
        break;
    }
    return {{a, b, c}, t};
}

const BinaryForm& FormClassGroup::principal() const {
    for (const auto& f : reduced_forms)
        if (f.a == 1) return f;
    throw std::logic_error("FormClassGroup: principal form missing");
}

std::size_t FormClassGroup::index_of(const BinaryForm& reduced) const {
    auto it = std::lower_bound(reduced_forms.begin(), reduced_forms.end(), reduced);
    if (it == reduced_forms.end() || !(*it == reduced))
        throw precondition_error("FormClassGroup: form is not a reduced class representative");
    return static_cast<std::size_t>(it - reduced_forms.begin());
}

std::vector<std::vector<std::size_t>> FormClassGroup::composition_table() const {
    std::size_t h = reduced_forms.size();
    std::vector<std::vector<std::size_t>> table(h, std::vector<std::size_t>(h));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i; j < h; ++j) {
            std::size_t k = index_of(compose(reduced_forms[i], reduced_forms[j]));
            table[i][j] = k;
            table[j][i] = k;
        }
    return table;
}

FormClassGroup class_group(Int d) {
    if (d >= 0 || !is_discriminant(d))
        throw precondition_error("class_group: d must be a negative discriminant");
    FormClassGroup out;
    out.discriminant = d;
    Int bmax = isqrt((-d) / 3);
    for (Int b = mod_floor(d, 2); b <= bmax; b += 2) {
        Int m = (b * b - d) / 4;
        for (Int a = std::max<Int>(b, 1); Int128(a) * a <= m; ++a) {
            if (m % a != 0) continue;
            Int c = m / a;
            if (gcd3(a, b, c) != 1) continue;
            out.reduced_forms.push_back({a, b, c});
            if (b > 0 && b < a && a < c) out.reduced_forms.push_back({a, -b, c});
        }
    }
    std::sort(out.reduced_forms.begin(), out.reduced_forms.end());
    return out;
}

namespace {

// An SL2(Z) representative of the class of f whose leading coefficient is
// coprime to n (exists for primitive f; found by a widening search over
// primitive vectors).
BinaryForm with_leading_coprime_to(const BinaryForm& f, Int n) {
    if (std::gcd(f.a, n) == 1) return f;
    for (Int radius = 1; radius <= 64; ++radius) {
        for (Int x = -radius; x <= radius; ++x)
            for (Int y = -radius; y <= radius; ++y) {
                if (std::max(x < 0 ? -x : x, y < 0 ? -y : y) != radius) continue;
                if (std::gcd(x, y) != 1) continue;
                Int v = f.eval(x, y);
                if (v <= 0 || std::gcd(v, n) != 1) continue;
                auto [g, s, t] = xgcd(x, y);
                (void)g;
                Mat2 m;
                m << x, -t, y, s;  // det = xs + ty = 1
                return f.transformed(m);
            }
    }
    throw std::logic_error("compose: no coprime representative found");
}

}  // namespace

BinaryForm compose(const BinaryForm& f1, const BinaryForm& f2) {
    Int d = f1.discriminant();
    if (d != f2.discriminant())
        throw precondition_error("compose: discriminants differ");
    if (!f1.is_primitive() || !f2.is_primitive())
        throw precondition_error("compose: forms must be primitive");
    if (d >= 0 || f1.a <= 0 || f2.a <= 0)
        throw precondition_error("compose: forms must be positive definite");

    // United representatives: gcd(a1, a2) = 1 allows a common middle
    // coefficient B = b1 mod 2a1, B = b2 mod 2a2.
    BinaryForm g1 = f1;
    BinaryForm g2 = with_leading_coprime_to(f2, f1.a);
    Int twoA1 = 2 * g1.a, twoA2 = 2 * g2.a;
    Int b = crt(mod_floor(g1.b, twoA1), twoA1, mod_floor(g2.b, twoA2), twoA2);
    Int a = checked_mul(g1.a, g2.a);
    Int128 num = Int128(b) * b - d;
    if (num % (Int128(4) * a) != 0)
        throw std::logic_error("compose: united middle coefficient invalid");
    Int c = checked_cast(num / (Int128(4) * a));
    return reduce({a, b, c}).form;
}

Int two_torsion_count(Int d) {
    FormClassGroup grp = class_group(d);
    const BinaryForm principal = grp.principal();
    Int count = 0;
    for (const auto& f : grp.reduced_forms)
        if (compose(f, f) == principal) ++count;
    return count;
}

int omega(Int n, bool odd_only) {
    if (n < 0) n = -n;
    int count = 0;
    if (n % 2 == 0) {
        if (!odd_only) ++count;
        while (n % 2 == 0) n /= 2;
    }
    for (Int p = 3; Int128(p) * p <= n; p += 2) {
        if (n % p != 0) continue;
        ++count;
        while (n % p == 0) n /= p;
    }
    if (n > 1) ++count;
    return count;
}

surface::HalfPlanePoint cm_point(const BinaryForm& f) {
    if (f.a <= 0) throw precondition_error("cm_point: a must be positive");
    Int d = f.discriminant();
    if (d >= 0) throw precondition_error("cm_point: discriminant must be negative");
    if (!f.is_primitive()) throw precondition_error("cm_point: form must be primitive");
    return surface::HalfPlanePoint::exact(f.a, f.b, d);
}

Int discriminant_from_norm(Int D) {
    if (D < 1) throw precondition_error("discriminant_from_norm: D must be positive");
    return mod_floor(D, 4) == 3 ? -D : checked_mul(-4, D);
}

}  // namespace equilab::forms
