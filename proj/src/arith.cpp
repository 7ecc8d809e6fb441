#include "equilab/arith.hpp"

#include <algorithm>

namespace equilab::arith {

ResidueClass::ResidueClass(Int residue, Int prime, int precision)
    : residue(residue), prime(prime), precision(precision) {
    require_odd_prime(prime);
    if (precision < 1)
        throw precondition_error("ResidueClass: precision must be >= 1");
    if (residue < 0 || residue >= modulus())
        throw precondition_error("ResidueClass: residue out of range");
}

bool is_odd_prime(Int p) {
    if (p < 3 || p % 2 == 0) return false;
    Int bound = p <= 1000000 ? isqrt(p) : Int(1000);
    for (Int q = 3; q <= bound; q += 2)
        if (p % q == 0) return false;
    return true;
}

void require_odd_prime(Int p) {
    if (!is_odd_prime(p))
        throw precondition_error("expected an odd prime, got " + std::to_string(p));
}

int legendre_symbol(Int a, Int p) {
    require_odd_prime(p);
    Int r = mod_floor(a, p);
    if (r == 0) return 0;
    Int e = powmod(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

namespace {

// Tonelli-Shanks square root mod an odd prime; requires (a|p) = 1.
Int sqrt_mod_prime(Int a, Int p) {
    a = mod_floor(a, p);
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    Int q = p - 1;
    int s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    Int z = 2;
    while (legendre_symbol(z, p) != -1) ++z;
    Int m = s;
    Int c = powmod(z, q, p);
    Int t = powmod(a, q, p);
    Int r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        Int t2 = t;
        Int i = 0;
        while (t2 != 1) { t2 = mulmod(t2, t2, p); ++i; }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

}  // namespace

std::optional<ResidueClass> hensel_sqrt(Int a, Int p, int precision) {
    require_odd_prime(p);
    if (precision < 1)
        throw precondition_error("hensel_sqrt: precision must be >= 1");
    if (mod_floor(a, p) == 0)
        throw precondition_error("hensel_sqrt: p divides a; strip the valuation first");
    if (legendre_symbol(a, p) != 1) return std::nullopt;

    Int r = sqrt_mod_prime(a, p);
    Int modulus = p;
    // Newton lifting doubles the precision each round; 2r is invertible
    // since p is odd and p does not divide a.
    for (int k = 1; k < precision;) {
        k = std::min(2 * k, precision);
        modulus = ipow(p, k);
        Int fa = mod_floor(Int128(r) * r % modulus - mod_floor(a, modulus), modulus);
        Int step = mulmod(fa, invmod(2 * r % modulus, modulus), modulus);
        r = mod_floor(r - step, modulus);
    }
    Int other = modulus - r;
    return ResidueClass(std::min(r, other), p, precision);
}

std::optional<Int> padic_valuation(Int n, Int p) {
    if (p < 2) throw precondition_error("padic_valuation: p must be prime");
    if (n == 0) return std::nullopt;
    if (n < 0) n = -n;
    Int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    return e;
}

}  // namespace equilab::arith
