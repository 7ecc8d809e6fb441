#pragma once

#include <optional>

#include "equilab/numeric.hpp"

namespace equilab::arith {

// Finite-precision p-adic approximation: an integer residue mod p^k for an
// odd prime p. The 2-adic case is rejected throughout.
struct ResidueClass {
    Int residue;   // 0 <= residue < p^k
    Int prime;     // odd prime
    int precision; // k >= 1

    ResidueClass(Int residue, Int prime, int precision);
    Int modulus() const { return ipow(prime, precision); }

    friend bool operator==(const ResidueClass& a, const ResidueClass& b) {
        return a.residue == b.residue && a.prime == b.prime &&
               a.precision == b.precision;
    }
};

// Primality is certified by trial division for p <= 10^6; larger inputs are
// only screened against small factors and otherwise trusted.
bool is_odd_prime(Int p);

// Throws precondition_error unless is_odd_prime(p).
void require_odd_prime(Int p);

// (a|p) in {-1, 0, 1} via Euler's criterion.
int legendre_symbol(Int a, Int p);

// Smallest r with r^2 = a mod p^k, or nullopt when a is a non-residue mod p.
// Requires gcd(a, p) = 1; callers strip the valuation first.
std::optional<ResidueClass> hensel_sqrt(Int a, Int p, int precision);

// Largest e with p^e | n; nullopt encodes +infinity (n = 0).
std::optional<Int> padic_valuation(Int n, Int p);

}  // namespace equilab::arith
