#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace equilab {

using Int = std::int64_t;
using Int128 = __int128;

// Thrown when a documented operation precondition is violated (maps to CLI
// exit code 2). Plain std::invalid_argument is reserved for malformed input
// such as unparsable flags.
class precondition_error : public std::domain_error {
  public:
    explicit precondition_error(const std::string& what)
        : std::domain_error(what) {}
};

// All arithmetic below is exact: intermediates go through 128 bits and
// anything that cannot be represented in 64 bits throws instead of wrapping.
inline Int checked_cast(Int128 v) {
    if (v > Int128(INT64_MAX) || v < Int128(INT64_MIN))
        throw std::overflow_error("equilab: 64-bit overflow");
    return static_cast<Int>(v);
}

inline Int checked_mul(Int a, Int b) { return checked_cast(Int128(a) * b); }
inline Int checked_add(Int a, Int b) { return checked_cast(Int128(a) + b); }

inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_floor(Int a, Int b) { return a - floor_div(a, b) * b; }

inline Int isqrt(Int n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative");
    if (n == 0) return 0;
    Int r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && Int128(r) * r > n) --r;
    while (Int128(r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square(Int n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = isqrt(n);
    if (root) *root = r;
    return r * r == n;
}

inline Int gcd3(Int a, Int b, Int c) {
    return std::gcd(std::gcd(a, b), c);
}

// ax + by = g, g = gcd(a, b) >= 0.
struct XgcdResult {
    Int g, x, y;
};

inline XgcdResult xgcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

inline Int mulmod(Int a, Int b, Int m) {
    Int128 p = Int128(mod_floor(a, m)) * mod_floor(b, m);
    return static_cast<Int>(p % m);
}

inline Int powmod(Int a, Int e, Int m) {
    if (e < 0) throw std::invalid_argument("powmod: negative exponent");
    Int base = mod_floor(a, m), acc = 1 % m;
    while (e > 0) {
        if (e & 1) acc = mulmod(acc, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return acc;
}

inline Int invmod(Int a, Int m) {
    auto [g, x, y] = xgcd(mod_floor(a, m), m);
    if (g != 1) throw precondition_error("invmod: argument not invertible");
    (void)y;
    return mod_floor(x, m);
}

// x = r1 mod m1, x = r2 mod m2; throws if incompatible.
inline Int crt(Int r1, Int m1, Int r2, Int m2) {
    auto [g, u, v] = xgcd(m1, m2);
    (void)v;
    if (mod_floor(r2 - r1, g) != 0)
        throw precondition_error("crt: incompatible congruences");
    Int m2g = m2 / g;
    Int lcm = checked_mul(m1, m2g);
    Int t = mulmod((r2 - r1) / g, mod_floor(u, m2g), m2g);
    return mod_floor(r1 + Int128(m1) * t % lcm, lcm);
}

inline Int ipow(Int base, int exp) {
    Int r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

}  // namespace equilab
