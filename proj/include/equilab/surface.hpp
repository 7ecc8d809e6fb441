#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "equilab/rational.hpp"

namespace equilab::surface {

// Exact CM representation (-b + sqrt(|d|) i) / (2a) with a > 0, d < 0 a
// discriminant and 4a | b^2 - d. Not necessarily a primitive form.
struct CmData {
    Int a, b, d;

    Int c() const { return (b * b - d) / (4 * a); }

    friend bool operator==(const CmData& l, const CmData& r) {
        return l.a == r.a && l.b == r.b && l.d == r.d;
    }
};

// Point of the upper half-plane, carried exactly (CM data) when possible and
// as a floating complex number otherwise.
class HalfPlanePoint {
  public:
    static HalfPlanePoint exact(Int a, Int b, Int d);
    static HalfPlanePoint floating(double x, double y);

    bool is_exact() const { return cm_.has_value(); }
    const CmData& cm() const;

    double real() const;
    double imag() const;
    std::complex<double> value() const { return {real(), imag()}; }

  private:
    std::optional<CmData> cm_;
    std::complex<double> z_{0.0, 1.0};
};

// Word in the generators S: z -> -1/z and T^n: z -> z + n, stored in
// application order.
struct Step {
    enum Kind { S, T } kind;
    Int power;  // used by T only
};
using Word = std::vector<Step>;

HalfPlanePoint apply_step(const Step& s, const HalfPlanePoint& z);
HalfPlanePoint apply_word(const Word& w, const HalfPlanePoint& z);

struct ReduceResult {
    HalfPlanePoint point;
    Word word;
};

// Representative in the standard fundamental domain |Re| <= 1/2, |z| >= 1,
// with Re = -1/2 preferred on the vertical boundary and Re <= 0 on the arc.
// Exact inputs reduce by integer arithmetic on the underlying form data.
ReduceResult reduce_to_fundamental_domain(const HalfPlanePoint& z);

// sqrt(Im z') of the reduced representative: the lattice Z + z'Z has
// covolume Im z' and shortest vector 1, so this is covol^{1/2} / min.
double height(const HalfPlanePoint& z);

// Exact comparison height(z) >= H for an exact, already reduced point.
bool reduced_height_at_least(const CmData& reduced, const Rational& H);

// The p+1 lattice neighbours p z, z/p, (z+1)/p, ..., (z+p-1)/p, unreduced,
// in that order. p may be any prime, including 2.
std::vector<HalfPlanePoint> hecke_neighbors(const HalfPlanePoint& z, Int p);

// Above/below record of a walk with respect to a height threshold.
struct Itinerary {
    double threshold;
    std::vector<bool> above;      // above[i] <=> heights[i] >= threshold
    std::vector<double> heights;
};

// Seeded uniform non-backtracking walk on the reduced tree; the parent is
// recognized by reduced-representative comparison at tolerance 1e-9.
Itinerary nonbacktracking_walk(const HalfPlanePoint& z0, Int p, int steps,
                               std::uint64_t seed, double threshold);

// Number of distinct above/below patterns when every point is advanced N
// steps by the same deterministic rule (step n picks neighbour n mod (p+1)).
std::size_t itinerary_patterns(const std::vector<HalfPlanePoint>& points, Int p,
                               double threshold, int steps);

}  // namespace equilab::surface
