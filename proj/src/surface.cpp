#include "equilab/surface.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace equilab::surface {

namespace {

constexpr double kEps = 1e-12;
constexpr Int kExactLimit = Int(1) << 45;  // |d| guard for exact tree steps

bool is_discriminant_shape(Int d) {
    Int r = mod_floor(d, 4);
    return r == 0 || r == 1;
}

// Strip the common content g of (a, b, c): same point with d/g^2.
CmData canonical_cm(Int a, Int b, Int d) {
    Int c = (b * b - d) / (4 * a);
    Int g = gcd3(a, b < 0 ? -b : b, c < 0 ? -c : c);
    if (g > 1) { a /= g; b /= g; d /= g * g; }
    return {a, b, d};
}

}  // namespace

HalfPlanePoint HalfPlanePoint::exact(Int a, Int b, Int d) {
    if (a <= 0) throw precondition_error("HalfPlanePoint: a must be positive");
    if (d >= 0 || !is_discriminant_shape(d))
        throw precondition_error("HalfPlanePoint: d must be a negative discriminant");
    if (mod_floor(b * b - d, 4 * a) != 0)
        throw precondition_error("HalfPlanePoint: 4a must divide b^2 - d");
    HalfPlanePoint p;
    p.cm_ = CmData{a, b, d};
    p.z_ = {p.real(), p.imag()};
    return p;
}

HalfPlanePoint HalfPlanePoint::floating(double x, double y) {
    if (!(y > 0.0)) throw precondition_error("HalfPlanePoint: Im z must be positive");
    HalfPlanePoint p;
    p.z_ = {x, y};
    return p;
}

const CmData& HalfPlanePoint::cm() const {
    if (!cm_) throw precondition_error("HalfPlanePoint: not an exact point");
    return *cm_;
}

double HalfPlanePoint::real() const {
    if (cm_) return -static_cast<double>(cm_->b) / (2.0 * static_cast<double>(cm_->a));
    return z_.real();
}

double HalfPlanePoint::imag() const {
    if (cm_)
        return std::sqrt(static_cast<double>(-cm_->d)) / (2.0 * static_cast<double>(cm_->a));
    return z_.imag();
}

HalfPlanePoint apply_step(const Step& s, const HalfPlanePoint& z) {
    std::complex<double> v = z.value();
    if (s.kind == Step::S) {
        std::complex<double> w = -1.0 / v;
        return HalfPlanePoint::floating(w.real(), w.imag());
    }
    return HalfPlanePoint::floating(v.real() + static_cast<double>(s.power), v.imag());
}

HalfPlanePoint apply_word(const Word& w, const HalfPlanePoint& z) {
    HalfPlanePoint cur = z;
    for (const Step& s : w) cur = apply_step(s, cur);
    return cur;
}

namespace {

ReduceResult reduce_exact(const CmData& in) {
    Int a = in.a, b = in.b, d = in.d;
    Int c = in.c();
    Word word;
    for (;;) {
        // b -> b - 2aq realizes z -> z + q, i.e. the word step T^q.
        Int q = floor_div(b + a, 2 * a);
        if (b - 2 * a * q == -a) --q;  // prefer b = a, i.e. Re = -1/2
        if (q != 0) {
            b -= 2 * a * q;
            c = (b * b - d) / (4 * a);
            word.push_back({Step::T, q});
        }
        if (a > c || (a == c && b < 0)) {
            std::swap(a, c);
            b = -b;
            word.push_back({Step::S, 0});
            continue;
        }
        break;
    }
    return {HalfPlanePoint::exact(a, b, d), std::move(word)};
}

ReduceResult reduce_floating(std::complex<double> z) {
    Word word;
    for (int iter = 0; iter < 4096; ++iter) {
        // floor(x + 1/2) lands Re in [-1/2, 1/2), the preferred side.
        double n = std::floor(z.real() + 0.5);
        if (n != 0.0) {
            z -= n;
            word.push_back({Step::T, static_cast<Int>(-n)});
        }
        double r2 = std::norm(z);
        if (r2 < 1.0 - kEps) {
            z = -std::conj(z) / r2;
            word.push_back({Step::S, 0});
            continue;
        }
        if (std::abs(r2 - 1.0) <= kEps && z.real() > kEps) {
            // Arc boundary: prefer Re <= 0.
            z = -std::conj(z) / r2;
            word.push_back({Step::S, 0});
        }
        if (z.real() > 0.5 - kEps && std::abs(z.real() - 0.5) <= kEps) {
            z -= 1.0;
            word.push_back({Step::T, -1});
        }
        return {HalfPlanePoint::floating(z.real(), z.imag()), std::move(word)};
    }
    throw std::logic_error("reduce_to_fundamental_domain: did not converge");
}

}  // namespace

ReduceResult reduce_to_fundamental_domain(const HalfPlanePoint& z) {
    if (!(z.imag() > 0.0))
        throw precondition_error("reduce_to_fundamental_domain: Im z must be positive");
    if (z.is_exact()) return reduce_exact(z.cm());
    return reduce_floating(z.value());
}

double height(const HalfPlanePoint& z) {
    return std::sqrt(reduce_to_fundamental_domain(z).point.imag());
}

bool reduced_height_at_least(const CmData& reduced, const Rational& H) {
    if (H.num() <= 0) return true;
    // height >= H  <=>  sqrt(|d|)/(2a) >= H^2  <=>  |d| hd^4 >= 4 a^2 hn^4.
    Int128 hn = H.num(), hd = H.den();
    Int128 lhs = Int128(-reduced.d) * hd * hd * hd * hd;
    Int128 rhs = Int128(4) * reduced.a * reduced.a * hn * hn * hn * hn;
    return lhs >= rhs;
}

std::vector<HalfPlanePoint> hecke_neighbors(const HalfPlanePoint& z, Int p) {
    if (p < 2) throw precondition_error("hecke_neighbors: p must be prime");
    std::vector<HalfPlanePoint> out;
    out.reserve(static_cast<std::size_t>(p) + 1);
    if (z.is_exact()) {
        const CmData& cm = z.cm();
        if (-cm.d > kExactLimit / (p * p))
            throw std::overflow_error("hecke_neighbors: exact discriminant too large, use a floating point");
        // p z has data (a, p b, p^2 d); (z + j)/p has (a p^2, p(b - 2aj), p^2 d).
        CmData up = canonical_cm(cm.a, p * cm.b, p * p * cm.d);
        out.push_back(HalfPlanePoint::exact(up.a, up.b, up.d));
        for (Int j = 0; j < p; ++j) {
            CmData dn = canonical_cm(cm.a * p * p, p * (cm.b - 2 * cm.a * j), p * p * cm.d);
            out.push_back(HalfPlanePoint::exact(dn.a, dn.b, dn.d));
        }
        return out;
    }
    std::complex<double> v = z.value();
    double pd = static_cast<double>(p);
    out.push_back(HalfPlanePoint::floating(pd * v.real(), pd * v.imag()));
    for (Int j = 0; j < p; ++j)
        out.push_back(HalfPlanePoint::floating((v.real() + static_cast<double>(j)) / pd,
                                               v.imag() / pd));
    return out;
}

namespace {

bool close(const std::complex<double>& a, const std::complex<double>& b) {
    return std::abs(a - b) <= 1e-9;
}

}  // namespace

Itinerary nonbacktracking_walk(const HalfPlanePoint& z0, Int p, int steps,
                               std::uint64_t seed, double threshold) {
    if (steps < 0) throw precondition_error("nonbacktracking_walk: negative step count");
    std::mt19937_64 rng(seed);
    Itinerary it;
    it.threshold = threshold;

    std::complex<double> cur = reduce_to_fundamental_domain(z0).point.value();
    std::optional<std::complex<double>> parent;
    auto record = [&](const std::complex<double>& z) {
        double h = std::sqrt(z.imag());
        it.heights.push_back(h);
        it.above.push_back(h >= threshold);
    };
    record(cur);

    for (int n = 0; n < steps; ++n) {
        auto raw = hecke_neighbors(HalfPlanePoint::floating(cur.real(), cur.imag()), p);
        std::vector<std::complex<double>> reduced;
        reduced.reserve(raw.size());
        for (const auto& w : raw)
            reduced.push_back(reduce_to_fundamental_domain(w).point.value());
        std::vector<std::complex<double>> candidates;
        bool excluded = false;
        for (const auto& w : reduced) {
            if (!excluded && parent && close(w, *parent)) { excluded = true; continue; }
            candidates.push_back(w);
        }
        std::size_t pick = static_cast<std::size_t>(rng() % candidates.size());
        parent = cur;
        cur = candidates[pick];
        record(cur);
    }
    return it;
}

std::size_t itinerary_patterns(const std::vector<HalfPlanePoint>& points, Int p,
                               double threshold, int steps) {
    if (steps < 0) throw precondition_error("itinerary_patterns: negative step count");
    std::set<std::vector<bool>> patterns;
    for (const auto& z0 : points) {
        std::complex<double> cur = reduce_to_fundamental_domain(z0).point.value();
        std::vector<bool> pattern;
        pattern.reserve(static_cast<std::size_t>(steps) + 1);
        pattern.push_back(std::sqrt(cur.imag()) >= threshold);
        for (int n = 0; n < steps; ++n) {
            auto raw = hecke_neighbors(HalfPlanePoint::floating(cur.real(), cur.imag()), p);
            const auto& next = raw[static_cast<std::size_t>(n % (p + 1))];
            cur = reduce_to_fundamental_domain(next).point.value();
            pattern.push_back(std::sqrt(cur.imag()) >= threshold);
        }
        patterns.insert(std::move(pattern));
    }
    return patterns.size();
}

}  // namespace equilab::surface
