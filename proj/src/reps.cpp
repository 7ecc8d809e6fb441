#include "equilab/reps.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <unordered_map>

#include "equilab/arith.hpp"

namespace equilab::reps {

TernaryForm::TernaryForm(const Mat3& doubled_gram) : gram2_(doubled_gram) {
    if (gram2_ != gram2_.transpose().eval())
        throw precondition_error("TernaryForm: Gram matrix must be symmetric");
    for (int i = 0; i < 3; ++i)
        if (gram2_(i, i) % 2 != 0)
            throw precondition_error("TernaryForm: diagonal of 2G must be even");
}

TernaryForm TernaryForm::diagonal(Int a, Int b, Int c) {
    Mat3 g = Mat3::Zero();
    g(0, 0) = 2 * a;
    g(1, 1) = 2 * b;
    g(2, 2) = 2 * c;
    return TernaryForm(g);
}

bool TernaryForm::positive_definite() const {
    Int m1 = gram2_(0, 0);
    Int128 m2 = Int128(gram2_(0, 0)) * gram2_(1, 1) - Int128(gram2_(0, 1)) * gram2_(1, 0);
    Int128 m3 = Int128(gram2_(0, 0)) *
                    (Int128(gram2_(1, 1)) * gram2_(2, 2) - Int128(gram2_(1, 2)) * gram2_(2, 1)) -
                Int128(gram2_(0, 1)) *
                    (Int128(gram2_(1, 0)) * gram2_(2, 2) - Int128(gram2_(1, 2)) * gram2_(2, 0)) +
                Int128(gram2_(0, 2)) *
                    (Int128(gram2_(1, 0)) * gram2_(2, 1) - Int128(gram2_(1, 1)) * gram2_(2, 0));
    return m1 > 0 && m2 > 0 && m3 > 0;
}

Int TernaryForm::value(const Vec3& x) const {
    Int128 s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += Int128(gram2_(i, j)) * x[i] * x[j];
    return checked_cast(s / 2);
}

Int TernaryForm::doubled_bilinear(const Vec3& x, const Vec3& y) const {
    Int128 s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += Int128(gram2_(i, j)) * x[i] * y[j];
    return checked_cast(s);
}

const std::vector<Vec3>& TernaryForm::vectors_of_value(Int n) const {
    auto it = shells_.find(n);
    if (it != shells_.end()) return it->second;
    std::vector<Vec3> shell;
    if (n > 0 && positive_definite()) {
        // Coordinate bounds x_i^2 <= n (G^{-1})_{ii} from the dual form.
        Eigen::Matrix3d g = gram2_.cast<double>() / 2.0;
        Eigen::Matrix3d inv = g.inverse();
        std::array<Int, 3> bound;
        for (int i = 0; i < 3; ++i)
            bound[i] = static_cast<Int>(std::floor(
                           std::sqrt(std::max(0.0, static_cast<double>(n) * inv(i, i))) +
                           1e-9)) + 1;
        Vec3 v;
        for (v[0] = -bound[0]; v[0] <= bound[0]; ++v[0])
            for (v[1] = -bound[1]; v[1] <= bound[1]; ++v[1])
                for (v[2] = -bound[2]; v[2] <= bound[2]; ++v[2])
                    if (value(v) == n) shell.push_back(v);
        std::sort(shell.begin(), shell.end(), spheres::lex_less);
    } else if (n == 0) {
        // Only the zero vector for definite forms; callers never need it.
    }
    return shells_.emplace(n, std::move(shell)).first->second;
}

std::vector<Mat3> integral_automorphisms(const TernaryForm& q) {
    if (!q.positive_definite())
        throw precondition_error("integral_automorphisms: form must be positive definite");
    const Mat3& g2 = q.doubled_gram();
    std::array<const std::vector<Vec3>*, 3> columns;
    for (int i = 0; i < 3; ++i) columns[i] = &q.vectors_of_value(g2(i, i) / 2);

    std::vector<Mat3> out;
    for (const Vec3& c0 : *columns[0])
        for (const Vec3& c1 : *columns[1]) {
            if (q.doubled_bilinear(c0, c1) != g2(0, 1)) continue;
            for (const Vec3& c2 : *columns[2]) {
                if (q.doubled_bilinear(c0, c2) != g2(0, 2)) continue;
                if (q.doubled_bilinear(c1, c2) != g2(1, 2)) continue;
                Mat3 t;
                t.col(0) = c0;
                t.col(1) = c1;
                t.col(2) = c2;
                Int det = t(0, 0) * (t(1, 1) * t(2, 2) - t(1, 2) * t(2, 1)) -
                          t(0, 1) * (t(1, 0) * t(2, 2) - t(1, 2) * t(2, 0)) +
                          t(0, 2) * (t(1, 0) * t(2, 1) - t(1, 1) * t(2, 0));
                if (det == 1) out.push_back(t);
            }
        }
    return out;
}

namespace {

using Pair = std::array<Int, 6>;

Pair canonical_pair(const std::vector<Mat3>& group, const Vec3& u, const Vec3& w) {
    Pair best{};
    bool first = true;
    for (const Mat3& g : group) {
        Vec3 gu = g * u, gw = g * w;
        Pair cand = {gu[0], gu[1], gu[2], gw[0], gw[1], gw[2]};
        if (first || cand < best) { best = cand; first = false; }
    }
    return best;
}

}  // namespace

RepresentationCount count_representations(const TernaryForm& Q, const forms::BinaryForm& q) {
    if (!Q.positive_definite())
        throw precondition_error("count_representations: Q must be positive definite");
    if (q.discriminant() >= 0)
        throw precondition_error("count_representations: q must be definite and nondegenerate");
    if (q.a <= 0 || q.c <= 0) return {0, 0};

    const auto& us = Q.vectors_of_value(q.a);
    const auto& ws = Q.vectors_of_value(q.c);
    if (us.empty() || ws.empty()) return {0, 0};

    auto autos = integral_automorphisms(Q);
    Int embeddings = 0;
    std::vector<Pair> reps;
    for (const Vec3& u : us)
        for (const Vec3& w : ws) {
            if (Q.doubled_bilinear(u, w) != q.b) continue;
            ++embeddings;
            reps.push_back(canonical_pair(autos, u, w));
        }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return {embeddings, static_cast<Int>(reps.size())};
}

Int divisor_count(Int n) {
    if (n < 1) throw precondition_error("divisor_count: n must be positive");
    Int count = 1;
    for (Int p = 2; Int128(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        Int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        count *= e + 1;
    }
    if (n > 1) count *= 2;
    return count;
}

PairCensus basic_lemma_census(Int d, Int p, int m) {
    return basic_lemma_census(spheres::enumerate_primitive_points(d), p, m);
}

PairCensus basic_lemma_census(const spheres::SpherePointSet& points, Int p, int m) {
    arith::require_odd_prime(p);
    if (m < 1) throw precondition_error("basic_lemma_census: m must be >= 1");
    Int d = points.d;
    if (mod_floor(d, p) == 0)
        throw precondition_error("basic_lemma_census: p must not divide d");

    Int q = ipow(p, m);
    Int q2 = checked_mul(q, q);
    if (q >= (Int(1) << 21))
        throw precondition_error("basic_lemma_census: modulus p^m too large");
    std::unordered_map<std::uint64_t, std::vector<const spheres::LatticePoint3*>> buckets;
    for (const auto& pt : points.points) {
        std::uint64_t key = static_cast<std::uint64_t>(mod_floor(pt.v.x(), q));
        key = key * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(mod_floor(pt.v.y(), q));
        key = key * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(mod_floor(pt.v.z(), q));
        buckets[key].push_back(&pt);
    }

    const auto& group = spheres::rotation_group();
    PairCensus census{d, p, m, 0, 0};
    std::vector<Pair> reps;
    for (const auto& [key, bucket] : buckets) {
        std::size_t s = bucket.size();
        if (s < 2) continue;
        census.ordered_pairs += static_cast<Int>(s * (s - 1));
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) {
                if (i == j) continue;
                const Vec3& w1 = bucket[i]->v;
                const Vec3& w2 = bucket[j]->v;
                // q(x, y) = Nr(x w1 + y w2) = d x^2 + e xy + d y^2.
                Int e = checked_cast(Int128(2) * (Int128(w1.x()) * w2.x() +
                                                  Int128(w1.y()) * w2.y() +
                                                  Int128(w1.z()) * w2.z()));
                Int gap = 2 * d - e;  // = Nr(w1 - w2)
                if (e == 2 * d || e == -2 * d)
                    throw std::logic_error("basic_lemma_census: degenerate pair form");
                if (gap < -4 * d || gap > 4 * d)
                    throw std::logic_error("basic_lemma_census: middle coefficient out of range");
                if (mod_floor(gap, q2) != 0)
                    throw std::logic_error("basic_lemma_census: p^{2m} does not divide 2d - e");
                reps.push_back(canonical_pair(group, w1, w2));
            }
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    census.classes = static_cast<Int>(reps.size());
    return census;
}

}  // namespace equilab::reps
