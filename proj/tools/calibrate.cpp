// Recomputes the empirical constants that the test suites pin: the
// representation-bound constant, the close-pair census constant, dyadic
// medians and discrepancy trends, the cusp-mass slope and the itinerary
// pattern count. Run after any change to the underlying enumeration code
// and compare against the frozen values before touching them.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "equilab/experiments.hpp"
#include "equilab/forms.hpp"
#include "equilab/io.hpp"
#include "equilab/reps.hpp"
#include "equilab/spheres.hpp"
#include "equilab/surface.hpp"

using namespace equilab;

namespace {

void representation_bound() {
    auto scan = experiments::representation_bound_scan(500, 0.3);
    std::printf("[rep-bound] forms=%lld max_primitive=%.6f at (%lld,%lld,%lld) "
                "max_all=%.6f at (%lld,%lld,%lld)\n",
                static_cast<long long>(scan.forms_checked), scan.max_ratio_primitive,
                static_cast<long long>(scan.argmax_primitive.a),
                static_cast<long long>(scan.argmax_primitive.b),
                static_cast<long long>(scan.argmax_primitive.c), scan.max_ratio_all,
                static_cast<long long>(scan.argmax_all.a),
                static_cast<long long>(scan.argmax_all.b),
                static_cast<long long>(scan.argmax_all.c));
}

void census_bound() {
    for (int m = 1; m <= 2; ++m) {
        double worst = 0.0;
        Int argmax = 0;
        Int pm2 = ipow(3, 2 * m);
        for (Int d = (pm2 + 3) / 4; d <= 10000; ++d) {
            if (!spheres::linnik_admissible(d, 3) || d % 3 == 0) continue;
            if (pm2 > 4 * d) continue;
            auto census = reps::basic_lemma_census(d, 3, m);
            double ratio = static_cast<double>(census.ordered_pairs) *
                           static_cast<double>(pm2) /
                           std::pow(static_cast<double>(d), 1.1);
            if (ratio > worst) { worst = ratio; argmax = d; }
        }
        std::printf("[census] p=3 m=%d max ordered_pairs * p^2m / d^1.1 = %.6f at d=%lld\n",
                    m, worst, static_cast<long long>(argmax));
    }
}

void volume_medians() {
    experiments::Condition cond;  // Legendre
    auto rows = experiments::volume_growth_scan(1 << 12, 1 << 17, cond);
    for (const auto& r : rows)
        if (r.statistic == "dyadic_median_exponent")
            std::printf("[volume] block 2^%d count=%lld median=%.6f\n",
                        static_cast<int>(std::log2(static_cast<double>(r.d))),
                        static_cast<long long>(r.count), r.value);
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v.size() % 2 ? v[v.size() / 2]
                        : 0.5 * (v[v.size() / 2 - 1] + v[v.size() / 2]);
}

// Full-population block medians, the protocol the acceptance suite pins.
// Sampled variants fluctuate more than the 2^{-1/4} per-block signal and
// are not reliably monotone.
void cap_trend() {
    for (int k = 10; k <= 16; ++k) {
        Int lo = Int(1) << k, hi = Int(1) << (k + 1);
        std::vector<Int> ds;
        for (Int d = lo; d < hi; ++d)
            if (spheres::linnik_admissible(d, 3)) ds.push_back(d);
        std::vector<double> discs(ds.size());
        experiments::parallel_for(ds.size(), 0, [&](std::size_t i) {
            auto set = spheres::enumerate_primitive_points(ds[i]);
            std::vector<Eigen::Vector3d> pts;
            pts.reserve(set.points.size());
            for (const auto& v : set.points) pts.push_back(spheres::project_to_sphere(v));
            discs[i] = experiments::cap_discrepancy(pts, 128, 0);
        });
        std::printf("[cap-trend] block 2^%d median=%.6f over %zu shells\n", k,
                    median_of(discs), discs.size());
    }
}

void hyp_trend() {
    for (int k = 10; k <= 16; ++k) {
        Int lo = Int(1) << k, hi = Int(1) << (k + 1);
        std::vector<Int> ds;
        for (Int ad = lo; ad < hi; ++ad)
            if (forms::is_discriminant(-ad) && mod_floor(Int(-ad), 3) == 1)
                ds.push_back(-ad);
        std::vector<double> discs(ds.size());
        experiments::parallel_for(ds.size(), 0, [&](std::size_t i) {
            discs[i] = experiments::hyperbolic_cell_discrepancy(
                experiments::cm_points(ds[i]), 2, 2, 3.0);
        });
        std::printf("[hyp-trend] block |d|~2^%d median=%.6f over %zu discriminants\n", k,
                    median_of(discs), discs.size());
    }
}

void cusp_slopes() {
    int used = 0;
    double sum = 0.0;
    for (Int ad = 4000; ad <= 30000 && used < 60; ++ad) {
        Int d = -ad;
        if (!forms::is_discriminant(d)) continue;
        auto pts = experiments::cm_points(d);
        if (pts.size() < 50) continue;
        double top = std::pow(static_cast<double>(ad), 0.25) / 2.0;
        auto slope = experiments::cusp_mass_slope(pts, 1.1, top, 12);
        if (!slope) continue;
        sum += *slope;
        ++used;
    }
    std::printf("[cusp-slope] mean=%.6f over %d discriminants with h >= 50\n",
                sum / used, used);
}

void pattern_count() {
    for (Int ad = 40000; ad <= 41000; ++ad) {
        Int d = -ad;
        if (!forms::is_discriminant(d)) continue;
        auto pts = experiments::cm_points(d);
        if (pts.size() < 100) continue;
        std::size_t n = surface::itinerary_patterns(pts, 3, 2.0, 10);
        std::printf("[patterns] d=%lld h=%zu patterns=%zu\n", static_cast<long long>(d),
                    pts.size(), n);
        return;
    }
}

}  // namespace

int main() {
    representation_bound();
    census_bound();
    volume_medians();
    cap_trend();
    hyp_trend();
    cusp_slopes();
    pattern_count();
    return 0;
}
