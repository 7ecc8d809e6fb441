#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "equilab/forms.hpp"
#include "equilab/rational.hpp"
#include "equilab/reps.hpp"
#include "equilab/spheres.hpp"
#include "equilab/surface.hpp"

namespace equilab::experiments {

// One output row of a scan; reproducible from (statistic, parameters, d).
struct ScanRow {
    Int d = 0;
    Int count = 0;
    std::string statistic;
    double value = 0.0;
    std::optional<Int> p;
    std::optional<int> m;
    std::optional<Rational> H;
    std::optional<std::uint64_t> seed;
};

// Admissibility filter for scans.
struct Condition {
    enum Kind { Legendre, Linnik } kind = Legendre;
    Int p = 3;  // used by Linnik

    bool admits(Int d) const {
        return kind == Legendre ? spheres::legendre_admissible(d)
                                : spheres::linnik_admissible(d, p);
    }
};

// |empirical fraction - normalized area| for the single cap {v: v.center > t}.
double cap_deviation(const std::vector<Eigen::Vector3d>& points,
                     const Eigen::Vector3d& center, double t);

// Max of cap_deviation over seeded random caps (uniform center and height).
double cap_discrepancy(const std::vector<Eigen::Vector3d>& points, int n_caps,
                       std::uint64_t seed);

// Averages of the real spherical harmonics up to degree lmax (lmax <= 8).
// averages[l][m + l] corresponds to Y_{l,m}.
struct WeylSums {
    int lmax;
    std::vector<std::vector<double>> averages;

    double max_abs_of_degree(int l) const;
};

WeylSums weyl_harmonic_sums(const std::vector<Eigen::Vector3d>& points, int lmax);

// Real spherical harmonic Y_{l,m} at a unit vector.
double real_spherical_harmonic(int l, int m, const Eigen::Vector3d& v);

// Max over rectangular cells of the truncated fundamental domain of
// |empirical mass - hyperbolic mass|, both normalized to probability on the
// full domain (total hyperbolic mass pi/3). Cells: nx uniform slices in x,
// ny geometric slices in y from sqrt(3)/2 to y_max. Throws on unreduced
// input.
double hyperbolic_cell_discrepancy(const std::vector<surface::HalfPlanePoint>& points,
                                   int nx, int ny, double y_max);

// Normalized hyperbolic mass of the fundamental domain above y_max (the
// part the grid truncates away).
double truncated_mass_fraction(double y_max);

// Fraction of points with height >= H; exact comparison on exact points.
double cusp_mass(const std::vector<surface::HalfPlanePoint>& points, const Rational& H);

// CM points of every reduced primitive form of discriminant d (reduced by
// construction).
std::vector<surface::HalfPlanePoint> cm_points(Int d);

// Least-squares slope of log(cusp_mass) against log(H) over a geometric
// grid of thresholds in [h_lo, h_hi]; thresholds with empty mass are
// skipped. Returns nullopt when fewer than two usable grid points remain.
std::optional<double> cusp_mass_slope(const std::vector<surface::HalfPlanePoint>& points,
                                      double h_lo, double h_hi, int grid);

// (d, |I_d|, log|I_d|/log d) for admissible d in [dmin, dmax], plus one
// appended dyadic_median_exponent row per dyadic block.
std::vector<ScanRow> volume_growth_scan(Int dmin, Int dmax, const Condition& cond,
                                        int jobs = 0);

// (D, orbit classes of I_D, h_{d(D)}, classes/h) for Legendre-admissible D,
// plus one appended ratio_count histogram row per distinct ratio.
std::vector<ScanRow> embedding_class_ratio_scan(Int Dmin, Int Dmax, int jobs = 0);

// Census rows (ordered pairs and classes) over admissible d with p not
// dividing d.
std::vector<ScanRow> census_scan(Int dmin, Int dmax, Int p, int m, int jobs = 0);

// Cusp-mass rows over negative discriminants d in [dmin, dmax].
std::vector<ScanRow> cusp_scan(Int dmin, Int dmax, const Rational& H, int jobs = 0);

// Deterministic parallel map over an index range: results are merged in
// index order regardless of the worker count (0 = hardware concurrency).
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

// Exhaustive orbit counts of embeddings of binary forms into the sum of
// three squares, over all definite forms with coefficients bounded by
// coeff_limit. Counts SO_Q(Z)-orbits of pairs grouped by the stabilizer of
// a canonical first vector, which is far cheaper than per-form pair loops.
// ratio = orbits / (f * max(|a|,|b|,|c|)^exponent), f^2 the largest square
// dividing gcd(a, b, c).
struct RepresentationBoundScan {
    double max_ratio_primitive = 0.0;
    forms::BinaryForm argmax_primitive{1, 0, 1};
    double max_ratio_all = 0.0;
    forms::BinaryForm argmax_all{1, 0, 1};
    Int forms_checked = 0;
};

RepresentationBoundScan representation_bound_scan(Int coeff_limit, double exponent,
                                                  int jobs = 0);

// Orbit count for one form against the sum of three squares, computed by the
// same stabilizer route (used to cross-check count_representations).
Int sum_of_squares_orbit_count(const forms::BinaryForm& q);

}  // namespace equilab::experiments
