#include "equilab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <random>
#include <thread>

namespace equilab::experiments {

namespace {

constexpr double kPi = 3.14159265358979323846;

double unit_double(std::mt19937_64& rng) {
    // 53 uniform bits; avoids distribution objects for bit reproducibility.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Eigen::Vector3d random_unit_vector(std::mt19937_64& rng) {
    double z = 1.0 - 2.0 * unit_double(rng);
    double phi = 2.0 * kPi * unit_double(rng);
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

}  // namespace

double cap_deviation(const std::vector<Eigen::Vector3d>& points,
                     const Eigen::Vector3d& center, double t) {
    if (points.empty()) throw precondition_error("cap_deviation: empty point set");
    std::size_t inside = 0;
    for (const auto& v : points)
        if (center.dot(v) > t) ++inside;
    double area = (1.0 - t) / 2.0;
    return std::abs(static_cast<double>(inside) / static_cast<double>(points.size()) - area);
}

double cap_discrepancy(const std::vector<Eigen::Vector3d>& points, int n_caps,
                       std::uint64_t seed) {
    if (points.empty()) throw precondition_error("cap_discrepancy: empty point set");
    if (n_caps < 1) throw precondition_error("cap_discrepancy: need at least one cap");
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int i = 0; i < n_caps; ++i) {
        Eigen::Vector3d center = random_unit_vector(rng);
        double t = 1.0 - 2.0 * unit_double(rng);  // cap {v : v . center > t}
        worst = std::max(worst, cap_deviation(points, center, t));
    }
    return worst;
}

namespace {

// Associated Legendre P_l^m(x) without Condon-Shortley phase.
double assoc_legendre(int l, int m, double x) {
    double somx2 = std::sqrt(std::max(0.0, 1.0 - x * x));
    double pmm = 1.0;
    for (int i = 1; i <= m; ++i) pmm *= (2.0 * i - 1.0) * somx2;
    if (l == m) return pmm;
    double pmmp1 = x * (2.0 * m + 1.0) * pmm;
    if (l == m + 1) return pmmp1;
    double pll = 0.0;
    for (int ll = m + 2; ll <= l; ++ll) {
        pll = ((2.0 * ll - 1.0) * x * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
        pmm = pmmp1;
        pmmp1 = pll;
    }
    return pll;
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

double real_spherical_harmonic(int l, int m, const Eigen::Vector3d& v) {
    if (l < 0 || std::abs(m) > l)
        throw precondition_error("real_spherical_harmonic: invalid (l, m)");
    int am = std::abs(m);
    double ct = v.z();
    double k = std::sqrt((2.0 * l + 1.0) / (4.0 * kPi) *
                         factorial(l - am) / factorial(l + am));
    double p = assoc_legendre(l, am, ct);
    if (m == 0) return k * p;
    double phi = std::atan2(v.y(), v.x());
    double sqrt2 = std::sqrt(2.0);
    return m > 0 ? sqrt2 * k * p * std::cos(am * phi)
                 : sqrt2 * k * p * std::sin(am * phi);
}

WeylSums weyl_harmonic_sums(const std::vector<Eigen::Vector3d>& points, int lmax) {
    if (lmax < 0 || lmax > 8)
        throw precondition_error("weyl_harmonic_sums: lmax must be in [0, 8]");
    if (points.empty()) throw precondition_error("weyl_harmonic_sums: empty point set");
    WeylSums out;
    out.lmax = lmax;
    out.averages.resize(lmax + 1);
    for (int l = 0; l <= lmax; ++l) {
        out.averages[l].assign(2 * l + 1, 0.0);
        for (int m = -l; m <= l; ++m) {
            double s = 0.0;
            for (const auto& v : points) s += real_spherical_harmonic(l, m, v);
            out.averages[l][m + l] = s / static_cast<double>(points.size());
        }
    }
    return out;
}

double WeylSums::max_abs_of_degree(int l) const {
    double worst = 0.0;
    for (double v : averages.at(l)) worst = std::max(worst, std::abs(v));
    return worst;
}

namespace {

// Hyperbolic area (dx dy / y^2) of [x1,x2] x [y1,y2] intersected with the
// fundamental domain; the circular floor is integrated by Simpson's rule.
double cell_mass(double x1, double x2, double y1, double y2) {
    auto column = [&](double x) {
        double floor_y = std::max(y1, std::sqrt(std::max(0.0, 1.0 - x * x)));
        if (floor_y >= y2) return 0.0;
        return 1.0 / floor_y - 1.0 / y2;
    };
    if (y1 >= 1.0) return (x2 - x1) * (1.0 / y1 - 1.0 / y2);
    const int panels = 256;
    double h = (x2 - x1) / panels;
    double s = column(x1) + column(x2);
    for (int i = 1; i < panels; ++i)
        s += column(x1 + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace

double hyperbolic_cell_discrepancy(const std::vector<surface::HalfPlanePoint>& points,
                                   int nx, int ny, double y_max) {
    if (points.empty())
        throw precondition_error("hyperbolic_cell_discrepancy: empty point set");
    if (nx < 1 || ny < 1)
        throw precondition_error("hyperbolic_cell_discrepancy: bad grid");
    const double y0 = std::sqrt(3.0) / 2.0;
    if (!(y_max > y0))
        throw precondition_error("hyperbolic_cell_discrepancy: y_max below the domain floor");
    for (const auto& z : points) {
        double x = z.real(), y = z.imag();
        if (std::abs(x) > 0.5 + 1e-9 || x * x + y * y < 1.0 - 1e-9)
            throw precondition_error("hyperbolic_cell_discrepancy: input must be reduced");
    }

    std::vector<double> ye(ny + 1);
    double ratio = std::pow(y_max / y0, 1.0 / ny);
    ye[0] = y0;
    for (int i = 1; i <= ny; ++i) ye[i] = ye[i - 1] * ratio;
    ye[ny] = y_max;

    double n = static_cast<double>(points.size());
    double worst = 0.0;
    for (int ix = 0; ix < nx; ++ix) {
        double x1 = -0.5 + static_cast<double>(ix) / nx;
        double x2 = -0.5 + static_cast<double>(ix + 1) / nx;
        for (int iy = 0; iy < ny; ++iy) {
            double mass = cell_mass(x1, x2, ye[iy], ye[iy + 1]) / (kPi / 3.0);
            std::size_t inside = 0;
            for (const auto& z : points) {
                double x = z.real(), y = z.imag();
                if (x >= x1 && x < x2 && y >= ye[iy] && y < ye[iy + 1]) ++inside;
            }
            worst = std::max(worst, std::abs(static_cast<double>(inside) / n - mass));
        }
    }
    return worst;
}

double truncated_mass_fraction(double y_max) {
    if (!(y_max >= 1.0))
        throw precondition_error("truncated_mass_fraction: y_max must be >= 1");
    return (1.0 / y_max) / (kPi / 3.0);
}

double cusp_mass(const std::vector<surface::HalfPlanePoint>& points, const Rational& H) {
    if (points.empty()) throw precondition_error("cusp_mass: empty point set");
    std::size_t high = 0;
    double hd = H.to_double();
    for (const auto& z : points) {
        if (z.is_exact()) {
            auto reduced = surface::reduce_to_fundamental_domain(z).point;
            if (surface::reduced_height_at_least(reduced.cm(), H)) ++high;
        } else if (surface::height(z) >= hd) {
            ++high;
        }
    }
    return static_cast<double>(high) / static_cast<double>(points.size());
}

std::vector<surface::HalfPlanePoint> cm_points(Int d) {
    auto grp = forms::class_group(d);
    std::vector<surface::HalfPlanePoint> out;
    out.reserve(grp.reduced_forms.size());
    for (const auto& f : grp.reduced_forms) out.push_back(forms::cm_point(f));
    return out;
}

std::optional<double> cusp_mass_slope(const std::vector<surface::HalfPlanePoint>& points,
                                      double h_lo, double h_hi, int grid) {
    if (grid < 2 || !(h_hi > h_lo) || !(h_lo > 0))
        throw precondition_error("cusp_mass_slope: bad threshold grid");
    std::vector<double> xs, ys;
    double step = std::pow(h_hi / h_lo, 1.0 / (grid - 1));
    double h = h_lo;
    for (int i = 0; i < grid; ++i, h *= step) {
        // Rational threshold with denominator 4096 keeps comparisons exact.
        Rational hr(static_cast<Int>(std::llround(h * 4096.0)), 4096);
        double mass = cusp_mass(points, hr);
        if (mass > 0.0) {
            xs.push_back(std::log(hr.to_double()));
            ys.push_back(std::log(mass));
        }
    }
    if (xs.size() < 2) return std::nullopt;
    double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0.0) return std::nullopt;
    return (n * sxy - sx * sy) / denom;
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs)
                                : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::vector<ScanRow> volume_growth_scan(Int dmin, Int dmax, const Condition& cond, int jobs) {
    if (dmin < 1 || dmax < dmin)
        throw precondition_error("volume_growth_scan: empty range");
    (void)jobs;  // the sieve is single-pass and already fast
    std::vector<Int> counts = spheres::primitive_count_table(dmax);
    std::vector<ScanRow> rows;
    std::map<int, std::vector<double>> blocks;
    for (Int d = dmin; d <= dmax; ++d) {
        if (!cond.admits(d)) continue;
        ScanRow row;
        row.d = d;
        row.count = counts[d];
        row.statistic = "point_count";
        row.value = static_cast<double>(counts[d]);
        if (cond.kind == Condition::Linnik) row.p = cond.p;
        rows.push_back(row);
        row.statistic = "volume_exponent";
        row.value = d > 1 ? std::log(static_cast<double>(counts[d])) /
                                std::log(static_cast<double>(d))
                          : 0.0;
        rows.push_back(row);
        if (d > 1) blocks[static_cast<int>(std::floor(std::log2(static_cast<double>(d))))]
            .push_back(row.value);
    }
    for (const auto& [k, vals] : blocks) {
        ScanRow row;
        row.d = Int(1) << k;
        row.count = static_cast<Int>(vals.size());
        row.statistic = "dyadic_median_exponent";
        row.value = median(vals);
        if (cond.kind == Condition::Linnik) row.p = cond.p;
        rows.push_back(row);
    }
    return rows;
}

std::vector<ScanRow> embedding_class_ratio_scan(Int Dmin, Int Dmax, int jobs) {
    if (Dmin < 1 || Dmax < Dmin)
        throw precondition_error("embedding_class_ratio_scan: empty range");
    std::vector<Int> admissible;
    for (Int D = Dmin; D <= Dmax; ++D)
        if (spheres::legendre_admissible(D)) admissible.push_back(D);

    struct Entry {
        Int D, classes, h;
    };
    std::vector<Entry> entries(admissible.size());
    parallel_for(admissible.size(), jobs, [&](std::size_t i) {
        Int D = admissible[i];
        auto pts = spheres::enumerate_primitive_points(D);
        Int classes = static_cast<Int>(spheres::so3z_orbit_classes(pts).size());
        Int h = static_cast<Int>(forms::class_group(forms::discriminant_from_norm(D))
                                     .class_number());
        entries[i] = {D, classes, h};
    });

    std::vector<ScanRow> rows;
    std::map<std::pair<Int, Int>, Int> histogram;  // reduced fraction -> count
    for (const auto& e : entries) {
        ScanRow row;
        row.d = e.D;
        row.count = e.classes;
        row.statistic = "so3z_classes";
        row.value = static_cast<double>(e.classes);
        rows.push_back(row);
        row.statistic = "class_number";
        row.value = static_cast<double>(e.h);
        rows.push_back(row);
        row.statistic = "embedding_class_ratio";
        row.value = static_cast<double>(e.classes) / static_cast<double>(e.h);
        rows.push_back(row);
        Int g = std::gcd(e.classes, e.h);
        ++histogram[{e.classes / g, e.h / g}];
    }
    for (const auto& [ratio, count] : histogram) {
        ScanRow row;
        row.d = 0;
        row.count = count;
        row.statistic = "ratio_count:" + std::to_string(ratio.first) + "/" +
                        std::to_string(ratio.second);
        row.value = static_cast<double>(count);
        rows.push_back(row);
    }
    return rows;
}

std::vector<ScanRow> census_scan(Int dmin, Int dmax, Int p, int m, int jobs) {
    if (dmin < 1 || dmax < dmin) throw precondition_error("census_scan: empty range");
    std::vector<Int> ds;
    for (Int d = dmin; d <= dmax; ++d)
        if (spheres::linnik_admissible(d, p) && mod_floor(d, p) != 0) ds.push_back(d);
    std::vector<reps::PairCensus> censuses(ds.size());
    parallel_for(ds.size(), jobs, [&](std::size_t i) {
        censuses[i] = reps::basic_lemma_census(ds[i], p, m);
    });
    std::vector<ScanRow> rows;
    for (const auto& c : censuses) {
        ScanRow row;
        row.d = c.d;
        row.count = c.ordered_pairs;
        row.p = p;
        row.m = m;
        row.statistic = "census_ordered_pairs";
        row.value = static_cast<double>(c.ordered_pairs);
        rows.push_back(row);
        row.statistic = "census_classes";
        row.value = static_cast<double>(c.classes);
        rows.push_back(row);
    }
    return rows;
}

namespace {

using spheres::Mat3;
using spheres::Vec3;

struct OrbitRep {
    Vec3 u;
    std::vector<Mat3> stabilizer;  // identity excluded
};

// Canonical orbit representatives (lex-minimal) of all nonzero vectors of
// norm <= limit under the 24 integral rotations, grouped by norm.
std::vector<std::vector<OrbitRep>> orbit_reps_by_norm(Int limit) {
    const auto& group = spheres::rotation_group();
    std::vector<std::vector<OrbitRep>> reps(limit + 1);
    Int r = isqrt(limit);
    Vec3 v;
    for (v[0] = -r; v[0] <= r; ++v[0])
        for (v[1] = -r; v[1] <= r; ++v[1])
            for (v[2] = -r; v[2] <= r; ++v[2]) {
                Int n = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
                if (n == 0 || n > limit) continue;
                bool minimal = true;
                for (const Mat3& g : group) {
                    Vec3 img = g * v;
                    if (spheres::lex_less(img, v)) { minimal = false; break; }
                }
                if (!minimal) continue;
                OrbitRep rep;
                rep.u = v;
                for (const Mat3& g : group) {
                    if (g == Mat3::Identity()) continue;
                    if ((g * v) == v) rep.stabilizer.push_back(g);
                }
                reps[n].push_back(std::move(rep));
            }
    return reps;
}

std::vector<std::vector<Vec3>> shells_by_norm(Int limit) {
    std::vector<std::vector<Vec3>> shells(limit + 1);
    Int r = isqrt(limit);
    Vec3 v;
    for (v[0] = -r; v[0] <= r; ++v[0])
        for (v[1] = -r; v[1] <= r; ++v[1])
            for (v[2] = -r; v[2] <= r; ++v[2]) {
                Int n = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
                if (n >= 1 && n <= limit) shells[n].push_back(v);
            }
    return shells;
}

Int square_part(Int n) {
    Int f = 1;
    for (Int k = 2; k * k <= n; ++k)
        while (n % (k * k) == 0) { n /= k * k; f *= k; }
    return f;
}

// Orbits of pairs (u, w) with |u|^2 = a: group by the orbit of u, then count
// w modulo the stabilizer of the canonical representative.
template <typename Visit>
void scan_pairs_for_norm(const std::vector<OrbitRep>& reps_a,
                         const std::vector<std::vector<Vec3>>& shells, Int limit,
                         Visit&& visit) {
    // grid[(c, b + 2*limit)] accumulates orbit counts for (a, b, c).
    std::vector<std::uint32_t> grid(static_cast<std::size_t>(limit + 1) * (4 * limit + 1), 0);
    auto idx = [limit](Int c, Int b) {
        return static_cast<std::size_t>(c) * (4 * limit + 1) +
               static_cast<std::size_t>(b + 2 * limit);
    };
    for (const OrbitRep& rep : reps_a) {
        for (Int c = 1; c <= limit; ++c)
            for (const Vec3& w : shells[c]) {
                if (!rep.stabilizer.empty()) {
                    bool minimal = true;
                    for (const Mat3& g : rep.stabilizer) {
                        Vec3 img = g * w;
                        if (spheres::lex_less(img, w)) { minimal = false; break; }
                    }
                    if (!minimal) continue;  // count each stabilizer orbit once
                }
                Int b = 2 * (rep.u[0] * w[0] + rep.u[1] * w[1] + rep.u[2] * w[2]);
                ++grid[idx(c, b)];
            }
    }
    for (Int c = 1; c <= limit; ++c)
        for (Int b = -2 * limit; b <= 2 * limit; ++b) {
            std::uint32_t n = grid[idx(c, b)];
            if (n) visit(b, c, static_cast<Int>(n));
        }
}

}  // namespace

RepresentationBoundScan representation_bound_scan(Int coeff_limit, double exponent,
                                                  int jobs) {
    if (coeff_limit < 1)
        throw precondition_error("representation_bound_scan: bad limit");
    auto reps = orbit_reps_by_norm(coeff_limit);
    auto shells = shells_by_norm(coeff_limit);

    std::vector<RepresentationBoundScan> partial(static_cast<std::size_t>(coeff_limit) + 1);
    parallel_for(static_cast<std::size_t>(coeff_limit), jobs, [&](std::size_t i) {
        Int a = static_cast<Int>(i) + 1;
        RepresentationBoundScan& local = partial[a];
        scan_pairs_for_norm(reps[a], shells, coeff_limit, [&](Int b, Int c, Int orbits) {
            Int ab = b < 0 ? -b : b;
            if (ab > coeff_limit) return;                    // outside the family
            if (Int128(b) * b >= Int128(4) * a * c) return;  // degenerate or indefinite
            ++local.forms_checked;
            Int maxc = std::max(std::max(a, ab), c);
            double denom = std::pow(static_cast<double>(maxc), exponent);
            Int g = gcd3(a, b, c);
            double ratio_all =
                static_cast<double>(orbits) / (static_cast<double>(square_part(g)) * denom);
            if (ratio_all > local.max_ratio_all) {
                local.max_ratio_all = ratio_all;
                local.argmax_all = {a, b, c};
            }
            if (g == 1) {
                double ratio = static_cast<double>(orbits) / denom;
                if (ratio > local.max_ratio_primitive) {
                    local.max_ratio_primitive = ratio;
                    local.argmax_primitive = {a, b, c};
                }
            }
        });
    });

    RepresentationBoundScan out;
    for (const auto& local : partial) {
        out.forms_checked += local.forms_checked;
        if (local.max_ratio_primitive > out.max_ratio_primitive) {
            out.max_ratio_primitive = local.max_ratio_primitive;
            out.argmax_primitive = local.argmax_primitive;
        }
        if (local.max_ratio_all > out.max_ratio_all) {
            out.max_ratio_all = local.max_ratio_all;
            out.argmax_all = local.argmax_all;
        }
    }
    return out;
}

Int sum_of_squares_orbit_count(const forms::BinaryForm& q) {
    if (q.a <= 0 || q.c <= 0 || q.discriminant() >= 0) return 0;
    Int limit = std::max(q.a, q.c);
    auto reps = orbit_reps_by_norm(limit);
    auto shells = shells_by_norm(limit);
    Int total = 0;
    scan_pairs_for_norm(reps[q.a], shells, limit, [&](Int b, Int c, Int orbits) {
        if (b == q.b && c == q.c) total += orbits;
    });
    return total;
}

std::vector<ScanRow> cusp_scan(Int dmin, Int dmax, const Rational& H, int jobs) {
    if (dmax < dmin) throw precondition_error("cusp_scan: empty range");
    std::vector<Int> ds;
    for (Int d = dmin; d <= dmax; ++d)
        if (d < 0 && forms::is_discriminant(d)) ds.push_back(d);
    std::vector<std::pair<Int, double>> data(ds.size());
    parallel_for(ds.size(), jobs, [&](std::size_t i) {
        auto pts = cm_points(ds[i]);
        data[i] = {static_cast<Int>(pts.size()), cusp_mass(pts, H)};
    });
    std::vector<ScanRow> rows;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        ScanRow row;
        row.d = ds[i];
        row.count = data[i].first;
        row.H = H;
        row.statistic = "class_number";
        row.value = static_cast<double>(data[i].first);
        rows.push_back(row);
        row.statistic = "cusp_mass";
        row.value = data[i].second;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace equilab::experiments
