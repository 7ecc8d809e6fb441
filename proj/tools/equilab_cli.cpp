// equilab: command-line surface over the library. Every subcommand echoes
// its configuration into the output metadata and writes byte-identical
// output for identical configurations; wall time goes to the diagnostic
// stream so it cannot perturb golden files.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "equilab/arith.hpp"
#include "equilab/experiments.hpp"
#include "equilab/forms.hpp"
#include "equilab/io.hpp"
#include "equilab/reps.hpp"
#include "equilab/spheres.hpp"
#include "equilab/surface.hpp"

namespace {

using equilab::Int;
using equilab::Rational;
using equilab::io::Table;
using nlohmann::json;

namespace spheres = equilab::spheres;
namespace forms = equilab::forms;
namespace reps = equilab::reps;
namespace surface = equilab::surface;
namespace experiments = equilab::experiments;

struct Options {
    std::string out = "-";
    std::string format = "csv";
    int jobs = 0;

    Int d = 0;
    Int D = 0;
    Int n = 1;
    Int p = 3;
    int m = 1;
    int steps = 0;
    int lmax = 8;
    int caps = 128;
    int nx = 8;
    int ny = 6;
    double ymax = 10.0;
    std::uint64_t seed = 0;
    Int dmin = 0, dmax = 0;
    Int Dmin = 1, Dmax = 1;
    std::string H = "1/1";
    std::string f1, f2, q, Q = "1:1:1";
    std::string cm;
    double x = 0.0, y = 1.0;
    bool have_x = false, have_y = false;
    Int linnik_p = 0;  // 0 = Legendre condition
};

void add_output_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--out", o.out, "output path, - for standard output");
    cmd->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--jobs", o.jobs, "worker pool size, 0 = available parallelism");
}

Table base_table(const std::string& subcommand) {
    Table t;
    t.add_meta("tool", "equilab");
    t.add_meta("version", equilab::io::kVersion);
    t.add_meta("subcommand", subcommand);
    return t;
}

void emit(const Table& table, const Options& o) {
    equilab::io::Format f =
        o.format == "json" ? equilab::io::Format::Json : equilab::io::Format::Csv;
    if (o.out == "-") {
        equilab::io::write_table(table, f, std::cout);
    } else {
        std::ofstream os(o.out, std::ios::binary);
        if (!os) throw std::invalid_argument("cannot open output file " + o.out);
        equilab::io::write_table(table, f, os);
    }
}

forms::BinaryForm parse_form(const std::string& text) {
    forms::BinaryForm f{};
    char c1 = 0, c2 = 0;
    std::istringstream is(text);
    if (!(is >> f.a >> c1 >> f.b >> c2 >> f.c) || (c1 != ':' && c1 != ',') || c2 != c1)
        throw std::invalid_argument("expected a form as a:b:c, got '" + text + "'");
    return f;
}

reps::TernaryForm parse_ternary(const std::string& text) {
    Int a = 0, b = 0, c = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(text);
    if (!(is >> a >> c1 >> b >> c2 >> c) || (c1 != ':' && c1 != ',') || c2 != c1)
        throw std::invalid_argument("expected a diagonal ternary form as a:b:c");
    return reps::TernaryForm::diagonal(a, b, c);
}

surface::HalfPlanePoint parse_point(const Options& o) {
    if (!o.cm.empty()) {
        Int a = 0, b = 0, d = 0;
        char c1 = 0, c2 = 0;
        std::istringstream is(o.cm);
        if (!(is >> a >> c1 >> b >> c2 >> d) || (c1 != ':' && c1 != ',') || c2 != c1)
            throw std::invalid_argument("expected CM data as a:b:d, got '" + o.cm + "'");
        return surface::HalfPlanePoint::exact(a, b, d);
    }
    if (!(o.have_x && o.have_y))
        throw std::invalid_argument("pass either --cm a:b:d or both --x and --y");
    return surface::HalfPlanePoint::floating(o.x, o.y);
}

json rational_cell(const Rational& r) {
    return json(std::to_string(r.num()) + "/" + std::to_string(r.den()));
}

void append_scan_rows(Table& t, const std::vector<experiments::ScanRow>& rows) {
    t.columns = {"d", "statistic", "value", "p", "m", "H", "seed"};
    for (const auto& r : rows) {
        json p = r.p ? json(*r.p) : json(nullptr);
        json m = r.m ? json(*r.m) : json(nullptr);
        json H = r.H ? rational_cell(*r.H) : json(nullptr);
        json seed = r.seed ? json(*r.seed) : json(nullptr);
        t.rows.push_back({json(r.d), json(r.statistic), json(r.value), p, m, H, seed});
    }
}

// --- subcommand bodies ----------------------------------------------------

void run_spheres(const Options& o) {
    Table t = base_table("spheres");
    t.add_meta("d", o.d);
    auto set = spheres::enumerate_primitive_points(o.d);
    t.add_meta("count", json(set.points.size()));
    if (!spheres::legendre_admissible(o.d))
        t.add_meta("note", "not Legendre-admissible");
    t.columns = {"x", "y", "z"};
    for (const auto& pt : set.points)
        t.rows.push_back({json(pt.v.x()), json(pt.v.y()), json(pt.v.z())});
    emit(t, o);
}

void run_classgroup(const Options& o) {
    Table t = base_table("classgroup");
    t.add_meta("d", o.d);
    auto grp = forms::class_group(o.d);
    t.add_meta("h", json(grp.class_number()));
    t.columns = {"a", "b", "c"};
    for (const auto& f : grp.reduced_forms)
        t.rows.push_back({json(f.a), json(f.b), json(f.c)});
    emit(t, o);
}

void run_cm(const Options& o) {
    Table t = base_table("cm");
    t.add_meta("d", o.d);
    auto grp = forms::class_group(o.d);
    t.add_meta("h", json(grp.class_number()));
    t.columns = {"a", "b", "c", "re", "im", "height"};
    for (const auto& f : grp.reduced_forms) {
        auto z = forms::cm_point(f);
        t.rows.push_back({json(f.a), json(f.b), json(f.c), json(z.real()),
                          json(z.imag()), json(surface::height(z))});
    }
    emit(t, o);
}

void run_compose(const Options& o) {
    Table t = base_table("compose");
    auto f1 = parse_form(o.f1);
    auto f2 = parse_form(o.f2);
    t.add_meta("f1", o.f1);
    t.add_meta("f2", o.f2);
    t.add_meta("d", f1.discriminant());
    auto g = forms::compose(f1, f2);
    t.columns = {"a", "b", "c"};
    t.rows.push_back({json(g.a), json(g.b), json(g.c)});
    emit(t, o);
}

void run_reps(const Options& o) {
    Table t = base_table("reps");
    auto q = parse_form(o.q);
    auto Q = parse_ternary(o.Q);
    t.add_meta("q", o.q);
    t.add_meta("Q", o.Q);
    auto counts = reps::count_representations(Q, q);
    t.columns = {"embeddings", "orbits"};
    t.rows.push_back({json(counts.embeddings), json(counts.orbits)});
    emit(t, o);
}

void run_divisors(const Options& o) {
    Table t = base_table("divisors");
    t.add_meta("n", o.n);
    t.columns = {"n", "tau"};
    t.rows.push_back({json(o.n), json(reps::divisor_count(o.n))});
    emit(t, o);
}

void run_census(const Options& o) {
    Table t = base_table("census");
    t.add_meta("d", o.d);
    t.add_meta("p", o.p);
    t.add_meta("m", o.m);
    auto census = reps::basic_lemma_census(o.d, o.p, o.m);
    t.columns = {"d", "p", "m", "ordered_pairs", "classes"};
    t.rows.push_back({json(census.d), json(census.p), json(census.m),
                      json(census.ordered_pairs), json(census.classes)});
    emit(t, o);
}

void echo_start_point(Table& t, const Options& o) {
    t.add_meta("cm", o.cm.empty() ? json(nullptr) : json(o.cm));
    t.add_meta("x", o.cm.empty() && o.have_x ? json(o.x) : json(nullptr));
    t.add_meta("y", o.cm.empty() && o.have_y ? json(o.y) : json(nullptr));
}

void run_neighbors(const Options& o) {
    Table t = base_table("neighbors");
    t.add_meta("p", o.p);
    echo_start_point(t, o);
    auto z = parse_point(o);
    auto nbrs = surface::hecke_neighbors(z, o.p);
    t.add_meta("count", json(nbrs.size()));
    t.columns = {"index", "re", "im", "height"};
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        t.rows.push_back({json(i), json(nbrs[i].real()), json(nbrs[i].imag()),
                          json(surface::height(nbrs[i]))});
    emit(t, o);
}

void run_walk(const Options& o) {
    Table t = base_table("walk");
    Rational H = Rational::parse(o.H);
    t.add_meta("p", o.p);
    t.add_meta("steps", o.steps);
    t.add_meta("seed", o.seed);
    t.add_meta("H", rational_cell(H));
    echo_start_point(t, o);
    auto z = parse_point(o);
    auto it = surface::nonbacktracking_walk(z, o.p, o.steps, o.seed, H.to_double());
    t.columns = {"step", "height", "above"};
    for (std::size_t i = 0; i < it.heights.size(); ++i)
        t.rows.push_back({json(i), json(it.heights[i]), json(static_cast<int>(it.above[i]))});
    emit(t, o);
}

void run_stats_caps(const Options& o) {
    Table t = base_table("stats caps");
    t.add_meta("d", o.d);
    t.add_meta("caps", o.caps);
    t.add_meta("seed", o.seed);
    auto set = spheres::enumerate_primitive_points(o.d);
    std::vector<Eigen::Vector3d> pts;
    pts.reserve(set.points.size());
    for (const auto& v : set.points) pts.push_back(spheres::project_to_sphere(v));
    double disc = experiments::cap_discrepancy(pts, o.caps, o.seed);
    t.columns = {"d", "statistic", "value", "p", "m", "H", "seed"};
    t.rows.push_back({json(o.d), json("cap_discrepancy"), json(disc), json(nullptr),
                      json(nullptr), json(nullptr), json(o.seed)});
    emit(t, o);
}

void run_stats_weyl(const Options& o) {
    Table t = base_table("stats weyl");
    t.add_meta("d", o.d);
    t.add_meta("lmax", o.lmax);
    auto set = spheres::enumerate_primitive_points(o.d);
    std::vector<Eigen::Vector3d> pts;
    pts.reserve(set.points.size());
    for (const auto& v : set.points) pts.push_back(spheres::project_to_sphere(v));
    auto sums = experiments::weyl_harmonic_sums(pts, o.lmax);
    t.columns = {"l", "m", "average"};
    for (int l = 0; l <= sums.lmax; ++l)
        for (int m = -l; m <= l; ++m)
            t.rows.push_back({json(l), json(m), json(sums.averages[l][m + l])});
    emit(t, o);
}

void run_stats_hyp(const Options& o) {
    Table t = base_table("stats hyp");
    t.add_meta("d", o.d);
    t.add_meta("nx", o.nx);
    t.add_meta("ny", o.ny);
    t.add_meta("ymax", o.ymax);
    t.add_meta("truncated_mass", experiments::truncated_mass_fraction(o.ymax));
    auto pts = experiments::cm_points(o.d);
    double disc = experiments::hyperbolic_cell_discrepancy(pts, o.nx, o.ny, o.ymax);
    t.columns = {"d", "statistic", "value", "p", "m", "H", "seed"};
    t.rows.push_back({json(o.d), json("hyperbolic_cell_discrepancy"), json(disc),
                      json(nullptr), json(nullptr), json(nullptr), json(nullptr)});
    emit(t, o);
}

void run_stats_cusp(const Options& o) {
    Table t = base_table("stats cusp");
    Rational H = Rational::parse(o.H);
    t.add_meta("d", o.d);
    t.add_meta("H", rational_cell(H));
    auto pts = experiments::cm_points(o.d);
    double mass = experiments::cusp_mass(pts, H);
    t.columns = {"d", "statistic", "value", "p", "m", "H", "seed"};
    t.rows.push_back({json(o.d), json("cusp_mass"), json(mass), json(nullptr),
                      json(nullptr), rational_cell(H), json(nullptr)});
    emit(t, o);
}

void run_scan_volume(const Options& o) {
    Table t = base_table("scan volume");
    t.add_meta("dmin", o.dmin);
    t.add_meta("dmax", o.dmax);
    t.add_meta("condition", o.linnik_p > 0 ? "linnik" : "legendre");
    t.add_meta("p", o.linnik_p > 0 ? json(o.linnik_p) : json(nullptr));
    experiments::Condition cond;
    if (o.linnik_p > 0) cond = {experiments::Condition::Linnik, o.linnik_p};
    auto rows = experiments::volume_growth_scan(o.dmin, o.dmax, cond, o.jobs);
    append_scan_rows(t, rows);
    emit(t, o);
}

void run_scan_ratio(const Options& o) {
    Table t = base_table("scan ratio");
    t.add_meta("Dmin", o.Dmin);
    t.add_meta("Dmax", o.Dmax);
    auto rows = experiments::embedding_class_ratio_scan(o.Dmin, o.Dmax, o.jobs);
    append_scan_rows(t, rows);
    emit(t, o);
}

void run_scan_census(const Options& o) {
    Table t = base_table("scan census");
    t.add_meta("dmin", o.dmin);
    t.add_meta("dmax", o.dmax);
    t.add_meta("p", o.p);
    t.add_meta("m", o.m);
    auto rows = experiments::census_scan(o.dmin, o.dmax, o.p, o.m, o.jobs);
    append_scan_rows(t, rows);
    emit(t, o);
}

void run_scan_cusp(const Options& o) {
    Table t = base_table("scan cusp");
    Rational H = Rational::parse(o.H);
    t.add_meta("dmin", o.dmin);
    t.add_meta("dmax", o.dmax);
    t.add_meta("H", rational_cell(H));
    auto rows = experiments::cusp_scan(o.dmin, o.dmax, H, o.jobs);
    append_scan_rows(t, rows);
    emit(t, o);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integer points on spheres, class groups, CM points and Hecke trees"};
    app.require_subcommand(1);
    Options o;
    std::function<void()> action;

    auto* sph = app.add_subcommand("spheres", "primitive points of norm d");
    sph->add_option("--d", o.d, "norm")->required();
    add_output_flags(sph, o);
    sph->callback([&] { action = [&o] { run_spheres(o); }; });

    auto* cg = app.add_subcommand("classgroup", "reduced forms of a negative discriminant");
    cg->add_option("--d", o.d, "discriminant (negative)")->required();
    add_output_flags(cg, o);
    cg->callback([&] { action = [&o] { run_classgroup(o); }; });

    auto* cm = app.add_subcommand("cm", "CM points of a negative discriminant");
    cm->add_option("--d", o.d, "discriminant (negative)")->required();
    add_output_flags(cm, o);
    cm->callback([&] { action = [&o] { run_cm(o); }; });

    auto* comp = app.add_subcommand("compose", "Gauss composition of two forms");
    comp->add_option("--f1", o.f1, "first form a:b:c")->required();
    comp->add_option("--f2", o.f2, "second form a:b:c")->required();
    add_output_flags(comp, o);
    comp->callback([&] { action = [&o] { run_compose(o); }; });

    auto* rp = app.add_subcommand("reps", "representations of a binary form by a ternary form");
    rp->add_option("--q", o.q, "binary form a:b:c")->required();
    rp->add_option("--Q", o.Q, "diagonal ternary form a:b:c (default sum of squares)");
    add_output_flags(rp, o);
    rp->callback([&] { action = [&o] { run_reps(o); }; });

    auto* dv = app.add_subcommand("divisors", "divisor count");
    dv->add_option("--n", o.n, "positive integer")->required();
    add_output_flags(dv, o);
    dv->callback([&] { action = [&o] { run_divisors(o); }; });

    auto* cs = app.add_subcommand("census", "close-pair census on one shell");
    cs->add_option("--d", o.d, "norm")->required();
    cs->add_option("--p", o.p, "odd prime")->required();
    cs->add_option("--m", o.m, "p-adic precision")->required();
    add_output_flags(cs, o);
    cs->callback([&] { action = [&o] { run_census(o); }; });

    auto* nb = app.add_subcommand("neighbors", "Hecke neighbours at p");
    nb->add_option("--p", o.p, "prime")->required();
    nb->add_option("--cm", o.cm, "exact CM data a:b:d");
    nb->add_option("--x", o.x, "Re z")->each([&](const std::string&) { o.have_x = true; });
    nb->add_option("--y", o.y, "Im z")->each([&](const std::string&) { o.have_y = true; });
    add_output_flags(nb, o);
    nb->callback([&] { action = [&o] { run_neighbors(o); }; });

    auto* wk = app.add_subcommand("walk", "seeded non-backtracking tree walk");
    wk->add_option("--p", o.p, "prime")->required();
    wk->add_option("--steps", o.steps, "number of steps")->required();
    wk->add_option("--seed", o.seed, "random seed");
    wk->add_option("--H", o.H, "height threshold as a rational n/d");
    wk->add_option("--cm", o.cm, "exact CM data a:b:d");
    wk->add_option("--x", o.x, "Re z")->each([&](const std::string&) { o.have_x = true; });
    wk->add_option("--y", o.y, "Im z")->each([&](const std::string&) { o.have_y = true; });
    add_output_flags(wk, o);
    wk->callback([&] { action = [&o] { run_walk(o); }; });

    auto* stats = app.add_subcommand("stats", "statistics over one point set");
    stats->require_subcommand(1);
    auto* st_caps = stats->add_subcommand("caps", "spherical cap discrepancy");
    st_caps->add_option("--d", o.d, "norm")->required();
    st_caps->add_option("--caps", o.caps, "number of random caps");
    st_caps->add_option("--seed", o.seed, "random seed");
    add_output_flags(st_caps, o);
    st_caps->callback([&] { action = [&o] { run_stats_caps(o); }; });

    auto* st_weyl = stats->add_subcommand("weyl", "spherical harmonic averages");
    st_weyl->add_option("--d", o.d, "norm")->required();
    st_weyl->add_option("--lmax", o.lmax, "maximal degree (<= 8)");
    add_output_flags(st_weyl, o);
    st_weyl->callback([&] { action = [&o] { run_stats_weyl(o); }; });

    auto* st_hyp = stats->add_subcommand("hyp", "hyperbolic cell discrepancy of CM points");
    st_hyp->add_option("--d", o.d, "discriminant (negative)")->required();
    st_hyp->add_option("--nx", o.nx, "cells in x");
    st_hyp->add_option("--ny", o.ny, "cells in y");
    st_hyp->add_option("--ymax", o.ymax, "truncation height");
    add_output_flags(st_hyp, o);
    st_hyp->callback([&] { action = [&o] { run_stats_hyp(o); }; });

    auto* st_cusp = stats->add_subcommand("cusp", "cusp mass of CM points");
    st_cusp->add_option("--d", o.d, "discriminant (negative)")->required();
    st_cusp->add_option("--H", o.H, "height threshold as a rational n/d")->required();
    add_output_flags(st_cusp, o);
    st_cusp->callback([&] { action = [&o] { run_stats_cusp(o); }; });

    auto* scan = app.add_subcommand("scan", "scans over ranges");
    scan->require_subcommand(1);
    auto* sc_vol = scan->add_subcommand("volume", "|I_d| growth");
    sc_vol->add_option("--dmin", o.dmin)->required();
    sc_vol->add_option("--dmax", o.dmax)->required();
    sc_vol->add_option("--linnik-p", o.linnik_p, "restrict to Linnik's condition at p");
    add_output_flags(sc_vol, o);
    sc_vol->callback([&] { action = [&o] { run_scan_volume(o); }; });

    auto* sc_ratio = scan->add_subcommand("ratio", "orbit classes vs class numbers");
    sc_ratio->add_option("--Dmin", o.Dmin)->required();
    sc_ratio->add_option("--Dmax", o.Dmax)->required();
    add_output_flags(sc_ratio, o);
    sc_ratio->callback([&] { action = [&o] { run_scan_ratio(o); }; });

    auto* sc_census = scan->add_subcommand("census", "close-pair census over a range");
    sc_census->add_option("--dmin", o.dmin)->required();
    sc_census->add_option("--dmax", o.dmax)->required();
    sc_census->add_option("--p", o.p)->required();
    sc_census->add_option("--m", o.m)->required();
    add_output_flags(sc_census, o);
    sc_census->callback([&] { action = [&o] { run_scan_census(o); }; });

    auto* sc_cusp = scan->add_subcommand("cusp", "cusp mass over discriminants");
    sc_cusp->add_option("--dmin", o.dmin, "most negative discriminant")->required();
    sc_cusp->add_option("--dmax", o.dmax, "least negative discriminant")->required();
    sc_cusp->add_option("--H", o.H, "height threshold as a rational n/d")->required();
    add_output_flags(sc_cusp, o);
    sc_cusp->callback([&] { action = [&o] { run_scan_cusp(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        action();
    } catch (const equilab::precondition_error& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    std::cerr << "wall_time_s=" << equilab::io::format_double(elapsed.count()) << "\n";
    return 0;
}
