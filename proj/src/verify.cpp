#include "oscillab/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "oscillab/grid.hpp"
#include "oscillab/jn.hpp"
#include "oscillab/oscillation.hpp"
#include "oscillab/product.hpp"
#include "oscillab/rearrange.hpp"
#include "oscillab/shapes.hpp"
#include "oscillab/transforms.hpp"

namespace oscillab {

namespace {

// Frozen regression floor for the N=6 rectangle/cube norm ratio of the
// nested-indicator sum on a 64x64 grid. Pinned from an exhaustive scan that
// measured 1.94199; the continuum ratio is unbounded in N but the 64x64
// discretization of six terms lands just below 2.
constexpr double kKozlovFrozenRatio = 1.94;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Gate {
    bool ok = true;
    std::ostringstream out;

    void require(bool cond, const std::string& msg) {
        if (!cond) {
            ok = false;
            out << "FAIL " << msg << "; ";
        }
    }
    void note(const std::string& msg) { out << msg << "; "; }
};

Domain line(int cells) { return Domain::make({{0.0, 1.0}}, {cells}); }
Domain square(int cells) {
    return Domain::make({{0.0, 1.0}, {0.0, 1.0}}, {cells, cells});
}

// Deterministic uniform draw in [lo, hi] (avoids the implementation-defined
// std::uniform_real_distribution).
double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

GridFunction random_function(const Domain& d, std::uint64_t seed, int levels) {
    return generate(GeneratorSpec::random_step(seed, levels), d);
}

// Two-valued 1D profile: +1 on the first `head` cells, -1 elsewhere.
GridFunction two_valued(const Domain& d, int head) {
    std::vector<double> v(static_cast<size_t>(d.cell_count()), -1.0);
    for (int i = 0; i < head; ++i) v[static_cast<size_t>(i)] = 1.0;
    return GridFunction(d, std::move(v));
}

double lp_sum(const GridFunction& f, double p) {
    double acc = 0.0;
    for (double v : f.values()) acc += std::pow(std::abs(v), p);
    return acc * f.domain().cell_measure();
}

// ---------------------------------------------------------------------------
// Check 1: extremal functions hit their exact oscillation values.
void check_extremal_exactness(Gate& g) {
    double worst = 0.0;
    for (int cells : {2, 16, 64, 500}) {
        GridFunction f = generate(GeneratorSpec::two_level(), line(cells));
        Shape full = Shape::full(f.domain());
        for (double p : {1.0, 2.0, 4.0})
            worst = std::max(worst, std::abs(osc_p(f, full, p).value - 1.0));
    }
    g.require(worst <= 1e-12, "two-level osc_p != 1, err " + fmt(worst));
    g.note("two-level max err " + fmt(worst));

    GridFunction ind = generate(GeneratorSpec::indicator(0.5), line(64));
    Shape full = Shape::full(ind.domain());
    double o1 = osc_p(ind, full, 1.0).value;
    double d1 = osc_double(ind, full, 1.0);
    g.require(std::abs(o1 - 0.5) <= 1e-12, "half indicator osc_1 " + fmt(o1));
    g.require(std::abs(d1 - 0.5) <= 1e-12, "half indicator double_1 " + fmt(d1));
    g.note("indicator osc_1 " + fmt(o1) + ", double_1 " + fmt(d1));
}

// ---------------------------------------------------------------------------
// Check 2: three-level profile beta sweep; the single/double-integral ratio
// trends to 1/2 as beta -> 0.
void check_beta_sweep(Gate& g) {
    const Domain d = line(512);
    const Shape full = Shape::full(d);

    const double beta = 1.0 / 256.0;
    GridFunction f = generate(GeneratorSpec::three_level(beta), d);
    double o1 = osc_p(f, full, 1.0).value;
    double d1 = osc_double(f, full, 1.0);
    double expected_d = 4.0 * beta * (1.0 - 2.0 * beta) + 4.0 * beta * beta;
    g.require(std::abs(o1 - 2.0 * beta) <= 1e-12, "osc_1 " + fmt(o1));
    g.require(std::abs(d1 - expected_d) <= 1e-12, "double_1 " + fmt(d1));
    double ratio = o1 / d1;
    double expected_r = 1.0 / (2.0 - 2.0 * beta);
    g.require(std::abs(ratio - expected_r) <= 1e-12, "ratio " + fmt(ratio));
    g.note("beta=1/256 ratio " + fmt(ratio));

    double prev = 1.0;
    for (int k = 2; k <= 8; ++k) {
        double b = std::ldexp(1.0, -k);
        GridFunction fb = generate(GeneratorSpec::three_level(b), d);
        double r = osc_p(fb, full, 1.0).value / osc_double(fb, full, 1.0);
        g.require(std::abs(r - 1.0 / (2.0 - 2.0 * b)) <= 1e-12,
                  "ratio mismatch at beta=2^-" + std::to_string(k));
        g.require(r < prev + 1e-15 && r > 0.5, "ratio not trending to 1/2");
        prev = r;
    }
    g.note("final ratio " + fmt(prev));
}

// ---------------------------------------------------------------------------
// Check 3: sqrt(2) identity between double-integral and p=2 oscillation, and
// the p=2 inf-constant minimizer equals the mean.
void check_p2_identity(Gate& g) {
    double worst_id = 0.0, worst_min = 0.0;
    std::mt19937_64 rng(42);
    const double sqrt2 = std::sqrt(2.0);

    auto run = [&](const Domain& d, const BasisSpec& spec, std::uint64_t seed_base,
                   int count) {
        Basis basis(spec, d);
        for (int i = 0; i < count; ++i) {
            GridFunction f = random_function(d, seed_base + i, 2 + (i % 7));
            for (long long s = 0; s < basis.enumerated_count(); ++s) {
                Shape shape = basis.shape_at(s);
                double o2 = osc_p(f, shape, 2.0).value;
                double dd = osc_double(f, shape, 2.0);
                worst_id = std::max(worst_id, std::abs(dd - sqrt2 * o2));
                InfConstResult inf = osc_inf_const(f, shape, 2.0);
                worst_min = std::max(worst_min, std::abs(inf.minimizer - mean(f, shape)));
                // Spot-check true minimality against perturbed constants.
                if (s % 97 == 0) {
                    double delta = uniform(rng, 1e-6, 0.5);
                    for (double c : {inf.minimizer - delta, inf.minimizer + delta}) {
                        double obj = 0.0;
                        long long n = 0;
                        for_each_cell(d, shape, [&](long long cell) {
                            double e = f.value(cell) - c;
                            obj += e * e;
                            ++n;
                        });
                        obj = std::sqrt(obj / static_cast<double>(n));
                        g.require(inf.value <= obj + 1e-12, "p=2 minimizer beaten");
                    }
                }
            }
        }
    };
    run(line(64), BasisSpec::exhaustive(BasisKind::intervals), 100, 100);
    run(square(12), BasisSpec::exhaustive(BasisKind::rectangles), 300, 100);

    g.require(worst_id <= 1e-10, "identity err " + fmt(worst_id));
    g.require(worst_min <= 1e-10, "minimizer err " + fmt(worst_min));
    g.note("max |double - sqrt2*osc2| " + fmt(worst_id) + ", max |argmin - mean| " +
           fmt(worst_min));
}

// ---------------------------------------------------------------------------
// Check 4: the closed-form sup-norm comparison constant.
void check_cinfty(Gate& g) {
    g.require(std::abs(c_infty(1.0) - 1.0) <= 1e-12, "c_infty(1) " + fmt(c_infty(1.0)));
    g.require(std::abs(c_infty(2.0) - 1.0) <= 1e-12, "c_infty(2) " + fmt(c_infty(2.0)));
    g.require(std::abs(c_infty(3.0) - 1.0) <= 1e-9, "c_infty(3) " + fmt(c_infty(3.0)));

    double prev = 0.0;
    for (double p : {1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 10.0, 20.0, 50.0}) {
        double c = c_infty(p);
        g.require(c >= prev - 1e-12, "not nondecreasing at p=" + fmt(p));
        g.require(c < 2.0, "exceeds 2 at p=" + fmt(p));
        prev = c;
    }
    g.note("c_infty(50) " + fmt(prev));

    // Empirical sharpness over two-valued profiles on 1024 cells.
    const Domain d = line(1024);
    double worst = 0.0;
    for (double p : {1.0, 2.0, 4.0}) {
        double sup = 0.0;
        for (int head : {128, 256, 384, 512, 640, 768, 896}) {
            GridFunction f = two_valued(d, head);
            sup = std::max(sup, bmo_norm(f, BasisSpec::exhaustive(BasisKind::intervals),
                                         p)
                                    .value);
        }
        double err = std::abs(sup - c_infty(p));
        worst = std::max(worst, err);
        g.require(err <= 1e-3, "empirical gap " + fmt(err) + " at p=" + fmt(p));
    }
    g.note("max empirical gap " + fmt(worst));
}

// ---------------------------------------------------------------------------
// Check 5: medians minimize L1 deviation; inf-constant sandwich (1, 2);
// aligned indicator gives (alpha, argmin 0) exactly.
void check_median_suite(Gate& g) {
    std::mt19937_64 rng(2024);
    const Domain d1 = line(64);
    const Domain d2 = square(12);
    Basis b1(BasisSpec::exhaustive(BasisKind::intervals), d1);
    Basis b2(BasisSpec::exhaustive(BasisKind::rectangles), d2);

    double worst_gap = 0.0;
    for (int i = 0; i < 1000; ++i) {
        bool one_d = (i % 2 == 0);
        const Domain& d = one_d ? d1 : d2;
        const Basis& basis = one_d ? b1 : b2;
        GridFunction f = random_function(d, 9000 + i, 2 + (i % 9));
        Shape s = basis.shape_at(
            static_cast<long long>(rng() % static_cast<std::uint64_t>(basis.enumerated_count())));

        auto dev1 = [&](double c) {
            double acc = 0.0;
            long long n = 0;
            for_each_cell(d, s, [&](long long cell) {
                acc += std::abs(f.value(cell) - c);
                ++n;
            });
            return acc / static_cast<double>(n);
        };
        double m = median(f, s);
        double dm = dev1(m);
        double lo = f.min_value() - 0.1, hi = f.max_value() + 0.1;
        for (int j = 0; j < 200; ++j) {
            double c = uniform(rng, lo, hi);
            double gap = dm - dev1(c);
            worst_gap = std::max(worst_gap, gap);
            g.require(gap <= 1e-12, "median beaten by constant " + fmt(c));
        }
        for (double p : {1.0, 2.0}) {
            double osc = osc_p(f, s, p).value;
            double inf = osc_inf_const(f, s, p).value;
            g.require(inf <= osc + 1e-12, "inf-const above osc, p=" + fmt(p));
            g.require(osc <= 2.0 * inf + 1e-12, "osc above twice inf-const, p=" + fmt(p));
        }
    }
    g.note("max median excess " + fmt(worst_gap));

    for (double alpha : {0.125, 0.0625}) {
        GridFunction f = generate(GeneratorSpec::indicator(alpha), d1);
        InfConstResult res = osc_inf_const(f, Shape::full(d1), 1.0);
        g.require(std::abs(res.value - alpha) <= 1e-12,
                  "indicator inf-const " + fmt(res.value));
        g.require(std::abs(res.minimizer) <= 1e-12,
                  "indicator argmin " + fmt(res.minimizer));
    }
}

// ---------------------------------------------------------------------------
// Check 6: rearrangements preserve Lp size and never increase the norm.
void check_rearrangement(Gate& g) {
    auto isometry = [&](const GridFunction& f) {
        GridFunction star = decreasing_rearrangement(f);
        for (double p : {1.0, 2.0, 5.0}) {
            double a = lp_sum(f, p), b = lp_sum(star, p);
            g.require(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)),
                      "Lp isometry broken at p=" + fmt(p));
        }
        g.require(f.max_abs() == star.max_abs(), "sup norm changed");
        // f* is the signed rearrangement of |f|.
        GridFunction abs_f = apply(TransformSpec::abs(), f);
        GridFunction circ_abs = signed_rearrangement(abs_f);
        for (long long i = 0; i < star.size(); ++i)
            g.require(star.value(i) == circ_abs.value(i), "f* != |f| rearranged");
    };

    auto norm_checks = [&](const GridFunction& f, const BasisSpec& spec) {
        double norm = bmo_norm(f, spec, 1.0).value;
        BasisSpec line_basis = BasisSpec::exhaustive(BasisKind::intervals);
        double n_circ = bmo_norm(signed_rearrangement(f), line_basis, 1.0).value;
        double n_star = bmo_norm(decreasing_rearrangement(f), line_basis, 1.0).value;
        double n_abs = bmo_norm(apply(TransformSpec::abs(), f), spec, 1.0).value;
        double cap = norm * (1.0 + 1e-9);
        g.require(n_circ <= cap, "signed rearrangement norm grew " + fmt(n_circ - norm));
        g.require(n_star <= cap, "decreasing rearrangement norm grew " + fmt(n_star - norm));
        g.require(n_abs <= cap, "absolute value norm grew " + fmt(n_abs - norm));
    };

    for (int i = 0; i < 200; ++i) {
        GridFunction f = random_function(line(64), 20000 + i, 2 + (i % 8));
        isometry(f);
        norm_checks(f, BasisSpec::exhaustive(BasisKind::intervals));
    }
    for (int i = 0; i < 50; ++i) {
        GridFunction f = random_function(square(16), 30000 + i, 2 + (i % 6));
        isometry(f);
        norm_checks(f, BasisSpec::exhaustive(BasisKind::rectangles));
    }
    g.note("250 functions checked");
}

// ---------------------------------------------------------------------------
// Shared small corpus for the truncation and envelope checks.
struct CorpusEntry {
    GridFunction f;
    BasisSpec basis;
};

std::vector<CorpusEntry> corpus_1d() {
    const Domain d = line(64);
    BasisSpec b = BasisSpec::exhaustive(BasisKind::intervals);
    std::vector<CorpusEntry> out;
    out.push_back({generate(GeneratorSpec::two_level(), d), b});
    out.push_back({generate(GeneratorSpec::indicator(0.25), d), b});
    out.push_back({generate(GeneratorSpec::three_level(0.125), d), b});
    out.push_back({generate(GeneratorSpec::log_reciprocal(), d), b});
    out.push_back({random_function(d, 7, 5), b});
    return out;
}

std::vector<CorpusEntry> corpus_2d() {
    BasisSpec b = BasisSpec::exhaustive(BasisKind::rectangles);
    std::vector<CorpusEntry> out;
    out.push_back({generate(GeneratorSpec::kozlov_sum(3), square(16)), b});
    out.push_back({generate(GeneratorSpec::separable_sum(GeneratorSpec::three_level(0.25),
                                                         GeneratorSpec::indicator(0.5)),
                            square(16)),
                   b});
    out.push_back({random_function(square(12), 11, 4), b});
    return out;
}

// Check 7: truncations never increase shapewise oscillation; clamping at the
// sup recovers the norm; the lattice max obeys the p-th power inequality.
void check_truncation(Gate& g) {
    auto corpus = corpus_1d();
    for (auto& e : corpus_2d()) corpus.push_back(std::move(e));

    double worst = 0.0;
    for (const CorpusEntry& e : corpus) {
        double m = e.f.max_abs();
        std::vector<TransformSpec> cuts = {
            TransformSpec::trunc_above(0.5 * m), TransformSpec::trunc_above(0.0),
            TransformSpec::trunc_below(-0.5 * m), TransformSpec::trunc_full(0.5 * m)};
        for (double p : {1.0, 2.0})
            for (const TransformSpec& t : cuts) {
                RatioReport r = shapewise_ratio(t, e.f, e.basis, p);
                worst = std::max(worst, r.max_ratio);
                g.require(r.max_ratio <= 1.0 + 1e-12,
                          t.to_string() + " ratio " + fmt(r.max_ratio) + " at p=" + fmt(p));
            }

        double norm = bmo_norm(e.f, e.basis, 1.0).value;
        double prev_gap = 0.0;
        for (double frac : {0.25, 0.5, 0.75, 1.0}) {
            GridFunction cut = apply(TransformSpec::trunc_full(frac * m), e.f);
            prev_gap = std::abs(bmo_norm(cut, e.basis, 1.0).value - norm);
        }
        g.require(prev_gap < 1e-9, "clamp at sup leaves norm gap " + fmt(prev_gap));
    }
    g.note("max truncation ratio " + fmt(worst));

    auto lattice = [&](const CorpusEntry& a, const GridFunction& f2) {
        GridFunction mx = apply(TransformSpec::max_with(f2), a.f);
        Basis basis(a.basis, a.f.domain());
        for (double p : {1.0, 2.0})
            for (long long i = 0; i < basis.enumerated_count(); ++i) {
                Shape s = basis.shape_at(i);
                double lhs = std::pow(osc_p(mx, s, p).value, p);
                double rhs = std::pow(osc_p(a.f, s, p).value, p) +
                             std::pow(osc_p(f2, s, p).value, p);
                g.require(lhs <= rhs + 1e-12, "lattice inequality, p=" + fmt(p));
            }
    };
    auto c1 = corpus_1d();
    lattice(c1[0], c1[2].f);
    lattice(c1[1], c1[4].f);
    lattice(c1[3], c1[0].f);
    auto c2 = corpus_2d();
    lattice(c2[0], c2[1].f);
}

// ---------------------------------------------------------------------------
// Check 8: level-set tails, fitted exponential envelopes, and the Gamma
// moment bound.
void check_jn_pipeline(Gate& g) {
    const Domain d = line(4096);
    GridFunction f = generate(GeneratorSpec::log_reciprocal(), d);
    const Shape full = Shape::full(d);
    const double w = d.cell_measure();

    std::vector<double> levels;
    for (int k = 0; k <= 120; ++k) levels.push_back(0.05 * k);
    TailCurve curve = tail_curve(f, full, levels);

    auto oracle = [](double a) {
        double tail = std::exp(-1.0 - a);
        if (a < 1.0) tail += 1.0 - std::exp(a - 1.0);
        return tail;
    };
    double worst = 0.0;
    for (size_t i = 0; i < levels.size(); ++i)
        worst = std::max(worst, std::abs(curve.values[i] - oracle(levels[i])));
    g.require(worst <= w, "tail deviates from closed form by " + fmt(worst));
    g.note("max tail error " + fmt(worst) + " (cell " + fmt(w) + ")");

    // Two-level profile with decay rate 1 has tightest amplitude e.
    GridFunction two = generate(GeneratorSpec::two_level(), line(64));
    TailCurve two_curve = tail_curve(two, Shape::full(two.domain()), {});
    EnvelopeConstants e1 = fit_envelope(two_curve, 1.0);
    g.require(std::abs(e1.c1 - std::exp(1.0)) <= 1e-12, "two-level c1 " + fmt(e1.c1));

    std::vector<GridFunction> fs;
    fs.push_back(f);
    fs.push_back(two);
    fs.push_back(generate(GeneratorSpec::three_level(0.125), line(64)));
    fs.push_back(random_function(line(64), 3, 5));
    for (const GridFunction& fn : fs) {
        Shape x = Shape::full(fn.domain());
        TailCurve c = tail_curve(fn, x, {});
        for (double c2 : {0.5, 1.0, 2.0}) {
            EnvelopeConstants env = fit_envelope(c, c2);
            g.require(env.valid, "envelope not validated");
            if (env.degenerate) continue;
            for (double alpha : c.breakpoints) {
                double bound = env.c1 * c.set_measure * std::exp(-c2 * alpha);
                g.require(c.value(alpha) <= bound * (1.0 + 1e-12),
                          "envelope violated at alpha " + fmt(alpha));
            }
            for (double p : {1.0, 2.0, 3.0}) {
                double osc = osc_p(fn, x, p).value;
                double bound = moment_bound(env.c1, c2, p);
                g.require(osc <= bound + 1e-9,
                          "moment bound broken: osc " + fmt(osc) + " > " + fmt(bound));
            }
        }
    }
    g.require(std::abs(moment_bound(1.0, 1.0, 2.0) - std::sqrt(2.0)) <= 1e-12,
              "moment_bound(1,1,2) " + fmt(moment_bound(1.0, 1.0, 2.0)));
}

// ---------------------------------------------------------------------------
// Check 9: two-sided product decomposition on 12x12 grids.
void check_product(Gate& g) {
    const Domain d = square(12);
    FactorSplit split = FactorSplit::axiswise(d);
    double worst_a = 0.0, worst_b = 0.0;
    for (int i = 0; i < 50; ++i) {
        GridFunction f = random_function(d, 40000 + i, 2 + (i % 7));
        for (double p : {1.0, 2.0}) {
            DecompositionReport r = decomposition_report(f, split, p);
            worst_a = std::min(worst_a, r.bound_a_margin);
            worst_b = std::min(worst_b, r.bound_b_margin);
            g.require(r.bound_a_ok, "lower decomposition bound failed, p=" + fmt(p));
            g.require(r.bound_b_ok, "upper decomposition bound failed, p=" + fmt(p));
        }
    }
    g.note("worst margins a " + fmt(worst_a) + ", b " + fmt(worst_b));

    GeneratorSpec gx = GeneratorSpec::three_level(0.25);
    GeneratorSpec hy = GeneratorSpec::indicator(0.5);
    GridFunction f = generate(GeneratorSpec::separable_sum(gx, hy), d);
    GridFunction g1 = generate(gx, line(12));
    GridFunction h1 = generate(hy, line(12));
    BasisSpec intervals = BasisSpec::exhaustive(BasisKind::intervals);
    for (double p : {1.0, 2.0}) {
        double sx = slice_norm(f, split, 0, p).value;
        double sy = slice_norm(f, split, 1, p).value;
        double nx = bmo_norm(g1, intervals, p).value;
        double ny = bmo_norm(h1, intervals, p).value;
        g.require(std::abs(sx - nx) <= 1e-12, "x slice norm " + fmt(sx) + " vs " + fmt(nx));
        g.require(std::abs(sy - ny) <= 1e-12, "y slice norm " + fmt(sy) + " vs " + fmt(ny));
    }
}

// ---------------------------------------------------------------------------
// Check 10: the nested-indicator sum separates the rectangle norm from the
// cube norm as the number of terms grows.
void check_separation(Gate& g) {
    const Domain d = square(64);
    double prev = 0.0;
    double last = 0.0;
    for (int n = 1; n <= 6; ++n) {
        GridFunction f = generate(GeneratorSpec::kozlov_sum(n), d);
        double rect = bmo_norm(f, BasisSpec::exhaustive(BasisKind::rectangles), 1.0).value;
        double cube = bmo_norm(f, BasisSpec::exhaustive(BasisKind::cubes), 1.0).value;
        // N=1 is the constant 1: both norms vanish and the ratio is taken as 1.
        double ratio = cube == 0.0 ? 1.0 : rect / cube;
        g.require(ratio >= prev - 1e-12, "ratio decreased at N=" + std::to_string(n));
        g.note("N=" + std::to_string(n) + " ratio " + fmt(ratio));
        prev = ratio;
        last = ratio;
    }
    g.require(last > kKozlovFrozenRatio, "final ratio " + fmt(last) + " below frozen floor " +
                                             fmt(kKozlovFrozenRatio));
}

// ---------------------------------------------------------------------------
// Check 11: the constant-time p=2 rectangle kernel is fast and agrees with
// the naive scan.
void check_performance(Gate& g) {
    GridFunction big = random_function(square(128), 99, 9);
    auto t0 = std::chrono::steady_clock::now();
    NormReport report =
        bmo_norm(big, BasisSpec::exhaustive(BasisKind::rectangles), 2.0);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    g.require(secs < 10.0, "scan took " + fmt(secs) + " s");
    g.note("128x128 scan " + fmt(secs) + " s over " +
           std::to_string(report.shapes_visited) + " rectangles, norm " +
           fmt(report.value));

    GridFunction small = random_function(square(16), 17, 6);
    Basis basis(BasisSpec::exhaustive(BasisKind::rectangles), small.domain());
    PrefixTables tables(small);
    double worst = 0.0;
    for (long long i = 0; i < basis.enumerated_count(); ++i) {
        Shape s = basis.shape_at(i);
        worst = std::max(worst,
                         std::abs(tables.osc2(s.lo, s.hi) - osc_p(small, s, 2.0).value));
    }
    g.require(worst <= 1e-10, "fast/naive gap " + fmt(worst));
    g.note("max fast/naive gap " + fmt(worst));
}

struct CheckDef {
    const char* name;
    double budget_seconds;
    void (*fn)(Gate&);
};

const CheckDef kChecks[] = {
    {"extremal-exactness", 1.0, check_extremal_exactness},
    {"beta-sweep-sharpness", 1.0, check_beta_sweep},
    {"p2-identity", 30.0, check_p2_identity},
    {"cinfty-formula", 60.0, check_cinfty},
    {"median-inf-const", 30.0, check_median_suite},
    {"rearrangement", 300.0, check_rearrangement},
    {"truncation", 120.0, check_truncation},
    {"jn-pipeline", 60.0, check_jn_pipeline},
    {"product-decomposition", 300.0, check_product},
    {"separation-regression", 300.0, check_separation},
    {"performance-kernel", 60.0, check_performance},
};

}  // namespace

int acceptance_check_count() { return static_cast<int>(std::size(kChecks)); }

CheckResult run_acceptance_check(int index) {
    if (index < 0 || index >= acceptance_check_count())
        throw std::out_of_range("acceptance check index");
    const CheckDef& def = kChecks[index];
    CheckResult result;
    result.name = def.name;
    Gate gate;
    auto t0 = std::chrono::steady_clock::now();
    try {
        def.fn(gate);
    } catch (const std::exception& e) {
        gate.ok = false;
        gate.out << "EXCEPTION " << e.what() << "; ";
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (result.seconds >= def.budget_seconds) {
        gate.ok = false;
        gate.out << "FAIL runtime " << fmt(result.seconds) << " s exceeds budget "
                 << fmt(def.budget_seconds) << " s; ";
    }
    result.pass = gate.ok;
    result.detail = gate.out.str();
    return result;
}

std::vector<CheckResult> run_acceptance_suite() {
    std::vector<CheckResult> results;
    for (int i = 0; i < acceptance_check_count(); ++i)
        results.push_back(run_acceptance_check(i));
    return results;
}

}  // namespace oscillab
