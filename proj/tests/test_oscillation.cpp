#include "doctest.h"

#include <cmath>

#include "oscillab/grid.hpp"
#include "oscillab/oscillation.hpp"
#include "oscillab/shapes.hpp"

using namespace oscillab;

namespace {

Domain line(int cells) { return Domain::make({{0.0, 1.0}}, {cells}); }
Domain square(int cells) {
    return Domain::make({{0.0, 1.0}, {0.0, 1.0}}, {cells, cells});
}

}  // namespace

TEST_CASE("means of the canonical profiles") {
    GridFunction two = generate(GeneratorSpec::two_level(), line(8));
    CHECK(mean(two, Shape::full(two.domain())) == 0.0);

    GridFunction ind = generate(GeneratorSpec::indicator(0.5), line(8));
    CHECK(mean(ind, Shape::full(ind.domain())) == doctest::Approx(0.5).epsilon(1e-15));

    GridFunction tri = generate(GeneratorSpec::three_level(0.25), line(8));
    CHECK(mean(tri, Shape::full(tri.domain())) == 0.0);
}

TEST_CASE("oscillation of the canonical profiles") {
    GridFunction two = generate(GeneratorSpec::two_level(), line(8));
    Shape full = Shape::full(two.domain());
    for (double p : {1.0, 2.0, 3.0, 4.0, 7.5})
        CHECK(osc_p(two, full, p).value == doctest::Approx(1.0).epsilon(1e-14));

    GridFunction ind = generate(GeneratorSpec::indicator(0.5), line(8));
    CHECK(osc_p(ind, full, 1.0).value == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(osc_double(ind, full, 1.0) == doctest::Approx(0.5).epsilon(1e-14));

    double beta = 0.125;
    GridFunction tri = generate(GeneratorSpec::three_level(beta), line(8));
    CHECK(osc_p(tri, full, 1.0).value == doctest::Approx(2.0 * beta).epsilon(1e-14));
    CHECK(osc_double(tri, full, 1.0) ==
          doctest::Approx(4.0 * beta * (1.0 - 2.0 * beta) + 4.0 * beta * beta)
              .epsilon(1e-14));

    CHECK_THROWS_AS(osc_p(two, full, 0.5), std::invalid_argument);
}

TEST_CASE("sqrt(2) relation and oscillation sandwich") {
    GridFunction f = generate(GeneratorSpec::random_step(5, 6), square(8));
    Basis basis(BasisSpec::exhaustive(BasisKind::rectangles), f.domain());
    for (long long i = 0; i < basis.enumerated_count(); i += 7) {
        Shape s = basis.shape_at(i);
        double o2 = osc_p(f, s, 2.0).value;
        CHECK(osc_double(f, s, 2.0) == doctest::Approx(std::sqrt(2.0) * o2).epsilon(1e-10));
        for (double p : {1.0, 2.0, 3.0}) {
            double osc = osc_p(f, s, p).value;
            double dbl = osc_double(f, s, p);
            CHECK(osc <= dbl + 1e-12);
            CHECK(0.5 * dbl <= osc + 1e-12);
        }
    }
}

TEST_CASE("monotonicity in p and translation invariance") {
    GridFunction f = generate(GeneratorSpec::random_step(9, 4), line(32));
    Shape full = Shape::full(f.domain());
    double prev = 0.0;
    for (double p : {1.0, 1.5, 2.0, 3.0, 6.0}) {
        double v = osc_p(f, full, p).value;
        CHECK(v + 1e-12 >= prev);
        prev = v;
    }
    std::vector<double> shifted = f.values();
    for (double& v : shifted) v += 3.5;
    GridFunction g(f.domain(), std::move(shifted));
    for (double p : {1.0, 2.0, 4.0})
        CHECK(osc_p(g, full, p).value ==
              doctest::Approx(osc_p(f, full, p).value).epsilon(1e-12));
}

TEST_CASE("median selection") {
    Domain d = line(4);
    GridFunction f(d, {1.0, 2.0, 3.0, 10.0});
    Shape full = Shape::full(d);
    CHECK(median(f, full) == 2.0);
    double dev = 0.0;
    for (double v : f.values()) dev += std::abs(v - 2.0);
    CHECK(dev / 4.0 == doctest::Approx(2.5).epsilon(1e-15));

    GridFunction ind = generate(GeneratorSpec::indicator(0.25), line(8));
    CHECK(median(ind, Shape::full(ind.domain())) == 0.0);

    GridFunction c(d, {4.0, 4.0, 4.0, 4.0});
    CHECK(median(c, full) == 4.0);
}

TEST_CASE("inf-constant closed forms") {
    for (double alpha : {0.25, 0.125}) {
        GridFunction f = generate(GeneratorSpec::indicator(alpha), line(8));
        InfConstResult r = osc_inf_const(f, Shape::full(f.domain()), 1.0);
        CHECK(r.value == doctest::Approx(alpha).epsilon(1e-14));
        CHECK(r.minimizer == 0.0);
    }

    GridFunction two = generate(GeneratorSpec::two_level(), line(8));
    InfConstResult r = osc_inf_const(two, Shape::full(two.domain()), 1.0);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.minimizer == 0.0);  // midpoint of the minimizer interval [-1, 1]

    GridFunction f = generate(GeneratorSpec::random_step(13, 5), line(16));
    Shape full = Shape::full(f.domain());
    InfConstResult r2 = osc_inf_const(f, full, 2.0);
    CHECK(r2.minimizer == doctest::Approx(mean(f, full)).epsilon(1e-14));
    CHECK(r2.value == doctest::Approx(osc_p(f, full, 2.0).value).epsilon(1e-12));
}

TEST_CASE("inf-constant golden-section agrees with a grid search") {
    GridFunction f = generate(GeneratorSpec::random_step(21, 7), line(16));
    Shape full = Shape::full(f.domain());
    const double p = 3.0;
    InfConstResult r = osc_inf_const(f, full, p);
    double best = 1e300;
    for (int i = 0; i <= 20000; ++i) {
        double c = f.min_value() + (f.max_value() - f.min_value()) * i / 20000.0;
        double acc = 0.0;
        for (double v : f.values()) acc += std::pow(std::abs(v - c), p);
        best = std::min(best, std::pow(acc / static_cast<double>(f.size()), 1.0 / p));
    }
    CHECK(r.value == doctest::Approx(best).epsilon(1e-8));
    // Sandwich against the plain oscillation.
    double osc = osc_p(f, full, p).value;
    CHECK(r.value <= osc + 1e-12);
    CHECK(osc <= 2.0 * r.value + 1e-12);
}

TEST_CASE("norm scans") {
    GridFunction c(line(8), std::vector<double>(8, 2.0));
    CHECK(bmo_norm(c, BasisSpec::exhaustive(BasisKind::intervals), 1.0).value == 0.0);

    GridFunction two = generate(GeneratorSpec::two_level(), line(8));
    NormReport r = bmo_norm(two, BasisSpec::exhaustive(BasisKind::intervals), 1.0);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(osc_p(two, r.argmax, 1.0).value == doctest::Approx(r.value).epsilon(1e-14));
    CHECK(r.shapes_visited == 36);
    CHECK_FALSE(r.sampled);

    // Rectangle norm strictly exceeds the cube norm for the nested sum.
    GridFunction koz = generate(GeneratorSpec::kozlov_sum(3), square(8));
    double rect = bmo_norm(koz, BasisSpec::exhaustive(BasisKind::rectangles), 1.0).value;
    double cube = bmo_norm(koz, BasisSpec::exhaustive(BasisKind::cubes), 1.0).value;
    CHECK(rect > cube);

    // Sampled scans certify lower bounds only.
    GridFunction f = generate(GeneratorSpec::random_step(3, 5), square(8));
    NormReport full = bmo_norm(f, BasisSpec::exhaustive(BasisKind::rectangles), 1.0);
    NormReport part = bmo_norm(f, BasisSpec::sampled(BasisKind::rectangles, 100, 9), 1.0);
    CHECK(part.sampled);
    CHECK(part.value <= full.value + 1e-15);

    NormReport dy = bmo_norm(f, BasisSpec::exhaustive(BasisKind::dyadic), 1.0);
    CHECK(dy.non_covering);
    CHECK(dy.value <= full.value + 1e-15);
}

TEST_CASE("norm scan is thread-count independent") {
    GridFunction f = generate(GeneratorSpec::random_step(77, 6), square(12));
    ScanOptions one{.threads = 1};
    ScanOptions many{.threads = 4};
    NormReport a = bmo_norm(f, BasisSpec::exhaustive(BasisKind::rectangles), 1.0, one);
    NormReport b = bmo_norm(f, BasisSpec::exhaustive(BasisKind::rectangles), 1.0, many);
    CHECK(a.value == b.value);
    CHECK(a.argmax.to_string(f.domain()) == b.argmax.to_string(f.domain()));
}

TEST_CASE("fast p=2 kernel matches the naive evaluation") {
    GridFunction f = generate(GeneratorSpec::random_step(1, 8), square(16));
    PrefixTables tables(f);
    Basis basis(BasisSpec::exhaustive(BasisKind::rectangles), f.domain());
    for (long long i = 0; i < basis.enumerated_count(); i += 11) {
        Shape s = basis.shape_at(i);
        CHECK(tables.osc2(s.lo, s.hi) ==
              doctest::Approx(osc_p(f, s, 2.0).value).epsilon(1e-10));
        // Box sums against a direct accumulation.
        double acc = 0.0;
        for_each_cell(f.domain(), s, [&](long long c) { acc += f.value(c); });
        CHECK(tables.box_sum(s.lo, s.hi) == doctest::Approx(acc).epsilon(1e-12));
    }

    GridFunction two = generate(GeneratorSpec::two_level(), line(8));
    Shape full = Shape::full(two.domain());
    CHECK(osc2_fast(two, full.lo, full.hi) == doctest::Approx(1.0).epsilon(1e-12));
    GridFunction c(line(8), std::vector<double>(8, 3.0));
    CHECK(osc2_fast(c, full.lo, full.hi) == 0.0);
}

TEST_CASE("sup-norm embedding") {
    for (std::uint64_t seed : {2ULL, 4ULL, 6ULL}) {
        GridFunction f = generate(GeneratorSpec::random_step(seed, 5), square(8));
        double m = f.max_abs();
        for (double p : {1.0, 2.0})
            CHECK(bmo_norm(f, BasisSpec::exhaustive(BasisKind::rectangles), p).value <=
                  m + 1e-12);
        for (double p : {3.0, 6.0})
            CHECK(bmo_norm(f, BasisSpec::exhaustive(BasisKind::rectangles), p).value <=
                  2.0 * m + 1e-12);
    }
}

TEST_CASE("comparability transfer between nested shapes") {
    GridFunction f = generate(GeneratorSpec::random_step(31, 6), square(10));
    const double p = 1.0;
    for (int trial = 0; trial < 50; ++trial) {
        int w = 2 + trial % 8, h = 2 + (trial / 2) % 8;
        Shape outer = Shape::box({0, 0, 0}, {w + 1, h + 1, 1});
        Shape inner = Shape::box({0, 0, 0}, {w, h, 1});
        double c = inner.measure(f.domain()) / outer.measure(f.domain());
        CHECK(osc_p(f, inner, p).value <=
              2.0 * std::pow(c, -1.0 / p) * osc_p(f, outer, p).value + 1e-12);
    }
}
