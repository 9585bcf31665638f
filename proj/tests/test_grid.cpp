#include "doctest.h"

#include <cmath>

#include "oscillab/grid.hpp"

using namespace oscillab;

TEST_CASE("domain construction and measures") {
    Domain d1 = Domain::make({{0.0, 1.0}}, {8});
    CHECK(d1.dim() == 1);
    CHECK(d1.cell_measure() == doctest::Approx(1.0 / 8).epsilon(1e-15));

    Domain d2 = Domain::make({{0.0, 1.0}, {0.0, 1.0}}, {16, 16});
    CHECK(d2.cell_measure() == doctest::Approx(1.0 / 256).epsilon(1e-15));
    CHECK(d2.cell_measure() * static_cast<double>(d2.cell_count()) ==
          doctest::Approx(d2.total_measure()).epsilon(1e-15));

    CHECK_THROWS_AS(Domain::make({{0.0, 1.0}}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(Domain::make({{1.0, 1.0}}, {4}), std::invalid_argument);
    CHECK_THROWS_AS(
        Domain::make({{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}}, {2, 2, 2, 2}),
        std::invalid_argument);
}

TEST_CASE("linear index round trip") {
    Domain d = Domain::make({{0.0, 1.0}, {0.0, 2.0}, {0.0, 3.0}}, {3, 4, 5});
    for (long long i = 0; i < d.cell_count(); ++i)
        CHECK(d.linear_index(d.coords(i)) == i);
    // Last axis varies fastest.
    CHECK(d.linear_index({0, 0, 1}) == 1);
    CHECK(d.linear_index({1, 0, 0}) == 20);
}

TEST_CASE("grid function validation") {
    Domain d = Domain::make({{0.0, 1.0}}, {4});
    CHECK_THROWS_AS(GridFunction(d, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(GridFunction(d, {1.0, 2.0, 3.0, std::nan("")}), std::invalid_argument);
    GridFunction f(d, {1.0, 2.0, 3.0, 4.0});
    CHECK(f.max_abs() == 4.0);
    CHECK(f.min_value() == 1.0);
}

TEST_CASE("two-level profile") {
    GridFunction f = generate(GeneratorSpec::two_level(), Domain::make({{0.0, 1.0}}, {8}));
    std::vector<double> expected{1, 1, 1, 1, -1, -1, -1, -1};
    CHECK(f.values() == expected);
    double sum = 0.0;
    for (double v : f.values()) sum += v;
    CHECK(sum == 0.0);
    CHECK_THROWS_AS(generate(GeneratorSpec::two_level(), Domain::make({{0.0, 1.0}}, {7})),
                    std::invalid_argument);
}

TEST_CASE("indicator and three-level profiles") {
    GridFunction ind =
        generate(GeneratorSpec::indicator(0.5), Domain::make({{0.0, 1.0}}, {4}));
    CHECK(ind.values() == std::vector<double>{1, 1, 0, 0});

    GridFunction tri =
        generate(GeneratorSpec::three_level(0.25), Domain::make({{0.0, 1.0}}, {8}));
    CHECK(tri.values() == std::vector<double>{1, 1, 0, 0, 0, 0, -1, -1});

    CHECK_THROWS_AS(
        generate(GeneratorSpec::indicator(0.3), Domain::make({{0.0, 1.0}}, {64})),
        std::invalid_argument);
    CHECK_THROWS_AS(
        generate(GeneratorSpec::three_level(0.5), Domain::make({{0.0, 1.0}}, {8})),
        std::invalid_argument);
}

TEST_CASE("log-reciprocal cell averages integrate exactly") {
    Domain d = Domain::make({{0.0, 1.0}}, {256});
    GridFunction f = generate(GeneratorSpec::log_reciprocal(), d);
    double integral = 0.0;
    for (double v : f.values()) integral += v * d.cell_measure();
    // int_0^1 log(1/x) dx = 1.
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-12));
    for (long long i = 1; i < f.size(); ++i) CHECK(f.value(i) < f.value(i - 1));
}

TEST_CASE("nested-indicator sum") {
    Domain d = Domain::make({{0.0, 1.0}, {0.0, 1.0}}, {4, 4});
    GridFunction f1 = generate(GeneratorSpec::kozlov_sum(1), d);
    for (double v : f1.values()) CHECK(v == 1.0);  // chi_{(0,1)x(0,1)}

    GridFunction f2 = generate(GeneratorSpec::kozlov_sum(2), d);
    for (long long i = 0; i < f2.size(); ++i) {
        auto c = d.coords(i);
        double expected = 1.0 + ((c[0] < 2 && c[1] < 2) ? 1.0 : 0.0);
        CHECK(f2.value(i) == expected);
        CHECK(f2.value(i) >= f1.value(i));  // monotone in the term count
    }

    // Non-aligned cuts become exact cell averages of the indicator.
    GridFunction f3 = generate(GeneratorSpec::kozlov_sum(3), d);
    double total = 0.0;
    for (double v : f3.values()) total += v * d.cell_measure();
    CHECK(total == doctest::Approx(1.0 + 0.5 * 0.5 + 0.25 / 3.0).epsilon(1e-12));
}

TEST_CASE("separable sum") {
    Domain d = Domain::make({{0.0, 1.0}, {0.0, 1.0}}, {4, 4});
    GridFunction f = generate(
        GeneratorSpec::separable_sum(GeneratorSpec::indicator(0.25), GeneratorSpec::two_level()),
        d);
    for (long long i = 0; i < f.size(); ++i) {
        auto c = d.coords(i);
        double gx = c[0] < 1 ? 1.0 : 0.0;
        double hy = c[1] < 2 ? 1.0 : -1.0;
        CHECK(f.value(i) == gx + hy);
    }
}

TEST_CASE("random step determinism") {
    Domain d = Domain::make({{0.0, 1.0}}, {64});
    GridFunction a = generate(GeneratorSpec::random_step(42, 5), d);
    GridFunction b = generate(GeneratorSpec::random_step(42, 5), d);
    GridFunction c = generate(GeneratorSpec::random_step(43, 5), d);
    CHECK(a.values() == b.values());
    CHECK(a.values() != c.values());
    for (double v : a.values()) {
        CHECK(v >= -1.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("generator parsing") {
    CHECK(parse_generator("two_level").kind == GeneratorSpec::Kind::two_level);
    CHECK(parse_generator("indicator(0.25)").fraction == 0.25);
    CHECK(parse_generator("kozlov_sum(4)").terms == 4);
    GeneratorSpec rs = parse_generator("random_step(seed=7,levels=3)");
    CHECK(rs.seed == 7);
    CHECK(rs.levels == 3);
    GeneratorSpec sep = parse_generator("separable_sum(indicator(0.5),two_level)");
    REQUIRE(sep.g);
    REQUIRE(sep.h);
    CHECK(sep.g->kind == GeneratorSpec::Kind::indicator);
    CHECK(sep.h->kind == GeneratorSpec::Kind::two_level);
    CHECK_THROWS_AS(parse_generator("warble"), std::invalid_argument);
    // Round trip through the string form.
    CHECK(parse_generator(rs.to_string()).to_string() == rs.to_string());
}
