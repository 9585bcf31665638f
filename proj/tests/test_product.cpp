#include "doctest.h"

#include <cmath>
#include <vector>

#include "oscillab/grid.hpp"
#include "oscillab/oscillation.hpp"
#include "oscillab/product.hpp"

using namespace oscillab;

namespace {

Domain square(int cells) {
    return Domain::make({{0.0, 1.0}, {0.0, 1.0}}, {cells, cells});
}

// Reference slice norm for 2D axiswise splits: extract every row (group 0) or
// column (group 1) as a 1D function and take the largest interval-basis norm.
double naive_slice_norm(const GridFunction& f, int group, double p) {
    const Domain& d = f.domain();
    int along = group == 0 ? d.cells(0) : d.cells(1);
    int across = group == 0 ? d.cells(1) : d.cells(0);
    Domain factor = Domain::make({d.extent(group)}, {along});
    double best = 0.0;
    for (int s = 0; s < across; ++s) {
        std::vector<double> row(along);
        for (int i = 0; i < along; ++i)
            row[i] = group == 0 ? f.value(d.linear_index({i, s}))
                                : f.value(d.linear_index({s, i}));
        best = std::max(best,
                        bmo_norm(GridFunction(factor, std::move(row)),
                                 BasisSpec::exhaustive(BasisKind::intervals), p)
                            .value);
    }
    return best;
}

}  // namespace

TEST_CASE("split validation") {
    Domain d = square(4);
    FactorSplit ax = FactorSplit::axiswise(d);
    CHECK(ax.factor_count() == 2);
    CHECK(ax.strong);
    ax.validate(d);

    FactorSplit weak = FactorSplit::axiswise(d, BasisKind::cubes);
    CHECK_FALSE(weak.strong);

    FactorSplit one;
    one.groups = {{0, 2, BasisKind::rectangles}};
    CHECK_THROWS_AS(one.validate(d), std::invalid_argument);

    FactorSplit gap;
    gap.groups = {{0, 1, BasisKind::intervals}, {2, 1, BasisKind::intervals}};
    CHECK_THROWS_AS(gap.validate(d), std::invalid_argument);

    Domain d1 = Domain::make({{0.0, 1.0}}, {8});
    CHECK_THROWS_AS(FactorSplit::axiswise(d1).validate(d1), std::invalid_argument);
}

TEST_CASE("slice norms") {
    Domain d = square(8);
    // Separable sum: each slice of one factor differs from the corresponding
    // 1D factor function by a constant, so the slice norm equals the factor
    // norm.
    GridFunction f = generate(
        GeneratorSpec::separable_sum(GeneratorSpec::three_level(0.25),
                                     GeneratorSpec::indicator(0.5)),
        d);
    FactorSplit split = FactorSplit::axiswise(d);
    Domain line = Domain::make({{0.0, 1.0}}, {8});
    GridFunction g = generate(GeneratorSpec::three_level(0.25), line);
    GridFunction h = generate(GeneratorSpec::indicator(0.5), line);
    BasisSpec intervals = BasisSpec::exhaustive(BasisKind::intervals);
    CHECK(slice_norm(f, split, 0, 1.0).value ==
          doctest::Approx(bmo_norm(g, intervals, 1.0).value).epsilon(1e-12));
    CHECK(slice_norm(f, split, 1, 1.0).value ==
          doctest::Approx(bmo_norm(h, intervals, 1.0).value).epsilon(1e-12));

    GridFunction c(d, std::vector<double>(64, 2.0));
    CHECK(slice_norm(c, split, 0, 1.0).value == 0.0);

    CHECK_THROWS_AS(slice_norm(f, split, 2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(slice_norm(f, split, -1, 1.0), std::invalid_argument);
}

TEST_CASE("slice norms match a naive row/column scan") {
    Domain d = square(12);
    FactorSplit split = FactorSplit::axiswise(d);
    for (std::uint64_t seed : {8ULL, 21ULL}) {
        GridFunction f = generate(GeneratorSpec::random_step(seed, 6), d);
        for (int group : {0, 1})
            for (double p : {1.0, 2.0}) {
                SliceNormReport r = slice_norm(f, split, group, p);
                CHECK(r.slices == 12);
                CHECK(r.value ==
                      doctest::Approx(naive_slice_norm(f, group, p)).epsilon(1e-12));
            }
    }
}

TEST_CASE("decomposition bounds") {
    Domain d = square(8);
    GridFunction f = generate(
        GeneratorSpec::separable_sum(GeneratorSpec::three_level(0.25),
                                     GeneratorSpec::indicator(0.5)),
        d);
    FactorSplit split = FactorSplit::axiswise(d);
    DecompositionReport r = decomposition_report(f, split, 1.0);
    CHECK(r.bound_a_ok);
    CHECK(r.bound_b_checked);
    CHECK(r.bound_b_ok);
    CHECK(r.bound_b_constant == 2.0);  // 2^{k-1} with k = 2
    CHECK(r.sum_slice_norms ==
          doctest::Approx(r.slice_norms[0] + r.slice_norms[1]).epsilon(1e-15));
    // The ambient rectangle norm dominates each factor slice norm directly.
    CHECK(r.norm + 1e-12 >= r.max_slice_norm / r.bound_b_constant);

    DecompositionReport r2 = decomposition_report(f, split, 2.0);
    CHECK(r2.bound_b_constant == 1.0);
    CHECK(r2.bound_a_ok);
    CHECK(r2.bound_b_ok);

    GridFunction koz = generate(GeneratorSpec::kozlov_sum(4), square(16));
    FactorSplit ks = FactorSplit::axiswise(koz.domain());
    for (double p : {1.0, 2.0}) {
        DecompositionReport rk = decomposition_report(koz, ks, p);
        CHECK(rk.bound_a_ok);
        CHECK(rk.bound_b_ok);
    }

    GridFunction c(d, std::vector<double>(64, 1.0));
    DecompositionReport rc = decomposition_report(c, split, 1.0);
    CHECK(rc.norm == 0.0);
    CHECK(rc.sum_slice_norms == 0.0);
    CHECK(rc.bound_a_ok);
    CHECK(rc.bound_b_ok);

    FactorSplit weak = FactorSplit::axiswise(d, BasisKind::cubes);
    CHECK_THROWS_AS(decomposition_report(f, weak, 1.0, true), std::invalid_argument);
    DecompositionReport rw = decomposition_report(f, weak, 1.0, false);
    CHECK(rw.bound_a_ok);
    CHECK_FALSE(rw.bound_b_checked);
}
