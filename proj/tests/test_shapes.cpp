#include "doctest.h"

#include <cmath>
#include <numbers>
#include <set>

#include "oscillab/shapes.hpp"

using namespace oscillab;

TEST_CASE("interval family on 4 cells has 10 members") {
    Domain d = Domain::make({{0.0, 1.0}}, {4});
    Basis basis(BasisSpec::exhaustive(BasisKind::intervals), d);
    CHECK(basis.family_size() == 10);
    // Deterministic order: sizes ascending, anchors ascending.
    CHECK(basis.shape_at(0).lo[0] == 0);
    CHECK(basis.shape_at(0).hi[0] == 1);
    CHECK(basis.shape_at(9).hi[0] == 4);
    CHECK(basis.shape_at(9).cell_count(d) == 4);
}

TEST_CASE("rectangle and cube family sizes on 3x3") {
    Domain d = Domain::make({{0.0, 1.0}, {0.0, 1.0}}, {3, 3});
    CHECK(Basis(BasisSpec::exhaustive(BasisKind::rectangles), d).family_size() == 36);
    CHECK(Basis(BasisSpec::exhaustive(BasisKind::cubes), d).family_size() == 14);
}

TEST_CASE("rectangle count formula on m x m grids") {
    for (int m : {2, 4, 7}) {
        Domain d = Domain::make({{0.0, 1.0}, {0.0, 1.0}}, {m, m});
        long long t = static_cast<long long>(m) * (m + 1) / 2;
        CHECK(Basis(BasisSpec::exhaustive(BasisKind::rectangles), d).family_size() == t * t);
    }
}

TEST_CASE("cover property") {
    Domain d = Domain::make({{0.0, 1.0}, {0.0, 1.0}}, {4, 4});
    for (BasisKind kind : {BasisKind::rectangles, BasisKind::cubes, BasisKind::balls}) {
        Basis basis(BasisSpec::exhaustive(kind), d);
        std::set<long long> covered;
        basis.for_each([&](const Shape& s) {
            for_each_cell(d, s, [&](long long c) { covered.insert(c); });
        });
        CHECK(static_cast<long long>(covered.size()) == d.cell_count());
        CHECK_FALSE(basis.non_covering());
    }
    CHECK(Basis(BasisSpec::exhaustive(BasisKind::dyadic), d).non_covering());
}

TEST_CASE("dyadic family sizes") {
    Domain d8 = Domain::make({{0.0, 1.0}}, {8});
    CHECK(Basis(BasisSpec::exhaustive(BasisKind::dyadic), d8).family_size() == 15);
    Domain d12 = Domain::make({{0.0, 1.0}}, {12});
    // Levels 0,1,2 (sides 12,6,3); side 3 is odd, so splitting stops.
    CHECK(Basis(BasisSpec::exhaustive(BasisKind::dyadic), d12).family_size() == 7);
}

TEST_CASE("dimension compatibility errors") {
    Domain d2 = Domain::make({{0.0, 1.0}, {0.0, 1.0}}, {4, 4});
    CHECK_THROWS_AS(Basis(BasisSpec::exhaustive(BasisKind::intervals), d2),
                    std::invalid_argument);
}

TEST_CASE("sampled shapes form a subset of the exhaustive stream") {
    Domain d = Domain::make({{0.0, 1.0}, {0.0, 1.0}}, {8, 8});
    Basis exhaustive(BasisSpec::exhaustive(BasisKind::rectangles), d);
    Basis sampled(BasisSpec::sampled(BasisKind::rectangles, 50, 1), d);
    CHECK(sampled.enumerated_count() == 50);
    CHECK(sampled.family_size() == exhaustive.family_size());

    std::set<std::string> all;
    exhaustive.for_each([&](const Shape& s) { all.insert(s.to_string(d)); });
    sampled.for_each([&](const Shape& s) { CHECK(all.count(s.to_string(d)) == 1); });

    // Same seed, same sample.
    Basis again(BasisSpec::sampled(BasisKind::rectangles, 50, 1), d);
    for (long long i = 0; i < 50; ++i)
        CHECK(sampled.shape_at(i).to_string(d) == again.shape_at(i).to_string(d));

    CHECK_THROWS_AS(
        Basis(BasisSpec::sampled(BasisKind::rectangles, exhaustive.family_size() + 1, 1), d),
        std::invalid_argument);
}

TEST_CASE("ball masks sit between inscribed and bounding cubes") {
    Domain d = Domain::make({{0.0, 1.0}, {0.0, 1.0}}, {9, 9});
    Basis basis(BasisSpec::exhaustive(BasisKind::balls), d);
    CHECK(basis.family_size() > 0);
    const double w = d.cell_width(0);
    basis.for_each([&](const Shape& s) {
        REQUIRE(s.kind == Shape::Kind::ball_mask);
        CHECK(s.cell_count(d) >= 1);
        // Bounding box side (one boundary layer of slack).
        long long bound = 1;
        for (int a = 0; a < 2; ++a) bound *= (s.hi[a] - s.lo[a]);
        CHECK(s.cell_count(d) <= bound);
        // Inscribed square of half-diagonal r: side r*sqrt(2), minus a layer.
        int inner = std::max(
            0, static_cast<int>(std::floor(s.radius * std::numbers::sqrt2 / w)) - 1);
        CHECK(s.cell_count(d) >= static_cast<long long>(inner) * inner);
    });
}

TEST_CASE("centered balls share one center") {
    Domain d = Domain::make({{0.0, 1.0}, {0.0, 1.0}}, {9, 9});
    Basis basis(BasisSpec::exhaustive(BasisKind::centered_balls), d);
    CHECK(basis.family_size() > 1);
    long long prev_cells = 0;
    basis.for_each([&](const Shape& s) {
        CHECK(s.center[0] == 4);
        CHECK(s.center[1] == 4);
        CHECK(s.cell_count(d) >= prev_cells);  // radii enumerate ascending
        prev_cells = s.cell_count(d);
    });
}

TEST_CASE("unit ball volumes") {
    CHECK(unit_ball_volume(1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(unit_ball_volume(2) == doctest::Approx(std::numbers::pi).epsilon(1e-14));
    CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * std::numbers::pi / 3.0).epsilon(1e-14));
}

TEST_CASE("comparability constants") {
    ComparabilityReport bq = comparability_constants(BasisKind::balls, BasisKind::cubes, 2);
    CHECK(bq.lower == doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-14));
    CHECK(bq.upper == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-14));

    ComparabilityReport qb = comparability_constants(BasisKind::cubes, BasisKind::balls, 3);
    double w3 = unit_ball_volume(3);
    CHECK(qb.lower == doctest::Approx(std::pow(2.0 / std::sqrt(3.0), 3) / w3).epsilon(1e-14));
    CHECK(qb.upper == doctest::Approx(8.0 / w3).epsilon(1e-14));

    ComparabilityReport qr =
        comparability_constants(BasisKind::cubes, BasisKind::rectangles, 2);
    CHECK(qr.lower == 1.0);
    CHECK(qr.upper == 1.0);

    CHECK_THROWS_AS(comparability_constants(BasisKind::rectangles, BasisKind::cubes, 2),
                    std::invalid_argument);
}

TEST_CASE("basis spec parsing") {
    BasisSpec r = parse_basis("rectangles:exhaustive");
    CHECK(r.kind == BasisKind::rectangles);
    CHECK(r.policy == BasisSpec::Policy::exhaustive);

    BasisSpec b = parse_basis("balls:sampled=10000,seed=42");
    CHECK(b.kind == BasisKind::balls);
    CHECK(b.sample_count == 10000);
    CHECK(b.seed == 42);

    BasisSpec c = parse_basis("cubes:minside=2");
    CHECK(c.min_side == 2);

    CHECK_THROWS_AS(parse_basis("pentagons:exhaustive"), std::invalid_argument);
    CHECK(parse_basis(b.to_string()).to_string() == b.to_string());
}

TEST_CASE("min and max side limits") {
    Domain d = Domain::make({{0.0, 1.0}}, {6});
    Basis basis(BasisSpec::exhaustive(BasisKind::intervals, 2, 3), d);
    basis.for_each([&](const Shape& s) {
        long long n = s.cell_count(d);
        CHECK(n >= 2);
        CHECK(n <= 3);
    });
    CHECK(basis.family_size() == 5 + 4);
}
