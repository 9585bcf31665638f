#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oscillab/grid.hpp"

namespace oscillab {

/// One member of a shape basis: an axis-aligned half-open cell-range box,
/// or a discrete ball mask (cell included iff its center lies within the radius).
struct Shape {
    enum class Kind { box, ball_mask };

    Kind kind = Kind::box;
    std::array<int, kMaxDim> lo{0, 0, 0};  // box ranges; bounding box for masks
    std::array<int, kMaxDim> hi{0, 0, 0};
    std::vector<long long> mask;           // linear cell indices (ball_mask only)
    std::array<int, kMaxDim> center{0, 0, 0};
    double radius = 0.0;                   // physical units (ball_mask only)

    long long cell_count(const Domain& d) const;
    double measure(const Domain& d) const { return cell_count(d) * d.cell_measure(); }
    bool contains_cell(const Domain& d, long long linear) const;

    static Shape box(const std::array<int, kMaxDim>& lo, const std::array<int, kMaxDim>& hi);
    static Shape full(const Domain& d);

    std::string to_string(const Domain& d) const;
};

// Visits every cell of the shape as a linear index.
void for_each_cell(const Domain& d, const Shape& s, const std::function<void(long long)>& fn);

enum class BasisKind { intervals, cubes, rectangles, balls, centered_balls, dyadic };

std::string to_string(BasisKind kind);

struct BasisSpec {
    enum class Policy { exhaustive, sampled };

    BasisKind kind = BasisKind::intervals;
    int min_side = 1;        // in cells; for balls, the diameter in min-cell-widths
    int max_side = 0;        // 0 = no upper limit
    Policy policy = Policy::exhaustive;
    long long sample_count = 0;
    std::uint64_t seed = 0;

    static BasisSpec exhaustive(BasisKind kind, int min_side = 1, int max_side = 0);
    static BasisSpec sampled(BasisKind kind, long long count, std::uint64_t seed);

    std::string to_string() const;
};

// CLI syntax, e.g. "rectangles:exhaustive", "balls:sampled=10000,seed=42",
// "cubes:minside=2".
BasisSpec parse_basis(const std::string& text);

/// Enumerable shape family over a domain. Shapes are produced in a fixed
/// deterministic order (lexicographic in (sizes, anchor)); sampled policies
/// draw uniformly without replacement from the exhaustive index set.
class Basis {
public:
    Basis(BasisSpec spec, const Domain& domain);

    const BasisSpec& spec() const { return spec_; }
    const Domain& domain() const { return domain_; }

    long long family_size() const { return family_size_; }   // exhaustive count
    long long enumerated_count() const;                      // after sampling
    Shape shape_at(long long i) const;                       // i < enumerated_count()
    // Shape for an index into the full exhaustive family.
    Shape exhaustive_shape_at(long long i) const;

    // The dyadic family is not an open cover, hence not a basis in the strict
    // sense; reports over it carry this marker.
    bool non_covering() const { return spec_.kind == BasisKind::dyadic; }

    /// Layout of a box family for tight scan loops: shapes of one side vector,
    /// anchors in row-major order (last axis fastest) stepping by `step` cells.
    struct GroupView {
        std::array<int, kMaxDim> side{1, 1, 1};
        std::array<int, kMaxDim> step{1, 1, 1};
        std::array<long long, kMaxDim> counts{1, 1, 1};  // anchors per axis
        long long anchors = 0;
        long long offset = 0;  // exhaustive index of the first placement
    };
    // Empty for ball kinds.
    std::vector<GroupView> group_views() const;

    void for_each(const std::function<void(const Shape&)>& fn) const;

private:
    struct SizeGroup {
        std::array<int, kMaxDim> side{1, 1, 1};
        long long anchors = 0;   // number of placements
        long long offset = 0;    // cumulative index of the first placement
    };

    BasisSpec spec_;
    Domain domain_;
    bool box_kind_ = true;
    std::vector<SizeGroup> groups_;                       // box kinds
    std::vector<std::pair<long long, int>> ball_index_;   // (center cell, radius step)
    std::vector<long long> sample_;                       // sorted exhaustive indices
    long long family_size_ = 0;

    Shape ball_shape(long long center, int radius_step) const;
};

/// Lower/upper comparability constants between two basis kinds (Definition 2.2
/// style: c|S2| <= |S| <= C|S1| for sandwiching shapes S1 c S c S2).
struct ComparabilityReport {
    BasisKind from, to;
    int dimension;
    double lower;   // c
    double upper;   // C
};

// Volume of the unit ball in R^n.
double unit_ball_volume(int n);

// Supported pairs: (balls,cubes), (cubes,balls), (cubes,rectangles).
// Throws for anything else, including (rectangles,cubes) which fails.
ComparabilityReport comparability_constants(BasisKind a, BasisKind b, int n);

}  // namespace oscillab
