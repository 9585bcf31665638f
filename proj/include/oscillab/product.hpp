#pragma once

#include <string>
#include <vector>

#include "oscillab/grid.hpp"
#include "oscillab/oscillation.hpp"
#include "oscillab/shapes.hpp"

namespace oscillab {

/// Partition of a domain's axes into k >= 2 contiguous groups, each carrying
/// its own factor basis. The ambient basis is the one used for the full-domain
/// norm; the split is "strong" when every ambient shape is a product of factor
/// shapes (rectangles over interval/rectangle factors) and "weak" otherwise
/// (e.g. cubes over interval factors).
struct FactorSplit {
    struct Group {
        int first_axis = 0;
        int axis_count = 1;
        BasisKind basis = BasisKind::intervals;
    };

    std::vector<Group> groups;
    BasisKind ambient = BasisKind::rectangles;
    bool strong = false;

    int factor_count() const { return static_cast<int>(groups.size()); }

    // One group per axis with interval factors; strong iff ambient is the
    // rectangle basis.
    static FactorSplit axiswise(const Domain& domain,
                                BasisKind ambient = BasisKind::rectangles);

    // Throws unless groups are contiguous, disjoint, cover all axes, and
    // k >= 2.
    void validate(const Domain& domain) const;

    std::string to_string() const;
};

/// Supremum over lattice slices of the factor-domain BMO norm.
struct SliceNormReport {
    double value = 0.0;
    long long slices = 0;           // number of complementary cells visited
    long long argmax_slice = -1;    // linear index over complementary cells
    Shape argmax_shape;             // in factor-domain cell coordinates
};

SliceNormReport slice_norm(const GridFunction& f, const FactorSplit& split, int group,
                           double p, const ScanOptions& opts = {});

/// Two-sided decomposition check: (a) the full norm is at most the sum of the
/// per-factor slice norms; (b) on strong splits, every slice norm is at most
/// 2^{k-1} times the full norm (factor 1 when p = 2).
struct DecompositionReport {
    double p = 1.0;
    double norm = 0.0;                  // full-domain ambient-basis norm
    std::vector<double> slice_norms;    // one per factor group
    double sum_slice_norms = 0.0;
    double max_slice_norm = 0.0;
    double bound_a_margin = 0.0;        // sum - norm, >= -slack when ok
    bool bound_a_ok = false;
    bool bound_b_checked = false;       // strong splits only
    double bound_b_constant = 0.0;      // 2^{k-1}, or 1 for p = 2
    double bound_b_margin = 0.0;        // constant*norm - max slice norm
    bool bound_b_ok = false;
};

// `check_bound_b` on a weak split is an error: the upper bound needs the
// strong decomposition property.
DecompositionReport decomposition_report(const GridFunction& f, const FactorSplit& split,
                                         double p, bool check_bound_b = true,
                                         double slack = 1e-9,
                                         const ScanOptions& opts = {});

}  // namespace oscillab
