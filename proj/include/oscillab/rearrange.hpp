#pragma once

#include <vector>

#include "oscillab/grid.hpp"
#include "oscillab/shapes.hpp"

namespace oscillab {

/// Decreasing step data t -> |{f > t}| with one breakpoint per distinct value.
struct DistributionTable {
    struct Breakpoint {
        double threshold;  // distinct cell value, stored in decreasing order
        double measure;    // |{f > threshold}|
    };
    std::vector<Breakpoint> breakpoints;
    double total_measure = 0.0;
    bool signed_values = false;  // built from f rather than |f|

    // mu(s) for arbitrary s (right-continuous step evaluation).
    double measure_above(double s) const;
};

// Distribution of f (signed) or |f| (unsigned).
DistributionTable distribution(const GridFunction& f, bool signed_values);

/// A rearranged function lives on the 1D interval (0,|Omega|) with one cell
/// per source cell; on uniform source grids all cell widths coincide.
using RearrangedFunction = GridFunction;

// Values of |f| sorted descending (stable in row-major source order).
RearrangedFunction decreasing_rearrangement(const GridFunction& f);
// Values of f sorted descending.
RearrangedFunction signed_rearrangement(const GridFunction& f);

// True iff the distribution tables agree at every breakpoint of either
// (exact threshold match, measures within 1e-12 of the total measure scale).
bool equimeasurable(const GridFunction& f, const GridFunction& g, bool signed_values);

// Layer-cake evaluation of the p-th moment from an unsigned table.
double cavalieri_moment(const DistributionTable& table, double p);

/// The three routes of the mean-oscillation identity
/// avg_S|f-f_S| = (2/|S|) int_{f>f_S}(f-f_S) = (2/|S|) int_{f<f_S}(f_S-f).
struct OscillationIdentity {
    double lhs;
    double rhs_above;
    double rhs_below;
};

OscillationIdentity oscillation_identity_check(const GridFunction& f, const Shape& s);

struct JnpPolicy {
    enum class Kind { dyadic_partitions, greedy };
    Kind kind = Kind::dyadic_partitions;
    int max_depth = 6;       // dyadic_partitions
    int max_cubes = 64;      // greedy
};

// Certified lower bound on ||f||_{JNp}^p: best value of
// sum |Q_i| (avg_{Q_i}|f - f_{Q_i}|)^p over the searched disjoint families.
double jnp_lower_bound(const GridFunction& f, double p, const JnpPolicy& policy = {});

}  // namespace oscillab
