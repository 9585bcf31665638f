#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscillab/grid.hpp"
#include "oscillab/shapes.hpp"
#include "oscillab/tolerances.hpp"

namespace oscillab {

/// p-mean oscillation of one function on one shape.
struct OscillationValue {
    double p = 1.0;
    Shape shape;
    double value = 0.0;
};

/// Result of a supremum scan over an enumerated shape family.
struct NormReport {
    double p = 1.0;
    std::string basis;              // BasisSpec string form
    double value = 0.0;             // max oscillation over visited shapes
    Shape argmax;
    long long shapes_visited = 0;
    bool sampled = false;           // sampled scans certify lower bounds only
    bool non_covering = false;      // dyadic family marker
};

// Measure-weighted mean of f over S.
double mean(const GridFunction& f, const Shape& s);

// (avg_S |f - f_S|^p)^{1/p}, exact finite sum. Requires p >= 1.
OscillationValue osc_p(const GridFunction& f, const Shape& s, double p);

// Double-integral form (avg_S avg_S |f(x)-f(y)|^p)^{1/p}. Quadratic in |S|.
double osc_double(const GridFunction& f, const Shape& s, double p);

// Lower median (smallest m with |{f>m}| <= |S|/2 and |{f<m}| <= |S|/2).
double median(const GridFunction& f, const Shape& s);
// Upper median (largest such m); the L1 minimizer set is [lower, upper].
double upper_median(const GridFunction& f, const Shape& s);

struct InfConstResult {
    double value = 0.0;    // inf_c (avg_S |f-c|^p)^{1/p}
    double minimizer = 0.0;
};

// p=1 via medians (midpoint of the minimizer interval), p=2 via the mean,
// other p by golden-section search on the convex objective.
InfConstResult osc_inf_const(const GridFunction& f, const Shape& s, double p,
                             const Tolerances& tol = default_tolerances());

/// Prefix-sum tables of f and f^2 for constant-time box means and a fast
/// p=2 oscillation over boxes (variance identity avg f^2 - (avg f)^2).
/// Entries are kept in compensated double-double form so the corner
/// differences do not lose the low-order bits that the variance identity
/// cancels against; osc2 stays within ~1e-15 of the two-pass evaluation even
/// on shapes where f is constant.
class PrefixTables {
public:
    explicit PrefixTables(const GridFunction& f);

    double box_sum(const std::array<int, kMaxDim>& lo, const std::array<int, kMaxDim>& hi) const;
    double box_sum_sq(const std::array<int, kMaxDim>& lo,
                      const std::array<int, kMaxDim>& hi) const;
    double box_mean(const std::array<int, kMaxDim>& lo,
                    const std::array<int, kMaxDim>& hi) const;
    // osc_p(f, box, 2) in constant time; clamps tiny negative variance to 0
    // and throws if the cancellation exceeds -1e-9 relative (table corruption).
    double osc2(const std::array<int, kMaxDim>& lo, const std::array<int, kMaxDim>& hi) const;

    const Domain& domain() const { return domain_; }

private:
    struct Two {
        double hi = 0.0, lo = 0.0;
    };
    Domain domain_;
    std::array<long long, kMaxDim + 1> stride_{};
    std::vector<Two> sum_, sum_sq_;
    Two inclusion_exclusion(const std::vector<Two>& t,
                            const std::array<int, kMaxDim>& lo,
                            const std::array<int, kMaxDim>& hi) const;
};

// Convenience wrapper matching the one-shot call signature.
double osc2_fast(const GridFunction& f, const std::array<int, kMaxDim>& lo,
                 const std::array<int, kMaxDim>& hi);

struct ScanOptions {
    int threads = 0;          // 0 = auto (OSCILLAB_THREADS caps)
    bool use_fast_p2 = true;  // constant-time kernel for p=2 box scans
};

// Supremum scan: max of osc_p over the enumerated stream.
NormReport bmo_norm(const GridFunction& f, const BasisSpec& basis, double p,
                    const ScanOptions& opts = {});
NormReport bmo_norm(const GridFunction& f, const Basis& basis, double p,
                    const ScanOptions& opts = {});

}  // namespace oscillab
