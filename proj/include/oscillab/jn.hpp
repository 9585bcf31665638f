#pragma once

#include <string>
#include <vector>

#include "oscillab/grid.hpp"
#include "oscillab/shapes.hpp"

namespace oscillab {

/// Level-set tail alpha -> |{x in X : |f - f_X| > alpha}|.
struct TailCurve {
    double set_measure = 0.0;          // |X|
    std::vector<double> breakpoints;   // distinct deviations, ascending
    std::vector<double> tail_after;    // tail on [breakpoints[i], breakpoints[i+1])
    std::vector<double> levels;        // requested tabulation grid
    std::vector<double> values;        // tail at each requested level

    double value(double alpha) const;  // exact step evaluation
    double max_deviation() const {
        return breakpoints.empty() ? 0.0 : breakpoints.back();
    }
};

TailCurve tail_curve(const GridFunction& f, const Shape& x, std::vector<double> levels);

/// Exponential envelope tail(alpha) <= c1 |X| exp(-c2 alpha).
struct EnvelopeConstants {
    double c1 = 1.0;
    double c2 = 1.0;
    bool valid = false;
    bool degenerate = false;  // constant function; any c1 > 0 works, 1 returned
};

// Minimal c1 making the envelope hold for every alpha > 0 at the given c2.
EnvelopeConstants fit_envelope(const TailCurve& curve, double c2);

// (c1 p Gamma(p))^{1/p} / c2.
double moment_bound(double c1, double c2, double p);

// Smallest constant with ||f||_{BMO^p} <= c ||f||_inf over intervals:
// 2 sup_{0<h<1} (h(1-h)^p + h^p(1-h))^{1/p}, by multistart golden-section.
double c_infty(double p);

/// Sharp John-Nirenberg interval/rectangle constants kept as reference data.
struct ReferenceConstant {
    std::string name;   // e.g. "c_JN", "C_JN", "c_star", "c_circ"
    double p;           // integrability parameter (0 when not applicable)
    std::string basis;  // "intervals", "rectangles", "dyadic"
    int dimension;      // 0 = any
    double value;
    std::string source;
};

const std::vector<ReferenceConstant>& reference_constants();

// Lookup helper; throws if absent.
double reference_constant(const std::string& name, double p, const std::string& basis,
                          int dimension = 0);

}  // namespace oscillab
