#pragma once

#include <memory>
#include <string>

#include "oscillab/grid.hpp"
#include "oscillab/oscillation.hpp"
#include "oscillab/shapes.hpp"

namespace oscillab {

/// Pointwise operator on grid functions.
struct TransformSpec {
    enum class Kind {
        abs,
        max_with,      // cellwise max with g
        min_with,      // cellwise min with g
        trunc_above,   // min(f, k)
        trunc_below,   // max(f, j)
        trunc_full,    // clamp to [-k, k]
        holder_power,  // L * sign(x) * |x|^alpha
    };

    Kind kind = Kind::abs;
    double level = 0.0;                     // k or j
    double alpha = 1.0, coefficient = 1.0;  // holder_power
    std::shared_ptr<const GridFunction> other;  // max_with / min_with

    static TransformSpec abs();
    static TransformSpec max_with(GridFunction g);
    static TransformSpec min_with(GridFunction g);
    static TransformSpec trunc_above(double k);
    static TransformSpec trunc_below(double j);
    static TransformSpec trunc_full(double k);
    static TransformSpec holder_power(double alpha, double coefficient);

    std::string to_string() const;
};

GridFunction apply(const TransformSpec& spec, const GridFunction& f);

/// Max over shapes of osc_p(transformed)/osc_p(source); shapes whose source
/// oscillation is below the zero threshold are skipped and counted.
struct RatioReport {
    double max_ratio = 0.0;
    Shape argmax;
    long long shapes_visited = 0;
    long long shapes_skipped = 0;
};

RatioReport shapewise_ratio(const TransformSpec& spec, const GridFunction& f,
                            const BasisSpec& basis, double p,
                            const Tolerances& tol = default_tolerances());

// Effective Holder coefficient of x -> L sign(x)|x|^alpha on [-range, range]:
// the smallest L' with |F(x)-F(y)| <= L'|x-y|^alpha there.
double effective_holder_coefficient(double alpha, double coefficient, double range);

}  // namespace oscillab
