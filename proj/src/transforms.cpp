#include "oscillab/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace oscillab {

TransformSpec TransformSpec::abs() { return TransformSpec{}; }

TransformSpec TransformSpec::max_with(GridFunction g) {
    TransformSpec s;
    s.kind = Kind::max_with;
    s.other = std::make_shared<GridFunction>(std::move(g));
    return s;
}

TransformSpec TransformSpec::min_with(GridFunction g) {
    TransformSpec s;
    s.kind = Kind::min_with;
    s.other = std::make_shared<GridFunction>(std::move(g));
    return s;
}

TransformSpec TransformSpec::trunc_above(double k) {
    TransformSpec s;
    s.kind = Kind::trunc_above;
    s.level = k;
    return s;
}

TransformSpec TransformSpec::trunc_below(double j) {
    TransformSpec s;
    s.kind = Kind::trunc_below;
    s.level = j;
    return s;
}

TransformSpec TransformSpec::trunc_full(double k) {
    if (k < 0.0) throw std::invalid_argument("trunc_full: level must be >= 0");
    TransformSpec s;
    s.kind = Kind::trunc_full;
    s.level = k;
    return s;
}

TransformSpec TransformSpec::holder_power(double alpha, double coefficient) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("holder_power: alpha must lie in (0,1]");
    if (!(coefficient > 0.0))
        throw std::invalid_argument("holder_power: coefficient must be positive");
    TransformSpec s;
    s.kind = Kind::holder_power;
    s.alpha = alpha;
    s.coefficient = coefficient;
    return s;
}

std::string TransformSpec::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::abs: os << "abs"; break;
        case Kind::max_with: os << "max_with"; break;
        case Kind::min_with: os << "min_with"; break;
        case Kind::trunc_above: os << "trunc_above(" << level << ")"; break;
        case Kind::trunc_below: os << "trunc_below(" << level << ")"; break;
        case Kind::trunc_full: os << "trunc_full(" << level << ")"; break;
        case Kind::holder_power:
            os << "holder_power(alpha=" << alpha << ",L=" << coefficient << ")";
            break;
    }
    return os.str();
}

GridFunction apply(const TransformSpec& spec, const GridFunction& f) {
    using Kind = TransformSpec::Kind;
    if ((spec.kind == Kind::max_with || spec.kind == Kind::min_with)) {
        if (!spec.other) throw std::invalid_argument("transform: missing second operand");
        if (!(spec.other->domain() == f.domain()))
            throw std::invalid_argument("transform: domain mismatch");
    }
    std::vector<double> out(f.values().size());
    const auto& v = f.values();
    for (size_t i = 0; i < v.size(); ++i) {
        switch (spec.kind) {
            case Kind::abs: out[i] = std::abs(v[i]); break;
            case Kind::max_with: out[i] = std::max(v[i], spec.other->values()[i]); break;
            case Kind::min_with: out[i] = std::min(v[i], spec.other->values()[i]); break;
            case Kind::trunc_above: out[i] = std::min(v[i], spec.level); break;
            case Kind::trunc_below: out[i] = std::max(v[i], spec.level); break;
            case Kind::trunc_full:
                out[i] = std::clamp(v[i], -spec.level, spec.level);
                break;
            case Kind::holder_power:
                out[i] = spec.coefficient * (v[i] < 0 ? -1.0 : 1.0) *
                         std::pow(std::abs(v[i]), spec.alpha);
                break;
        }
    }
    return GridFunction(f.domain(), std::move(out));
}

RatioReport shapewise_ratio(const TransformSpec& spec, const GridFunction& f,
                            const BasisSpec& basis, double p, const Tolerances& tol) {
    GridFunction g = apply(spec, f);
    Basis family(basis, f.domain());
    RatioReport report;
    report.shapes_visited = family.enumerated_count();
    long long best_index = -1;
    for (long long i = 0; i < family.enumerated_count(); ++i) {
        Shape s = family.shape_at(i);
        double src = osc_p(f, s, p).value;
        if (src <= tol.zero_osc) {
            ++report.shapes_skipped;
            continue;
        }
        double ratio = osc_p(g, s, p).value / src;
        if (best_index < 0 || ratio > report.max_ratio) {
            report.max_ratio = ratio;
            best_index = i;
        }
    }
    if (best_index < 0)
        throw std::invalid_argument("shapewise_ratio: all shapes skipped (source constant)");
    report.argmax = family.shape_at(best_index);
    return report;
}

double effective_holder_coefficient(double alpha, double coefficient, double range) {
    if (range <= 0.0) return coefficient;
    // For the odd power map the seminorm sup |F(x)-F(y)|/|x-y|^alpha on
    // [-M, M] is attained at antipodal points: 2 L M^alpha / (2M)^alpha.
    return std::pow(2.0, 1.0 - alpha) * coefficient;
}

}  // namespace oscillab
