#include "oscillab/jn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oscillab/oscillation.hpp"

namespace oscillab {

double TailCurve::value(double alpha) const {
    // Largest breakpoint <= alpha determines the step.
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), alpha);
    if (it == breakpoints.begin()) return set_measure;
    return tail_after[static_cast<size_t>(it - breakpoints.begin()) - 1];
}

TailCurve tail_curve(const GridFunction& f, const Shape& x, std::vector<double> levels) {
    for (size_t i = 1; i < levels.size(); ++i)
        if (levels[i] < levels[i - 1])
            throw std::invalid_argument("tail_curve: levels must be ascending");

    const double fx = mean(f, x);
    const double w = f.domain().cell_measure();
    std::vector<double> dev;
    for_each_cell(f.domain(), x, [&](long long c) {
        dev.push_back(std::abs(f.value(c) - fx));
    });
    std::sort(dev.begin(), dev.end());

    TailCurve curve;
    curve.set_measure = static_cast<double>(dev.size()) * w;
    size_t i = 0;
    while (i < dev.size()) {
        size_t j = i;
        while (j < dev.size() && dev[j] == dev[i]) ++j;
        curve.breakpoints.push_back(dev[i]);
        curve.tail_after.push_back(static_cast<double>(dev.size() - j) * w);
        i = j;
    }
    curve.levels = std::move(levels);
    curve.values.reserve(curve.levels.size());
    for (double a : curve.levels) curve.values.push_back(curve.value(a));
    return curve;
}

EnvelopeConstants fit_envelope(const TailCurve& curve, double c2) {
    if (!(c2 > 0.0)) throw std::invalid_argument("fit_envelope: c2 must be positive");
    if (curve.breakpoints.empty()) throw std::invalid_argument("fit_envelope: empty curve");

    EnvelopeConstants env;
    env.c2 = c2;
    if (curve.max_deviation() == 0.0) {
        // Constant function: tail vanishes for every alpha > 0, any c1 works.
        env.c1 = 1.0;
        env.valid = true;
        env.degenerate = true;
        return env;
    }
    // The tail is constant between breakpoints while the envelope grows, so
    // the binding alpha on each step is its right endpoint.
    double c1 = 0.0;
    double prev_tail = curve.set_measure;
    for (size_t i = 0; i < curve.breakpoints.size(); ++i) {
        if (prev_tail > 0.0)
            c1 = std::max(c1, prev_tail * std::exp(c2 * curve.breakpoints[i]) /
                                  curve.set_measure);
        prev_tail = curve.tail_after[i];
    }
    env.c1 = c1;
    env.valid = true;
    return env;
}

double moment_bound(double c1, double c2, double p) {
    if (!(c1 > 0.0 && c2 > 0.0))
        throw std::invalid_argument("moment_bound: constants must be positive");
    if (p < 1.0) throw std::invalid_argument("moment_bound: p must be >= 1");
    return std::exp((std::log(c1) + std::log(p) + std::lgamma(p)) / p) / c2;
}

namespace {

double leonchik_term(double h, double p) {
    return h * std::pow(1.0 - h, p) + std::pow(h, p) * (1.0 - h);
}

}  // namespace

double c_infty(double p) {
    if (p < 1.0) throw std::invalid_argument("c_infty: p must be >= 1");
    // Coarse bracket first (guards against flat/multimodal stretches), then
    // golden-section refinement.
    const int grid = 4096;
    double best_h = 0.5, best_q = leonchik_term(0.5, p);
    for (int i = 1; i < grid; ++i) {
        double h = static_cast<double>(i) / grid;
        double q = leonchik_term(h, p);
        if (q > best_q) {
            best_q = q;
            best_h = h;
        }
    }
    double a = std::max(0.0, best_h - 2.0 / grid);
    double b = std::min(1.0, best_h + 2.0 / grid);
    constexpr double phi = 0.6180339887498949;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = leonchik_term(x1, p), f2 = leonchik_term(x2, p);
    while (b - a > 1e-14) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = leonchik_term(x1, p);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = leonchik_term(x2, p);
        }
    }
    double q = std::max(best_q, leonchik_term((a + b) / 2.0, p));
    return 2.0 * std::pow(q, 1.0 / p);
}

const std::vector<ReferenceConstant>& reference_constants() {
    static const std::vector<ReferenceConstant> table = [] {
        const double e = std::exp(1.0);
        std::vector<ReferenceConstant> t;
        t.push_back({"c_JN", 1, "intervals", 1, 0.5 * std::exp(4.0 / e), "Lerner"});
        t.push_back({"C_JN", 1, "intervals", 1, 2.0 / e, "Korenovskii"});
        t.push_back({"c_JN", 2, "intervals", 1, 4.0 / (e * e), "Vasyunin-Volberg"});
        t.push_back({"C_JN", 2, "intervals", 1, 1.0, "Vasyunin-Volberg"});
        t.push_back({"C_JN", 1, "rectangles", 2, 2.0 / e, "Korenovskii"});
        for (int n = 1; n <= 3; ++n) {
            t.push_back({"c_circ_bound", 1, "dyadic", n, std::pow(2.0, n), "Nikolidakis"});
            t.push_back({"c_star", 2, "dyadic", n,
                         (1.0 + std::pow(2.0, n)) / std::pow(2.0, 1.0 + n / 2.0),
                         "Stolyarov-Vasyunin-Zatitskiy"});
        }
        return t;
    }();
    return table;
}

double reference_constant(const std::string& name, double p, const std::string& basis,
                          int dimension) {
    for (const auto& rc : reference_constants())
        if (rc.name == name && rc.p == p && rc.basis == basis &&
            (dimension == 0 || rc.dimension == dimension))
            return rc.value;
    throw std::invalid_argument("reference_constant: no entry for " + name);
}

}  // namespace oscillab
