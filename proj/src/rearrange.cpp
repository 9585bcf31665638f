#include "oscillab/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "oscillab/oscillation.hpp"

namespace oscillab {

double DistributionTable::measure_above(double s) const {
    // breakpoints sorted by decreasing threshold; |{f > t_i}| counts the
    // values at breakpoints 0..i-1.
    size_t lo = 0, hi = breakpoints.size();
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (breakpoints[mid].threshold > s) lo = mid + 1;
        else hi = mid;
    }
    if (lo == breakpoints.size()) return total_measure;
    return breakpoints[lo].measure;
}

DistributionTable distribution(const GridFunction& f, bool signed_values) {
    std::vector<double> vals = f.values();
    if (!signed_values)
        for (double& v : vals) v = std::abs(v);
    std::sort(vals.begin(), vals.end(), std::greater<>());

    const double w = f.domain().cell_measure();
    DistributionTable table;
    table.signed_values = signed_values;
    table.total_measure = f.domain().total_measure();
    size_t i = 0;
    while (i < vals.size()) {
        size_t j = i;
        while (j < vals.size() && vals[j] == vals[i]) ++j;
        table.breakpoints.push_back({vals[i], static_cast<double>(i) * w});
        i = j;
    }
    return table;
}

namespace {

RearrangedFunction rearrange_impl(const GridFunction& f, bool absolute) {
    std::vector<double> vals = f.values();
    if (absolute)
        for (double& v : vals) v = std::abs(v);
    // Stable descending sort: row-major source index breaks ties.
    std::stable_sort(vals.begin(), vals.end(), std::greater<>());
    Domain line = Domain::make({{0.0, f.domain().total_measure()}},
                               {static_cast<int>(f.domain().cell_count())});
    return GridFunction(line, std::move(vals));
}

}  // namespace

RearrangedFunction decreasing_rearrangement(const GridFunction& f) {
    return rearrange_impl(f, true);
}

RearrangedFunction signed_rearrangement(const GridFunction& f) {
    return rearrange_impl(f, false);
}

bool equimeasurable(const GridFunction& f, const GridFunction& g, bool signed_values) {
    double mf = f.domain().total_measure(), mg = g.domain().total_measure();
    if (std::abs(mf - mg) > 1e-12 * std::max(1.0, std::abs(mf)))
        throw std::invalid_argument("equimeasurable: total measure mismatch");
    DistributionTable tf = distribution(f, signed_values);
    DistributionTable tg = distribution(g, signed_values);
    const double tol = 1e-12 * std::max(1.0, mf);
    for (const auto& bp : tf.breakpoints)
        if (std::abs(tg.measure_above(bp.threshold) - bp.measure) > tol) return false;
    for (const auto& bp : tg.breakpoints)
        if (std::abs(tf.measure_above(bp.threshold) - bp.measure) > tol) return false;
    return true;
}

double cavalieri_moment(const DistributionTable& table, double p) {
    if (p <= 0.0) throw std::invalid_argument("cavalieri_moment: p must be positive");
    if (table.signed_values)
        throw std::invalid_argument("cavalieri_moment: needs an unsigned table");
    for (const auto& bp : table.breakpoints)
        if (bp.threshold < 0.0)
            throw std::invalid_argument("cavalieri_moment: negative threshold");

    // Closed form per breakpoint interval: mu is constant between levels.
    std::vector<double> levels{0.0};
    for (auto it = table.breakpoints.rbegin(); it != table.breakpoints.rend(); ++it)
        if (it->threshold > 0.0) levels.push_back(it->threshold);
    double acc = 0.0;
    for (size_t i = 0; i + 1 < levels.size(); ++i) {
        double mu = table.measure_above(levels[i]);
        acc += mu * (std::pow(levels[i + 1], p) - std::pow(levels[i], p));
    }
    return acc;
}

OscillationIdentity oscillation_identity_check(const GridFunction& f, const Shape& s) {
    const double fs = mean(f, s);
    const double w = f.domain().cell_measure();
    double lhs = 0.0, above = 0.0, below = 0.0;
    double measure = 0.0;
    for_each_cell(f.domain(), s, [&](long long c) {
        double v = f.value(c);
        lhs += std::abs(v - fs) * w;
        if (v > fs) above += (v - fs) * w;
        if (v < fs) below += (fs - v) * w;
        measure += w;
    });
    return {lhs / measure, 2.0 * above / measure, 2.0 * below / measure};
}

namespace {

struct DyadicSearch {
    const GridFunction& f;
    const PrefixTables& tables;
    double p;
    double cell_measure;

    double contribution(const std::array<int, kMaxDim>& lo,
                        const std::array<int, kMaxDim>& hi) const {
        long long n = 1;
        for (int a = 0; a < f.domain().dim(); ++a) n *= (hi[a] - lo[a]);
        double m = tables.box_sum(lo, hi) / static_cast<double>(n);
        double dev = 0.0;
        Shape s = Shape::box(lo, hi);
        for_each_cell(f.domain(), s, [&](long long c) { dev += std::abs(f.value(c) - m); });
        double avg_dev = dev / static_cast<double>(n);
        return static_cast<double>(n) * cell_measure * std::pow(avg_dev, p);
    }

    // Keep the cube whole or split it into 2^dim halves, whichever is larger.
    double best(const std::array<int, kMaxDim>& lo, const std::array<int, kMaxDim>& hi,
                int depth_left) const {
        double keep = contribution(lo, hi);
        if (depth_left == 0) return keep;
        const int n = f.domain().dim();
        for (int a = 0; a < n; ++a)
            if ((hi[a] - lo[a]) % 2 != 0 || hi[a] - lo[a] < 2) return keep;
        double split = 0.0;
        for (int child = 0; child < (1 << n); ++child) {
            std::array<int, kMaxDim> clo = lo, chi = hi;
            for (int a = 0; a < n; ++a) {
                int mid = (lo[a] + hi[a]) / 2;
                if (child & (1 << a)) clo[a] = mid;
                else chi[a] = mid;
            }
            split += best(clo, chi, depth_left - 1);
        }
        return std::max(keep, split);
    }
};

bool boxes_overlap(const Shape& a, const Shape& b, int dim) {
    for (int ax = 0; ax < dim; ++ax)
        if (a.hi[ax] <= b.lo[ax] || b.hi[ax] <= a.lo[ax]) return false;
    return true;
}

}  // namespace

double jnp_lower_bound(const GridFunction& f, double p, const JnpPolicy& policy) {
    if (p <= 1.0) throw std::invalid_argument("jnp_lower_bound: p must exceed 1");
    PrefixTables tables(f);
    DyadicSearch search{f, tables, p, f.domain().cell_measure()};

    if (policy.kind == JnpPolicy::Kind::dyadic_partitions) {
        Shape root = Shape::full(f.domain());
        return search.best(root.lo, root.hi, policy.max_depth);
    }

    // Greedy: rank all dyadic cubes by contribution, take disjoint ones.
    Basis dyadic(BasisSpec::exhaustive(BasisKind::dyadic), f.domain());
    std::vector<std::pair<double, long long>> ranked;
    for (long long i = 0; i < dyadic.enumerated_count(); ++i) {
        Shape s = dyadic.shape_at(i);
        ranked.emplace_back(search.contribution(s.lo, s.hi), i);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
        return x.first != y.first ? x.first > y.first : x.second < y.second;
    });
    std::vector<Shape> chosen;
    double acc = 0.0;
    for (const auto& [value, idx] : ranked) {
        if (static_cast<int>(chosen.size()) >= policy.max_cubes) break;
        Shape s = dyadic.shape_at(idx);
        bool disjoint = true;
        for (const Shape& c : chosen)
            if (boxes_overlap(s, c, f.domain().dim())) { disjoint = false; break; }
        if (disjoint) {
            chosen.push_back(s);
            acc += value;
        }
    }
    return acc;
}

}  // namespace oscillab
