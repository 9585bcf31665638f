#include "oscillab/product.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "oscillab/parallel.hpp"

namespace oscillab {

FactorSplit FactorSplit::axiswise(const Domain& domain, BasisKind ambient) {
    if (domain.dim() < 2)
        throw std::invalid_argument("FactorSplit: domain must be at least 2D");
    FactorSplit split;
    split.ambient = ambient;
    for (int a = 0; a < domain.dim(); ++a)
        split.groups.push_back({a, 1, BasisKind::intervals});
    split.strong = (ambient == BasisKind::rectangles);
    split.validate(domain);
    return split;
}

void FactorSplit::validate(const Domain& domain) const {
    if (groups.size() < 2)
        throw std::invalid_argument("FactorSplit: need at least two factor groups");
    int next = 0;
    for (const Group& g : groups) {
        if (g.first_axis != next || g.axis_count < 1)
            throw std::invalid_argument(
                "FactorSplit: groups must be contiguous, disjoint, and in axis order");
        next += g.axis_count;
    }
    if (next != domain.dim())
        throw std::invalid_argument("FactorSplit: groups must cover every axis");
}

std::string FactorSplit::to_string() const {
    std::ostringstream os;
    os << (strong ? "strong" : "weak") << "[";
    for (size_t i = 0; i < groups.size(); ++i) {
        if (i) os << "|";
        os << "axes " << groups[i].first_axis << ".."
           << groups[i].first_axis + groups[i].axis_count - 1 << ":"
           << oscillab::to_string(groups[i].basis);
    }
    os << "]";
    return os.str();
}

namespace {

struct SliceLayout {
    Domain factor;                   // domain spanned by the group axes
    std::vector<int> group_axes;
    std::vector<int> other_axes;
    long long slice_count = 1;       // product of cells over other_axes

    // Full-domain coordinates for (slice index, factor cell index).
    std::array<int, kMaxDim> full_coords(const Domain& whole, long long slice,
                                         long long factor_cell) const {
        std::array<int, kMaxDim> idx{0, 0, 0};
        for (auto it = other_axes.rbegin(); it != other_axes.rend(); ++it) {
            idx[*it] = static_cast<int>(slice % whole.cells(*it));
            slice /= whole.cells(*it);
        }
        std::array<int, kMaxDim> fc = factor.coords(factor_cell);
        for (size_t a = 0; a < group_axes.size(); ++a)
            idx[group_axes[a]] = fc[a];
        return idx;
    }
};

SliceLayout make_layout(const Domain& whole, const FactorSplit& split, int group) {
    split.validate(whole);
    if (group < 0 || group >= split.factor_count())
        throw std::invalid_argument("slice_norm: group index out of range");
    const FactorSplit::Group& g = split.groups[group];
    SliceLayout layout;
    std::vector<Interval> ext;
    std::vector<int> cells;
    for (int a = 0; a < whole.dim(); ++a) {
        if (a >= g.first_axis && a < g.first_axis + g.axis_count) {
            layout.group_axes.push_back(a);
            ext.push_back(whole.extent(a));
            cells.push_back(whole.cells(a));
        } else {
            layout.other_axes.push_back(a);
            layout.slice_count *= whole.cells(a);
        }
    }
    layout.factor = Domain::make(ext, cells);
    return layout;
}

GridFunction extract_slice(const GridFunction& f, const SliceLayout& layout,
                           long long slice) {
    std::vector<double> vals(static_cast<size_t>(layout.factor.cell_count()));
    for (long long c = 0; c < layout.factor.cell_count(); ++c)
        vals[static_cast<size_t>(c)] =
            f.value(f.domain().linear_index(layout.full_coords(f.domain(), slice, c)));
    return GridFunction(layout.factor, std::move(vals));
}

}  // namespace

SliceNormReport slice_norm(const GridFunction& f, const FactorSplit& split, int group,
                           double p, const ScanOptions& opts) {
    SliceLayout layout = make_layout(f.domain(), split, group);
    BasisSpec factor_basis = BasisSpec::exhaustive(split.groups[group].basis);

    SliceNormReport report;
    report.slices = layout.slice_count;

    struct Best {
        double value = -1.0;
        long long slice = -1;
        Shape shape;
    };
    int threads = worker_count(opts.threads);
    std::vector<Best> best(static_cast<size_t>(threads));
    ScanOptions inner = opts;
    inner.threads = 1;  // outer loop owns the parallelism
    parallel_chunks(layout.slice_count, threads,
                    [&](long long begin, long long end, int worker) {
                        Best& b = best[static_cast<size_t>(worker)];
                        for (long long s = begin; s < end; ++s) {
                            GridFunction fy = extract_slice(f, layout, s);
                            NormReport nr = bmo_norm(fy, factor_basis, p, inner);
                            if (nr.value > b.value ||
                                (nr.value == b.value && s < b.slice)) {
                                b.value = nr.value;
                                b.slice = s;
                                b.shape = nr.argmax;
                            }
                        }
                    });
    for (const Best& b : best) {
        if (b.slice < 0) continue;
        if (b.value > report.value ||
            (b.value == report.value &&
             (report.argmax_slice < 0 || b.slice < report.argmax_slice))) {
            report.value = b.value;
            report.argmax_slice = b.slice;
            report.argmax_shape = b.shape;
        }
    }
    return report;
}

DecompositionReport decomposition_report(const GridFunction& f, const FactorSplit& split,
                                         double p, bool check_bound_b, double slack,
                                         const ScanOptions& opts) {
    split.validate(f.domain());
    if (check_bound_b && !split.strong)
        throw std::invalid_argument(
            "decomposition_report: the upper bound needs a strong split");

    DecompositionReport report;
    report.p = p;
    report.norm = bmo_norm(f, BasisSpec::exhaustive(split.ambient), p, opts).value;
    for (int i = 0; i < split.factor_count(); ++i)
        report.slice_norms.push_back(slice_norm(f, split, i, p, opts).value);
    report.sum_slice_norms = 0.0;
    for (double v : report.slice_norms) report.sum_slice_norms += v;
    report.max_slice_norm =
        *std::max_element(report.slice_norms.begin(), report.slice_norms.end());

    report.bound_a_margin = report.sum_slice_norms - report.norm;
    report.bound_a_ok = report.bound_a_margin >= -slack;

    if (check_bound_b) {
        report.bound_b_checked = true;
        report.bound_b_constant =
            (p == 2.0) ? 1.0 : std::pow(2.0, split.factor_count() - 1);
        report.bound_b_margin =
            report.bound_b_constant * report.norm - report.max_slice_norm;
        report.bound_b_ok = report.bound_b_margin >= -slack;
    }
    return report;
}

}  // namespace oscillab
