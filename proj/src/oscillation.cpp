#include "oscillab/oscillation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oscillab/parallel.hpp"

namespace oscillab {

namespace {

inline double pow_p(double x, double p) {
    x = std::abs(x);
    if (p == 1.0) return x;
    if (p == 2.0) return x * x;
    if (p == 3.0) return x * x * x;
    if (p == 4.0) {
        double s = x * x;
        return s * s;
    }
    return std::pow(x, p);
}

void check_shape(const GridFunction& f, const Shape& s) {
    const Domain& d = f.domain();
    if (s.kind == Shape::Kind::ball_mask) {
        if (s.mask.empty()) throw std::invalid_argument("shape: empty ball mask");
        if (s.mask.back() >= d.cell_count())
            throw std::invalid_argument("shape: mask outside domain");
        return;
    }
    for (int a = 0; a < d.dim(); ++a) {
        if (s.lo[a] < 0 || s.hi[a] > d.cells(a) || s.lo[a] >= s.hi[a])
            throw std::invalid_argument("shape: box range outside domain or empty");
    }
}

// Collects the cell values of f on s (uniform grid, equal cell weights).
std::vector<double> shape_values(const GridFunction& f, const Shape& s) {
    std::vector<double> vals;
    vals.reserve(static_cast<size_t>(s.cell_count(f.domain())));
    for_each_cell(f.domain(), s, [&](long long c) { vals.push_back(f.value(c)); });
    return vals;
}

}  // namespace

double mean(const GridFunction& f, const Shape& s) {
    check_shape(f, s);
    double acc = 0.0;
    long long n = 0;
    for_each_cell(f.domain(), s, [&](long long c) {
        acc += f.value(c);
        ++n;
    });
    return acc / static_cast<double>(n);
}

OscillationValue osc_p(const GridFunction& f, const Shape& s, double p) {
    if (p < 1.0) throw std::invalid_argument("osc_p: p must be >= 1");
    check_shape(f, s);
    double m = mean(f, s);
    double acc = 0.0;
    long long n = 0;
    for_each_cell(f.domain(), s, [&](long long c) {
        acc += pow_p(f.value(c) - m, p);
        ++n;
    });
    return {p, s, std::pow(acc / static_cast<double>(n), 1.0 / p)};
}

double osc_double(const GridFunction& f, const Shape& s, double p) {
    if (p < 1.0) throw std::invalid_argument("osc_double: p must be >= 1");
    check_shape(f, s);
    std::vector<double> vals = shape_values(f, s);
    const size_t n = vals.size();
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) acc += pow_p(vals[i] - vals[j], p);
    acc *= 2.0;  // ordered pairs; diagonal contributes zero
    return std::pow(acc / (static_cast<double>(n) * static_cast<double>(n)), 1.0 / p);
}

namespace {

// Smallest (lower=true) or largest qualifying median of equal-weight values.
double weighted_median(std::vector<double> vals, bool lower) {
    std::sort(vals.begin(), vals.end());
    const long long n = static_cast<long long>(vals.size());
    const double half = n / 2.0;
    auto qualifies = [&](size_t first, size_t last) {
        // Run vals[first..last) of one distinct value v:
        // |{f < v}| = first, |{f > v}| = n - last.
        return static_cast<double>(first) <= half &&
               static_cast<double>(n - last) <= half;
    };
    if (lower) {
        for (size_t i = 0; i < vals.size();) {
            size_t j = i;
            while (j < vals.size() && vals[j] == vals[i]) ++j;
            if (qualifies(i, j)) return vals[i];
            i = j;
        }
    } else {
        size_t i = vals.size();
        while (i > 0) {
            size_t j = i;
            while (i > 0 && vals[i - 1] == vals[j - 1]) --i;
            if (qualifies(i, j)) return vals[i];
            // no match yet; continue downward
        }
    }
    throw std::logic_error("median: no qualifying value");  // unreachable
}

}  // namespace

double median(const GridFunction& f, const Shape& s) {
    check_shape(f, s);
    return weighted_median(shape_values(f, s), true);
}

double upper_median(const GridFunction& f, const Shape& s) {
    check_shape(f, s);
    return weighted_median(shape_values(f, s), false);
}

InfConstResult osc_inf_const(const GridFunction& f, const Shape& s, double p,
                             const Tolerances& tol) {
    if (p < 1.0) throw std::invalid_argument("osc_inf_const: p must be >= 1");
    check_shape(f, s);
    std::vector<double> vals = shape_values(f, s);
    const double n = static_cast<double>(vals.size());

    auto objective = [&](double c) {
        double acc = 0.0;
        for (double v : vals) acc += pow_p(v - c, p);
        return acc / n;
    };

    if (p == 1.0) {
        double lo = weighted_median(vals, true);
        double hi = weighted_median(vals, false);
        // The L1 minimizer set is the interval [lo, hi]; report its midpoint.
        return {objective(lo), (lo + hi) / 2.0};
    }
    if (p == 2.0) {
        double m = mean(f, s);
        return {std::sqrt(objective(m)), m};
    }

    // Golden-section on the convex objective over the value range.
    double a = *std::min_element(vals.begin(), vals.end());
    double b = *std::max_element(vals.begin(), vals.end());
    if (a == b) return {0.0, a};
    constexpr double phi = 0.6180339887498949;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = objective(x1), f2 = objective(x2);
    const double eps = tol.search * std::max(1.0, std::max(std::abs(a), std::abs(b)));
    int iters = 0;
    while (b - a > eps) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = objective(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = objective(x2);
        }
        if (++iters > 500)
            throw std::runtime_error("osc_inf_const: search did not converge");
    }
    double c = (a + b) / 2.0;
    return {std::pow(objective(c), 1.0 / p), c};
}

namespace {

// Error-free transforms for the compensated table entries.
struct DD {
    double hi = 0.0, lo = 0.0;
};

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD dd_add(const DD& a, const DD& b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return two_sum(s.hi, s.lo);
}

inline DD dd_sub(const DD& a, const DD& b) { return dd_add(a, {-b.hi, -b.lo}); }

inline DD dd_mul(const DD& a, const DD& b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return two_sum(p.hi, p.lo);
}

inline DD dd_div(const DD& a, double b) {
    double q1 = a.hi / b;
    DD r = dd_sub(a, two_prod(q1, b));
    return two_sum(q1, (r.hi + r.lo) / b);
}

}  // namespace

PrefixTables::PrefixTables(const GridFunction& f) : domain_(f.domain()) {
    std::array<int, kMaxDim> c{1, 1, 1};
    for (int a = 0; a < domain_.dim(); ++a) c[a] = domain_.cells(a);
    const int s2 = c[2] + 1, s1 = c[1] + 1, s0 = c[0] + 1;
    stride_ = {static_cast<long long>(s1) * s2, s2, 1, 0};
    sum_.assign(static_cast<size_t>(s0) * s1 * s2, Two{});
    sum_sq_.assign(sum_.size(), Two{});

    auto at = [&](std::vector<Two>& t, int i, int j, int k) -> Two& {
        return t[static_cast<size_t>(i * stride_[0] + j * stride_[1] + k)];
    };
    for (int i = 0; i < c[0]; ++i)
        for (int j = 0; j < c[1]; ++j)
            for (int k = 0; k < c[2]; ++k) {
                std::array<int, kMaxDim> idx{i, j, k};
                double v = f.value(domain_.linear_index(idx));
                at(sum_, i + 1, j + 1, k + 1) = {v, 0.0};
                DD sq = two_prod(v, v);
                at(sum_sq_, i + 1, j + 1, k + 1) = {sq.hi, sq.lo};
            }
    auto acc = [](Two& dst, const Two& src) {
        DD r = dd_add({dst.hi, dst.lo}, {src.hi, src.lo});
        dst = {r.hi, r.lo};
    };
    for (auto* t : {&sum_, &sum_sq_}) {
        for (int i = 1; i < s0; ++i)
            for (int j = 0; j < s1; ++j)
                for (int k = 0; k < s2; ++k) acc(at(*t, i, j, k), at(*t, i - 1, j, k));
        for (int i = 0; i < s0; ++i)
            for (int j = 1; j < s1; ++j)
                for (int k = 0; k < s2; ++k) acc(at(*t, i, j, k), at(*t, i, j - 1, k));
        for (int i = 0; i < s0; ++i)
            for (int j = 0; j < s1; ++j)
                for (int k = 1; k < s2; ++k) acc(at(*t, i, j, k), at(*t, i, j, k - 1));
    }
}

PrefixTables::Two PrefixTables::inclusion_exclusion(
    const std::vector<Two>& t, const std::array<int, kMaxDim>& lo,
    const std::array<int, kMaxDim>& hi) const {
    std::array<int, kMaxDim> l = lo, h = hi;
    for (int a = domain_.dim(); a < kMaxDim; ++a) {
        l[a] = 0;
        h[a] = 1;
    }
    DD acc{};
    for (int corner = 0; corner < 8; ++corner) {
        int i = (corner & 4) ? h[0] : l[0];
        int j = (corner & 2) ? h[1] : l[1];
        int k = (corner & 1) ? h[2] : l[2];
        int sign = 1;
        if (!(corner & 4)) sign = -sign;
        if (!(corner & 2)) sign = -sign;
        if (!(corner & 1)) sign = -sign;
        const Two& v = t[static_cast<size_t>(i * stride_[0] + j * stride_[1] + k)];
        acc = dd_add(acc, {sign * v.hi, sign * v.lo});
    }
    return {acc.hi, acc.lo};
}

double PrefixTables::box_sum(const std::array<int, kMaxDim>& lo,
                             const std::array<int, kMaxDim>& hi) const {
    Two s = inclusion_exclusion(sum_, lo, hi);
    return s.hi + s.lo;
}

double PrefixTables::box_sum_sq(const std::array<int, kMaxDim>& lo,
                                const std::array<int, kMaxDim>& hi) const {
    Two s = inclusion_exclusion(sum_sq_, lo, hi);
    return s.hi + s.lo;
}

double PrefixTables::box_mean(const std::array<int, kMaxDim>& lo,
                              const std::array<int, kMaxDim>& hi) const {
    long long n = 1;
    for (int a = 0; a < domain_.dim(); ++a) n *= (hi[a] - lo[a]);
    return box_sum(lo, hi) / static_cast<double>(n);
}

double PrefixTables::osc2(const std::array<int, kMaxDim>& lo,
                          const std::array<int, kMaxDim>& hi) const {
    const int dim = domain_.dim();
    long long n = 1;
    for (int a = 0; a < dim; ++a) n *= (hi[a] - lo[a]);
    // Fused corner gather over the 2^dim active corners only; padded axes
    // always take their size-1 plane.
    long long pad = 0;
    for (int a = dim; a < kMaxDim; ++a) pad += stride_[a];
    DD s1{}, s2{};
    const int corners = 1 << dim;
    for (int c = 0; c < corners; ++c) {
        long long idx = pad;
        int sign = 1;
        for (int a = 0; a < dim; ++a) {
            if (c & (1 << a)) {
                idx += static_cast<long long>(hi[a]) * stride_[a];
            } else {
                idx += static_cast<long long>(lo[a]) * stride_[a];
                sign = -sign;
            }
        }
        const Two& a1 = sum_[static_cast<size_t>(idx)];
        const Two& a2 = sum_sq_[static_cast<size_t>(idx)];
        if (sign > 0) {
            s1 = dd_add(s1, {a1.hi, a1.lo});
            s2 = dd_add(s2, {a2.hi, a2.lo});
        } else {
            s1 = dd_add(s1, {-a1.hi, -a1.lo});
            s2 = dd_add(s2, {-a2.hi, -a2.lo});
        }
    }
    DD m = dd_div(s1, static_cast<double>(n));
    DD var = dd_sub(dd_div(s2, static_cast<double>(n)), dd_mul(m, m));
    double v = var.hi + var.lo;
    if (v < 0.0) {
        if (v < -1e-9 * std::max(1.0, std::abs(s2.hi)))
            throw std::runtime_error("osc2_fast: negative variance beyond cancellation budget");
        v = 0.0;
    }
    return std::sqrt(v);
}

double osc2_fast(const GridFunction& f, const std::array<int, kMaxDim>& lo,
                 const std::array<int, kMaxDim>& hi) {
    return PrefixTables(f).osc2(lo, hi);
}

namespace {

bool is_box_basis(BasisKind kind) {
    return kind == BasisKind::intervals || kind == BasisKind::cubes ||
           kind == BasisKind::rectangles || kind == BasisKind::dyadic;
}

double box_osc_p(const GridFunction& f, const PrefixTables& tables, const Shape& s, double p) {
    double m = tables.box_mean(s.lo, s.hi);
    const Domain& d = f.domain();
    const double* v = f.values().data();
    double acc = 0.0;
    long long n = 0;
    // Row-major box walk with a contiguous inner loop on the last axis.
    std::array<int, kMaxDim> lo = s.lo, hi = s.hi;
    for (int a = d.dim(); a < kMaxDim; ++a) {
        lo[a] = 0;
        hi[a] = 1;
    }
    std::array<int, kMaxDim> c{1, 1, 1};
    for (int a = 0; a < d.dim(); ++a) c[a] = d.cells(a);
    for (int i = lo[0]; i < hi[0]; ++i)
        for (int j = lo[1]; j < hi[1]; ++j) {
            const double* row =
                v + (static_cast<long long>(i) * c[1] + j) * c[2];
            for (int k = lo[2]; k < hi[2]; ++k) acc += pow_p(row[k] - m, p);
        }
    n = s.cell_count(d);
    return std::pow(acc / static_cast<double>(n), 1.0 / p);
}

}  // namespace

NormReport bmo_norm(const GridFunction& f, const Basis& basis, double p,
                    const ScanOptions& opts) {
    if (p < 1.0) throw std::invalid_argument("bmo_norm: p must be >= 1");
    if (!(basis.domain() == f.domain()))
        throw std::invalid_argument("bmo_norm: basis domain mismatch");
    const long long count = basis.enumerated_count();
    if (count == 0) throw std::invalid_argument("bmo_norm: empty enumeration");

    const bool boxes = is_box_basis(basis.spec().kind);
    const bool fast2 = boxes && p == 2.0 && opts.use_fast_p2;
    std::optional<PrefixTables> tables;
    if (boxes) tables.emplace(f);

    int threads = worker_count(opts.threads);
    struct Best {
        double value = -1.0;
        long long index = -1;
    };
    std::vector<Best> best(static_cast<size_t>(threads));

    const bool dense2 = fast2 && basis.spec().policy == BasisSpec::Policy::exhaustive;
    if (dense2) {
        // Tight loop over the group layout: no per-shape index decoding.
        const std::vector<Basis::GroupView> views = basis.group_views();
        const int dim = f.domain().dim();
        parallel_chunks(count, threads, [&](long long b, long long e, int t) {
            Best local;
            for (const Basis::GroupView& g : views) {
                long long gb = std::max(b, g.offset);
                long long ge = std::min(e, g.offset + g.anchors);
                if (gb >= ge) continue;
                std::array<long long, kMaxDim> pos{0, 0, 0};
                long long a = gb - g.offset;
                for (int ax = dim - 1; ax >= 0; --ax) {
                    pos[ax] = a % g.counts[ax];
                    a /= g.counts[ax];
                }
                std::array<int, kMaxDim> lo{0, 0, 0}, hi{1, 1, 1};
                for (long long i = gb; i < ge; ++i) {
                    for (int ax = 0; ax < dim; ++ax) {
                        lo[ax] = static_cast<int>(pos[ax]) * g.step[ax];
                        hi[ax] = lo[ax] + g.side[ax];
                    }
                    double v = tables->osc2(lo, hi);
                    if (v > local.value) {
                        local.value = v;
                        local.index = i;
                    }
                    for (int ax = dim - 1; ax >= 0; --ax) {
                        if (++pos[ax] < g.counts[ax]) break;
                        pos[ax] = 0;
                    }
                }
            }
            best[static_cast<size_t>(t)] = local;
        });
    } else {
        parallel_chunks(count, threads, [&](long long b, long long e, int t) {
            Best local;
            for (long long i = b; i < e; ++i) {
                Shape s = basis.shape_at(i);
                double v;
                if (fast2) v = tables->osc2(s.lo, s.hi);
                else if (boxes) v = box_osc_p(f, *tables, s, p);
                else v = osc_p(f, s, p).value;
                if (v > local.value) {
                    local.value = v;
                    local.index = i;
                }
            }
            best[static_cast<size_t>(t)] = local;
        });
    }

    Best global;
    for (const Best& b : best)
        if (b.index >= 0 &&
            (b.value > global.value || (b.value == global.value && b.index < global.index)))
            global = b;

    NormReport report;
    report.p = p;
    report.basis = basis.spec().to_string();
    report.value = global.value;
    report.argmax = basis.shape_at(global.index);
    report.shapes_visited = count;
    report.sampled = basis.spec().policy == BasisSpec::Policy::sampled;
    report.non_covering = basis.non_covering();
    return report;
}

NormReport bmo_norm(const GridFunction& f, const BasisSpec& spec, double p,
                    const ScanOptions& opts) {
    return bmo_norm(f, Basis(spec, f.domain()), p, opts);
}

}  // namespace oscillab
