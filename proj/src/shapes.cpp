#include "oscillab/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oscillab {

long long Shape::cell_count(const Domain& d) const {
    if (kind == Kind::ball_mask) return static_cast<long long>(mask.size());
    long long n = 1;
    for (int a = 0; a < d.dim(); ++a) n *= (hi[a] - lo[a]);
    return n;
}

bool Shape::contains_cell(const Domain& d, long long linear) const {
    if (kind == Kind::ball_mask)
        return std::binary_search(mask.begin(), mask.end(), linear);
    auto c = d.coords(linear);
    for (int a = 0; a < d.dim(); ++a)
        if (c[a] < lo[a] || c[a] >= hi[a]) return false;
    return true;
}

Shape Shape::box(const std::array<int, kMaxDim>& lo, const std::array<int, kMaxDim>& hi) {
    Shape s;
    s.kind = Kind::box;
    s.lo = lo;
    s.hi = hi;
    return s;
}

Shape Shape::full(const Domain& d) {
    Shape s;
    s.kind = Kind::box;
    s.lo = {0, 0, 0};
    s.hi = {1, 1, 1};
    for (int a = 0; a < d.dim(); ++a) s.hi[a] = d.cells(a);
    return s;
}

std::string Shape::to_string(const Domain& d) const {
    std::ostringstream os;
    if (kind == Kind::box) {
        os << "box[";
        for (int a = 0; a < d.dim(); ++a)
            os << (a ? "x" : "") << lo[a] << ":" << hi[a];
        os << "]";
    } else {
        os << "ball[center=";
        for (int a = 0; a < d.dim(); ++a) os << (a ? "," : "") << center[a];
        os << ";r=" << radius << ";cells=" << mask.size() << "]";
    }
    return os.str();
}

void for_each_cell(const Domain& d, const Shape& s, const std::function<void(long long)>& fn) {
    if (s.kind == Shape::Kind::ball_mask) {
        for (long long c : s.mask) fn(c);
        return;
    }
    std::array<int, kMaxDim> i = s.lo;
    const int n = d.dim();
    while (true) {
        fn(d.linear_index(i));
        int a = n - 1;
        for (; a >= 0; --a) {
            if (++i[a] < s.hi[a]) break;
            i[a] = s.lo[a];
        }
        if (a < 0) break;
    }
}

std::string to_string(BasisKind kind) {
    switch (kind) {
        case BasisKind::intervals: return "intervals";
        case BasisKind::cubes: return "cubes";
        case BasisKind::rectangles: return "rectangles";
        case BasisKind::balls: return "balls";
        case BasisKind::centered_balls: return "centered_balls";
        case BasisKind::dyadic: return "dyadic";
    }
    return "?";
}

BasisSpec BasisSpec::exhaustive(BasisKind kind, int min_side, int max_side) {
    BasisSpec s;
    s.kind = kind;
    s.min_side = min_side;
    s.max_side = max_side;
    return s;
}

BasisSpec BasisSpec::sampled(BasisKind kind, long long count, std::uint64_t seed) {
    BasisSpec s;
    s.kind = kind;
    s.policy = Policy::sampled;
    s.sample_count = count;
    s.seed = seed;
    return s;
}

std::string BasisSpec::to_string() const {
    std::ostringstream os;
    os << oscillab::to_string(kind) << ":";
    if (policy == Policy::exhaustive) os << "exhaustive";
    else os << "sampled=" << sample_count << ",seed=" << seed;
    if (min_side != 1) os << ",minside=" << min_side;
    if (max_side != 0) os << ",maxside=" << max_side;
    return os.str();
}

BasisSpec parse_basis(const std::string& text) {
    std::string name = text;
    std::string args;
    if (auto p = text.find(':'); p != std::string::npos) {
        name = text.substr(0, p);
        args = text.substr(p + 1);
    }
    BasisSpec spec;
    if (name == "intervals") spec.kind = BasisKind::intervals;
    else if (name == "cubes") spec.kind = BasisKind::cubes;
    else if (name == "rectangles") spec.kind = BasisKind::rectangles;
    else if (name == "balls") spec.kind = BasisKind::balls;
    else if (name == "centered_balls") spec.kind = BasisKind::centered_balls;
    else if (name == "dyadic") spec.kind = BasisKind::dyadic;
    else throw std::invalid_argument("unknown basis kind: " + name);

    std::stringstream ss(args);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok == "exhaustive") continue;
        auto eq = tok.find('=');
        std::string key = eq == std::string::npos ? tok : tok.substr(0, eq);
        std::string val = eq == std::string::npos ? "" : tok.substr(eq + 1);
        if (key == "sampled") {
            spec.policy = BasisSpec::Policy::sampled;
            spec.sample_count = std::stoll(val);
        } else if (key == "seed") spec.seed = std::stoull(val);
        else if (key == "minside") spec.min_side = std::stoi(val);
        else if (key == "maxside") spec.max_side = std::stoi(val);
        else throw std::invalid_argument("unknown basis option: " + tok);
    }
    return spec;
}

namespace {

// Sampled enumeration indices: uniform without replacement, sorted so the
// sampled stream preserves the exhaustive order.
std::vector<long long> sample_indices(long long family, long long count, std::uint64_t seed) {
    if (count > family)
        throw std::invalid_argument("basis: sampled count exceeds family size");
    std::mt19937_64 rng(seed);
    std::set<long long> chosen;
    for (long long j = family - count; j < family; ++j) {
        long long t = static_cast<long long>(rng() % static_cast<std::uint64_t>(j + 1));
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
}

}  // namespace

Basis::Basis(BasisSpec spec, const Domain& domain) : spec_(spec), domain_(domain) {
    const int n = domain.dim();
    auto side_limit = [&](int axis) {
        int lim = domain.cells(axis);
        if (spec_.max_side > 0) lim = std::min(lim, spec_.max_side);
        return lim;
    };

    switch (spec_.kind) {
        case BasisKind::intervals: {
            if (n != 1) throw std::invalid_argument("intervals basis requires a 1D domain");
            for (int s = std::max(1, spec_.min_side); s <= side_limit(0); ++s) {
                SizeGroup g;
                g.side = {s, 1, 1};
                g.anchors = domain.cells(0) - s + 1;
                g.offset = family_size_;
                family_size_ += g.anchors;
                groups_.push_back(g);
            }
            break;
        }
        case BasisKind::rectangles: {
            // Lexicographic size tuples, then anchors.
            std::array<int, kMaxDim> s{1, 1, 1};
            for (int a = 0; a < n; ++a) s[a] = std::max(1, spec_.min_side);
            bool done = false;
            for (int a = 0; a < n; ++a)
                if (s[a] > side_limit(a)) done = true;
            while (!done) {
                SizeGroup g;
                g.side = s;
                g.anchors = 1;
                for (int a = 0; a < n; ++a) g.anchors *= (domain.cells(a) - s[a] + 1);
                g.offset = family_size_;
                family_size_ += g.anchors;
                groups_.push_back(g);
                int a = n - 1;
                for (; a >= 0; --a) {
                    if (++s[a] <= side_limit(a)) break;
                    s[a] = std::max(1, spec_.min_side);
                }
                if (a < 0) done = true;
            }
            break;
        }
        case BasisKind::cubes: {
            int lim = side_limit(0);
            for (int a = 1; a < n; ++a) lim = std::min(lim, side_limit(a));
            for (int s = std::max(1, spec_.min_side); s <= lim; ++s) {
                SizeGroup g;
                g.side = {1, 1, 1};
                g.anchors = 1;
                for (int a = 0; a < n; ++a) {
                    g.side[a] = s;
                    g.anchors *= (domain.cells(a) - s + 1);
                }
                g.offset = family_size_;
                family_size_ += g.anchors;
                groups_.push_back(g);
            }
            break;
        }
        case BasisKind::dyadic: {
            // Level l splits every axis in 2^l; needs divisible cell counts.
            // Sides only shrink with the level, so a min_side violation ends
            // the family while a max_side violation just skips early levels.
            for (int level = 0;; ++level) {
                std::array<int, kMaxDim> side{1, 1, 1};
                bool divisible = true, too_small = false, too_big = false;
                long long anchors = 1;
                for (int a = 0; a < n; ++a) {
                    int div = 1 << level;
                    if (domain.cells(a) % div != 0) { divisible = false; break; }
                    side[a] = domain.cells(a) / div;
                    if (side[a] < std::max(1, spec_.min_side)) too_small = true;
                    if (spec_.max_side > 0 && side[a] > spec_.max_side) too_big = true;
                    anchors *= div;
                }
                if (!divisible || too_small) break;
                if (!too_big) {
                    SizeGroup g;
                    g.side = side;
                    g.anchors = anchors;
                    g.offset = family_size_;
                    family_size_ += anchors;
                    groups_.push_back(g);
                }
                bool splittable = true;
                for (int a = 0; a < n; ++a)
                    if (side[a] % 2 != 0) splittable = false;
                if (!splittable) break;
            }
            break;
        }
        case BasisKind::balls:
        case BasisKind::centered_balls: {
            box_kind_ = false;
            double hmin = domain.cell_width(0);
            for (int a = 1; a < n; ++a) hmin = std::min(hmin, domain.cell_width(a));
            int max_step = domain.cells(0);
            for (int a = 1; a < n; ++a) max_step = std::min(max_step, domain.cells(a));
            if (spec_.max_side > 0) max_step = std::min(max_step, spec_.max_side);

            std::vector<long long> centers;
            if (spec_.kind == BasisKind::centered_balls) {
                std::array<int, kMaxDim> mid{0, 0, 0};
                for (int a = 0; a < n; ++a) mid[a] = domain.cells(a) / 2;
                centers.push_back(domain.linear_index(mid));
            } else {
                for (long long c = 0; c < domain.cell_count(); ++c) centers.push_back(c);
            }
            const double eps = 1e-12;
            for (int k = std::max(1, spec_.min_side); k <= max_step; ++k) {
                double r = k * hmin / 2.0;
                for (long long c : centers) {
                    auto cc = domain.coords(c);
                    bool inside = true;
                    for (int a = 0; a < n && inside; ++a) {
                        double x = domain.cell_center(a, cc[a]);
                        if (x - r < domain.extent(a).lo - eps ||
                            x + r > domain.extent(a).hi + eps)
                            inside = false;
                    }
                    if (inside) ball_index_.emplace_back(c, k);
                }
            }
            // Order: radius step first (sizes), then center (anchor).
            std::stable_sort(ball_index_.begin(), ball_index_.end(),
                             [](const auto& x, const auto& y) {
                                 return x.second != y.second ? x.second < y.second
                                                             : x.first < y.first;
                             });
            family_size_ = static_cast<long long>(ball_index_.size());
            break;
        }
    }

    if (spec_.policy == BasisSpec::Policy::sampled) {
        sample_ = sample_indices(family_size_, spec_.sample_count, spec_.seed);
    }
}

long long Basis::enumerated_count() const {
    return spec_.policy == BasisSpec::Policy::sampled
               ? static_cast<long long>(sample_.size())
               : family_size_;
}

Shape Basis::exhaustive_shape_at(long long i) const {
    if (i < 0 || i >= family_size_) throw std::out_of_range("basis index");
    if (!box_kind_) {
        auto [center, step] = ball_index_[static_cast<size_t>(i)];
        return ball_shape(center, step);
    }
    // Binary search the size group.
    size_t loidx = 0, hiidx = groups_.size();
    while (hiidx - loidx > 1) {
        size_t mid = (loidx + hiidx) / 2;
        if (groups_[mid].offset <= i) loidx = mid;
        else hiidx = mid;
    }
    const SizeGroup& g = groups_[loidx];
    long long a = i - g.offset;
    const int n = domain_.dim();
    Shape s;
    s.kind = Shape::Kind::box;
    if (spec_.kind == BasisKind::dyadic) {
        // Anchors at multiples of the side length.
        std::array<long long, kMaxDim> counts{1, 1, 1};
        for (int ax = 0; ax < n; ++ax) counts[ax] = domain_.cells(ax) / g.side[ax];
        for (int ax = n - 1; ax >= 0; --ax) {
            long long pos = a % counts[ax];
            a /= counts[ax];
            s.lo[ax] = static_cast<int>(pos) * g.side[ax];
            s.hi[ax] = s.lo[ax] + g.side[ax];
        }
    } else {
        for (int ax = n - 1; ax >= 0; --ax) {
            long long range = domain_.cells(ax) - g.side[ax] + 1;
            long long pos = a % range;
            a /= range;
            s.lo[ax] = static_cast<int>(pos);
            s.hi[ax] = s.lo[ax] + g.side[ax];
        }
    }
    return s;
}

std::vector<Basis::GroupView> Basis::group_views() const {
    std::vector<GroupView> views;
    if (!box_kind_) return views;
    views.reserve(groups_.size());
    const int n = domain_.dim();
    for (const SizeGroup& g : groups_) {
        GroupView v;
        v.side = g.side;
        v.anchors = g.anchors;
        v.offset = g.offset;
        for (int a = 0; a < n; ++a) {
            if (spec_.kind == BasisKind::dyadic) {
                v.step[a] = g.side[a];
                v.counts[a] = domain_.cells(a) / g.side[a];
            } else {
                v.step[a] = 1;
                v.counts[a] = domain_.cells(a) - g.side[a] + 1;
            }
        }
        views.push_back(v);
    }
    return views;
}

Shape Basis::shape_at(long long i) const {
    if (spec_.policy == BasisSpec::Policy::sampled)
        return exhaustive_shape_at(sample_[static_cast<size_t>(i)]);
    return exhaustive_shape_at(i);
}

void Basis::for_each(const std::function<void(const Shape&)>& fn) const {
    const long long n = enumerated_count();
    for (long long i = 0; i < n; ++i) fn(shape_at(i));
}

Shape Basis::ball_shape(long long center, int radius_step) const {
    const int n = domain_.dim();
    double hmin = domain_.cell_width(0);
    for (int a = 1; a < n; ++a) hmin = std::min(hmin, domain_.cell_width(a));
    double r = radius_step * hmin / 2.0;

    Shape s;
    s.kind = Shape::Kind::ball_mask;
    s.center = domain_.coords(center);
    s.radius = r;
    const double eps = 1e-12;

    std::array<int, kMaxDim> blo{0, 0, 0}, bhi{1, 1, 1};
    for (int a = 0; a < n; ++a) {
        double x = domain_.cell_center(a, s.center[a]);
        double w = domain_.cell_width(a);
        blo[a] = std::max(0, static_cast<int>(std::floor((x - r - domain_.extent(a).lo) / w)));
        bhi[a] = std::min(domain_.cells(a),
                          static_cast<int>(std::ceil((x + r - domain_.extent(a).lo) / w)) + 1);
    }
    std::array<int, kMaxDim> i = blo;
    std::array<int, kMaxDim> mlo = bhi, mhi = blo;  // tightened from the mask
    while (true) {
        double d2 = 0.0;
        for (int a = 0; a < n; ++a) {
            double dx = domain_.cell_center(a, i[a]) - domain_.cell_center(a, s.center[a]);
            d2 += dx * dx;
        }
        if (d2 <= r * r + eps) {
            s.mask.push_back(domain_.linear_index(i));
            for (int a = 0; a < n; ++a) {
                mlo[a] = std::min(mlo[a], i[a]);
                mhi[a] = std::max(mhi[a], i[a] + 1);
            }
        }
        int a = n - 1;
        for (; a >= 0; --a) {
            if (++i[a] < bhi[a]) break;
            i[a] = blo[a];
        }
        if (a < 0) break;
    }
    std::sort(s.mask.begin(), s.mask.end());
    s.lo = mlo;
    s.hi = mhi;
    return s;
}

double unit_ball_volume(int n) {
    return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

ComparabilityReport comparability_constants(BasisKind a, BasisKind b, int n) {
    if (n < 1) throw std::invalid_argument("comparability: dimension must be positive");
    double wn = unit_ball_volume(n);
    if (a == BasisKind::balls && b == BasisKind::cubes) {
        return {a, b, n, wn / std::pow(2.0, n), wn * std::pow(std::sqrt(n) / 2.0, n)};
    }
    if (a == BasisKind::cubes && b == BasisKind::balls) {
        return {a, b, n, (1.0 / wn) * std::pow(2.0 / std::sqrt(n), n), std::pow(2.0, n) / wn};
    }
    if (a == BasisKind::cubes && b == BasisKind::rectangles) {
        return {a, b, n, 1.0, 1.0};  // cubes are a sub-family of rectangles
    }
    throw std::invalid_argument("comparability: unsupported pair " + to_string(a) + "/" +
                                to_string(b));
}

}  // namespace oscillab
