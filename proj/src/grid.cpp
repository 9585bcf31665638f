#include "oscillab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace oscillab {

Domain Domain::make(const std::vector<Interval>& extents, const std::vector<int>& cells) {
    if (extents.size() != cells.size())
        throw std::invalid_argument("domain: extents/cells size mismatch");
    int n = static_cast<int>(extents.size());
    if (n < 1 || n > kMaxDim)
        throw std::invalid_argument("domain: dimension must be 1, 2 or 3");
    Domain d;
    d.dim_ = n;
    for (int a = 0; a < n; ++a) {
        if (!(extents[a].length() > 0.0) || !std::isfinite(extents[a].length()))
            throw std::invalid_argument("domain: extent length must be positive and finite");
        if (cells[a] < 1)
            throw std::invalid_argument("domain: cell count must be positive");
        d.ext_[a] = extents[a];
        d.cells_[a] = cells[a];
    }
    return d;
}

long long Domain::cell_count() const {
    long long n = 1;
    for (int a = 0; a < dim_; ++a) n *= cells_[a];
    return n;
}

double Domain::cell_measure() const {
    double m = 1.0;
    for (int a = 0; a < dim_; ++a) m *= cell_width(a);
    return m;
}

double Domain::total_measure() const {
    double m = 1.0;
    for (int a = 0; a < dim_; ++a) m *= ext_[a].length();
    return m;
}

long long Domain::linear_index(const std::array<int, kMaxDim>& idx) const {
    long long lin = 0;
    for (int a = 0; a < dim_; ++a) lin = lin * cells_[a] + idx[a];
    return lin;
}

std::array<int, kMaxDim> Domain::coords(long long linear) const {
    std::array<int, kMaxDim> idx{0, 0, 0};
    for (int a = dim_ - 1; a >= 0; --a) {
        idx[a] = static_cast<int>(linear % cells_[a]);
        linear /= cells_[a];
    }
    return idx;
}

bool Domain::operator==(const Domain& other) const {
    if (dim_ != other.dim_) return false;
    for (int a = 0; a < dim_; ++a) {
        if (cells_[a] != other.cells_[a]) return false;
        if (ext_[a].lo != other.ext_[a].lo || ext_[a].hi != other.ext_[a].hi) return false;
    }
    return true;
}

GridFunction::GridFunction(Domain domain, std::vector<double> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
    if (static_cast<long long>(values_.size()) != domain_.cell_count())
        throw std::invalid_argument("grid function: value count != cell count");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("grid function: non-finite value");
}

double GridFunction::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

double GridFunction::min_value() const {
    return *std::min_element(values_.begin(), values_.end());
}

double GridFunction::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

GeneratorSpec GeneratorSpec::two_level() { return GeneratorSpec{}; }

GeneratorSpec GeneratorSpec::indicator(double alpha) {
    GeneratorSpec s;
    s.kind = Kind::indicator;
    s.fraction = alpha;
    return s;
}

GeneratorSpec GeneratorSpec::three_level(double beta) {
    GeneratorSpec s;
    s.kind = Kind::three_level;
    s.fraction = beta;
    return s;
}

GeneratorSpec GeneratorSpec::log_reciprocal() {
    GeneratorSpec s;
    s.kind = Kind::log_reciprocal;
    return s;
}

GeneratorSpec GeneratorSpec::kozlov_sum(int n_terms) {
    GeneratorSpec s;
    s.kind = Kind::kozlov_sum;
    s.terms = n_terms;
    return s;
}

GeneratorSpec GeneratorSpec::separable_sum(GeneratorSpec gx, GeneratorSpec hy) {
    GeneratorSpec s;
    s.kind = Kind::separable_sum;
    s.g = std::make_shared<GeneratorSpec>(std::move(gx));
    s.h = std::make_shared<GeneratorSpec>(std::move(hy));
    return s;
}

GeneratorSpec GeneratorSpec::random_step(std::uint64_t seed, int levels) {
    GeneratorSpec s;
    s.kind = Kind::random_step;
    s.seed = seed;
    s.levels = levels;
    return s;
}

std::string GeneratorSpec::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::two_level: os << "two_level"; break;
        case Kind::indicator: os << "indicator(" << fraction << ")"; break;
        case Kind::three_level: os << "three_level(" << fraction << ")"; break;
        case Kind::log_reciprocal: os << "log_reciprocal"; break;
        case Kind::kozlov_sum: os << "kozlov_sum(" << terms << ")"; break;
        case Kind::separable_sum:
            os << "separable_sum(" << (g ? g->to_string() : "?") << ","
               << (h ? h->to_string() : "?") << ")";
            break;
        case Kind::random_step:
            os << "random_step(seed=" << seed << ",levels=" << levels << ")";
            break;
    }
    return os.str();
}

namespace {

// Converts a fraction of axis-0 cells into an exact whole-cell count.
int cell_aligned(double fraction, int cells, const char* what) {
    double raw = fraction * cells;
    double rounded = std::round(raw);
    if (std::abs(raw - rounded) > 1e-9 * std::max(1.0, std::abs(raw)))
        throw std::invalid_argument(std::string(what) + ": fraction not cell-aligned");
    return static_cast<int>(rounded);
}

// Mean of log(1/x) over [a,b] via the antiderivative of -log x, i.e. x - x log x.
double log_reciprocal_cell_average(double a, double b) {
    auto anti = [](double x) { return x <= 0.0 ? 0.0 : x - x * std::log(x); };
    return (anti(b) - anti(a)) / (b - a);
}

// Fraction of [lo,hi] covered by [0,cut], for exact cell averages of indicators.
double overlap_fraction(double lo, double hi, double cut) {
    if (cut <= lo) return 0.0;
    if (cut >= hi) return 1.0;
    return (cut - lo) / (hi - lo);
}

}  // namespace

GeneratorSpec parse_generator(const std::string& text) {
    auto fail = [&] { throw std::invalid_argument("unknown generator: " + text); };
    std::string name = text;
    std::string args;
    if (auto p = text.find('('); p != std::string::npos) {
        if (text.back() != ')') fail();
        name = text.substr(0, p);
        args = text.substr(p + 1, text.size() - p - 2);
    }
    if (name == "two_level") return GeneratorSpec::two_level();
    if (name == "indicator") return GeneratorSpec::indicator(std::stod(args));
    if (name == "three_level") return GeneratorSpec::three_level(std::stod(args));
    if (name == "log_reciprocal") return GeneratorSpec::log_reciprocal();
    if (name == "kozlov_sum") return GeneratorSpec::kozlov_sum(std::stoi(args));
    if (name == "random_step") {
        std::uint64_t seed = 0;
        int levels = 8;
        std::stringstream ss(args);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) fail();
            std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "seed") seed = std::stoull(val);
            else if (key == "levels") levels = std::stoi(val);
            else fail();
        }
        return GeneratorSpec::random_step(seed, levels);
    }
    if (name == "separable_sum") {
        // Split on the top-level comma (sub-specs may contain parentheses).
        int depth = 0;
        size_t split = std::string::npos;
        for (size_t i = 0; i < args.size(); ++i) {
            if (args[i] == '(') ++depth;
            else if (args[i] == ')') --depth;
            else if (args[i] == ',' && depth == 0) { split = i; break; }
        }
        if (split == std::string::npos) fail();
        return GeneratorSpec::separable_sum(parse_generator(args.substr(0, split)),
                                            parse_generator(args.substr(split + 1)));
    }
    fail();
    return {};
}

GridFunction generate(const GeneratorSpec& spec, const Domain& domain) {
    using Kind = GeneratorSpec::Kind;
    const long long n = domain.cell_count();
    std::vector<double> vals(static_cast<size_t>(n), 0.0);

    switch (spec.kind) {
        case Kind::two_level: {
            int c0 = domain.cells(0);
            if (c0 % 2 != 0)
                throw std::invalid_argument("two_level: axis-0 cell count must be even");
            for (long long i = 0; i < n; ++i)
                vals[i] = domain.coords(i)[0] < c0 / 2 ? 1.0 : -1.0;
            break;
        }
        case Kind::indicator: {
            if (!(spec.fraction > 0.0 && spec.fraction < 1.0))
                throw std::invalid_argument("indicator: fraction must lie in (0,1)");
            int cut = cell_aligned(spec.fraction, domain.cells(0), "indicator");
            for (long long i = 0; i < n; ++i)
                vals[i] = domain.coords(i)[0] < cut ? 1.0 : 0.0;
            break;
        }
        case Kind::three_level: {
            if (!(spec.fraction > 0.0 && spec.fraction < 0.5))
                throw std::invalid_argument("three_level: beta must lie in (0,1/2)");
            int c0 = domain.cells(0);
            int cut = cell_aligned(spec.fraction, c0, "three_level");
            for (long long i = 0; i < n; ++i) {
                int x = domain.coords(i)[0];
                vals[i] = x < cut ? 1.0 : (x >= c0 - cut ? -1.0 : 0.0);
            }
            break;
        }
        case Kind::log_reciprocal: {
            if (domain.dim() != 1 || domain.extent(0).lo != 0.0)
                throw std::invalid_argument("log_reciprocal: needs a 1D domain (0,L)");
            double w = domain.cell_width(0);
            for (long long i = 0; i < n; ++i)
                vals[i] = log_reciprocal_cell_average(i * w, (i + 1) * w);
            break;
        }
        case Kind::kozlov_sum: {
            if (domain.dim() != 2)
                throw std::invalid_argument("kozlov_sum: needs a 2D domain");
            if (spec.terms < 1)
                throw std::invalid_argument("kozlov_sum: term count must be >= 1");
            double wx = domain.cell_width(0), wy = domain.cell_width(1);
            for (long long i = 0; i < n; ++i) {
                auto c = domain.coords(i);
                double x0 = domain.extent(0).lo + c[0] * wx;
                double y0 = domain.extent(1).lo + c[1] * wy;
                double sum = 0.0;
                for (int k = 1; k <= spec.terms; ++k) {
                    // Exact cell average of chi_{(0,2^{1-k}) x (0,1/k)}.
                    sum += overlap_fraction(x0, x0 + wx, std::ldexp(1.0, 1 - k)) *
                           overlap_fraction(y0, y0 + wy, 1.0 / k);
                }
                vals[i] = sum;
            }
            break;
        }
        case Kind::separable_sum: {
            if (domain.dim() != 2)
                throw std::invalid_argument("separable_sum: needs a 2D domain");
            if (!spec.g || !spec.h)
                throw std::invalid_argument("separable_sum: missing factor specs");
            Domain dx = Domain::make({domain.extent(0)}, {domain.cells(0)});
            Domain dy = Domain::make({domain.extent(1)}, {domain.cells(1)});
            return separable_sum(generate(*spec.g, dx), generate(*spec.h, dy));
        }
        case Kind::random_step: {
            if (spec.levels < 2)
                throw std::invalid_argument("random_step: needs at least 2 levels");
            std::mt19937_64 rng(spec.seed);
            for (long long i = 0; i < n; ++i) {
                auto k = rng() % static_cast<std::uint64_t>(spec.levels);
                vals[i] = -1.0 + 2.0 * static_cast<double>(k) / (spec.levels - 1);
            }
            break;
        }
    }
    return GridFunction(domain, std::move(vals));
}

GridFunction separable_sum(const GridFunction& g, const GridFunction& h) {
    if (g.domain().dim() != 1 || h.domain().dim() != 1)
        throw std::invalid_argument("separable_sum: factors must be 1D");
    Domain dom = Domain::make({g.domain().extent(0), h.domain().extent(0)},
                              {g.domain().cells(0), h.domain().cells(0)});
    std::vector<double> vals(static_cast<size_t>(dom.cell_count()));
    int cy = dom.cells(1);
    for (int x = 0; x < dom.cells(0); ++x)
        for (int y = 0; y < cy; ++y)
            vals[static_cast<size_t>(x) * cy + y] = g.value(x) + h.value(y);
    return GridFunction(dom, std::move(vals));
}

}  // namespace oscillab
