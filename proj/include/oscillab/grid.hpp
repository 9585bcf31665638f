#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace oscillab {

inline constexpr int kMaxDim = 3;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
};

/// Axis-aligned box in R^n (1 <= n <= 3) carried by a uniform grid of cells.
class Domain {
public:
    Domain() = default;
    static Domain make(const std::vector<Interval>& extents, const std::vector<int>& cells);

    int dim() const { return dim_; }
    const Interval& extent(int axis) const { return ext_[axis]; }
    int cells(int axis) const { return cells_[axis]; }
    long long cell_count() const;
    double cell_measure() const;
    double total_measure() const;
    double cell_width(int axis) const { return ext_[axis].length() / cells_[axis]; }
    // Physical center of cell i along `axis`.
    double cell_center(int axis, int i) const {
        return ext_[axis].lo + (i + 0.5) * cell_width(axis);
    }

    // Row-major linear index: last axis varies fastest.
    long long linear_index(const std::array<int, kMaxDim>& idx) const;
    std::array<int, kMaxDim> coords(long long linear) const;

    bool operator==(const Domain& other) const;

private:
    int dim_ = 0;
    std::array<Interval, kMaxDim> ext_{};
    std::array<int, kMaxDim> cells_{1, 1, 1};
};

/// Piecewise-constant real function on a Domain's cells, stored row-major.
/// Immutable after construction; values are validated to be finite.
class GridFunction {
public:
    GridFunction() = default;
    GridFunction(Domain domain, std::vector<double> values);

    const Domain& domain() const { return domain_; }
    const std::vector<double>& values() const { return values_; }
    double value(long long linear) const { return values_[static_cast<size_t>(linear)]; }
    double value_at(const std::array<int, kMaxDim>& idx) const {
        return values_[static_cast<size_t>(domain_.linear_index(idx))];
    }
    long long size() const { return static_cast<long long>(values_.size()); }

    double max_abs() const;
    double min_value() const;
    double max_value() const;

private:
    Domain domain_;
    std::vector<double> values_;
};

/// Declarative description of a built-in generator.
struct GeneratorSpec {
    enum class Kind {
        two_level,        // +1 on the left half (axis 0), -1 on the right half
        indicator,        // 1 on the left `fraction` of axis 0, 0 elsewhere
        three_level,      // +1 / 0 / -1 on left `fraction`, middle, right `fraction`
        log_reciprocal,   // 1D, exact cell averages of log(1/x) on (0,1)
        kozlov_sum,       // 2D partial sum of indicators chi_{(0,2^{1-k}) x (0,1/k)}
        separable_sum,    // f(x,y) = g(x) + h(y) from two 1D sub-generators
        random_step,      // seeded random draws from `levels` equispaced values in [-1,1]
    };

    Kind kind = Kind::two_level;
    double fraction = 0.0;           // indicator alpha / three_level beta
    int terms = 0;                   // kozlov_sum N
    std::uint64_t seed = 0;          // random_step
    int levels = 0;                  // random_step value count
    std::shared_ptr<const GeneratorSpec> g, h;  // separable_sum factors

    static GeneratorSpec two_level();
    static GeneratorSpec indicator(double alpha);
    static GeneratorSpec three_level(double beta);
    static GeneratorSpec log_reciprocal();
    static GeneratorSpec kozlov_sum(int n_terms);
    static GeneratorSpec separable_sum(GeneratorSpec gx, GeneratorSpec hy);
    static GeneratorSpec random_step(std::uint64_t seed, int levels);

    std::string to_string() const;
};

// Parses e.g. "two_level", "indicator(0.25)", "three_level(0.125)",
// "kozlov_sum(4)", "random_step(seed=1,levels=8)".
GeneratorSpec parse_generator(const std::string& text);

GridFunction generate(const GeneratorSpec& spec, const Domain& domain);

// f(x,y) = g(x) + h(y) from explicit 1D factors; domain is g.domain x h.domain.
GridFunction separable_sum(const GridFunction& g, const GridFunction& h);

}  // namespace oscillab
