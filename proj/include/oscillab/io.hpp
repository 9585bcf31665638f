#pragma once

#include <string>

#include "oscillab/grid.hpp"
#include "oscillab/jn.hpp"
#include "oscillab/oscillation.hpp"
#include "oscillab/product.hpp"
#include "oscillab/rearrange.hpp"

namespace oscillab {

// Shortest round-trip decimal form; identical input bits give identical text.
std::string format_double(double v);

// Grid CSV: "dim", "cells", one "extent" row per axis, then "values" followed
// by one value per line in row-major order.
std::string grid_to_csv(const GridFunction& f);
GridFunction grid_from_csv(const std::string& text);

std::string grid_to_json(const GridFunction& f);
GridFunction grid_from_json(const std::string& text);

// One header line plus one data row.
std::string norm_report_to_csv(const NormReport& report, const Domain& domain);
std::string norm_report_to_json(const NormReport& report, const Domain& domain);

// "threshold,measure_above" rows, largest threshold first.
std::string distribution_to_csv(const DistributionTable& table);

// "alpha,tail" rows at the requested levels (breakpoints when none given).
std::string tail_curve_to_csv(const TailCurve& curve);

std::string reference_table_to_json();

std::string decomposition_to_csv(const DecompositionReport& report);
std::string decomposition_to_json(const DecompositionReport& report);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace oscillab
