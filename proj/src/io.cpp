#include "oscillab/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace oscillab {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

double parse_double(const std::string& s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::invalid_argument("malformed number: '" + s + "'");
    return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) fields.push_back(field);
    return fields;
}

}  // namespace

std::string grid_to_csv(const GridFunction& f) {
    const Domain& d = f.domain();
    std::ostringstream os;
    os << "dim," << d.dim() << "\n";
    os << "cells";
    for (int a = 0; a < d.dim(); ++a) os << "," << d.cells(a);
    os << "\n";
    for (int a = 0; a < d.dim(); ++a)
        os << "extent," << format_double(d.extent(a).lo) << ","
           << format_double(d.extent(a).hi) << "\n";
    os << "values\n";
    for (double v : f.values()) os << format_double(v) << "\n";
    return os.str();
}

GridFunction grid_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("grid csv: empty input");
    auto head = split_csv_line(line);
    if (head.size() != 2 || head[0] != "dim")
        throw std::invalid_argument("grid csv: expected 'dim,<n>' header");
    int dim = std::stoi(head[1]);

    if (!std::getline(is, line)) throw std::invalid_argument("grid csv: missing cells");
    auto cells_row = split_csv_line(line);
    if (cells_row.empty() || cells_row[0] != "cells" ||
        static_cast<int>(cells_row.size()) != dim + 1)
        throw std::invalid_argument("grid csv: malformed cells row");
    std::vector<int> cells;
    for (int a = 0; a < dim; ++a) cells.push_back(std::stoi(cells_row[a + 1]));

    std::vector<Interval> extents;
    for (int a = 0; a < dim; ++a) {
        if (!std::getline(is, line))
            throw std::invalid_argument("grid csv: missing extent row");
        auto row = split_csv_line(line);
        if (row.size() != 3 || row[0] != "extent")
            throw std::invalid_argument("grid csv: malformed extent row");
        extents.push_back({parse_double(row[1]), parse_double(row[2])});
    }

    if (!std::getline(is, line) || line != "values")
        throw std::invalid_argument("grid csv: missing values marker");
    std::vector<double> values;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        values.push_back(parse_double(line));
    }
    return GridFunction(Domain::make(extents, cells), std::move(values));
}

namespace {

json domain_to_json_obj(const Domain& d) {
    json extents = json::array(), cells = json::array();
    for (int a = 0; a < d.dim(); ++a) {
        extents.push_back({d.extent(a).lo, d.extent(a).hi});
        cells.push_back(d.cells(a));
    }
    return json{{"extents", extents}, {"cells", cells}};
}

Domain domain_from_json_obj(const json& j) {
    std::vector<Interval> extents;
    std::vector<int> cells;
    for (const auto& e : j.at("extents"))
        extents.push_back({e.at(0).get<double>(), e.at(1).get<double>()});
    for (const auto& c : j.at("cells")) cells.push_back(c.get<int>());
    return Domain::make(extents, cells);
}

}  // namespace

std::string grid_to_json(const GridFunction& f) {
    json j{{"domain", domain_to_json_obj(f.domain())}, {"values", f.values()}};
    return j.dump(2) + "\n";
}

GridFunction grid_from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        return GridFunction(domain_from_json_obj(j.at("domain")),
                            j.at("values").get<std::vector<double>>());
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("grid_from_json: ") + e.what());
    }
}

std::string norm_report_to_csv(const NormReport& report, const Domain& domain) {
    std::ostringstream os;
    os << "p,basis,value,shapes_visited,sampled,non_covering,argmax\n";
    os << format_double(report.p) << "," << report.basis << ","
       << format_double(report.value) << "," << report.shapes_visited << ","
       << (report.sampled ? 1 : 0) << "," << (report.non_covering ? 1 : 0) << ","
       << report.argmax.to_string(domain) << "\n";
    return os.str();
}

std::string norm_report_to_json(const NormReport& report, const Domain& domain) {
    json j{{"p", report.p},
           {"basis", report.basis},
           {"value", report.value},
           {"shapes_visited", report.shapes_visited},
           {"sampled", report.sampled},
           {"non_covering", report.non_covering},
           {"argmax", report.argmax.to_string(domain)}};
    return j.dump(2) + "\n";
}

std::string distribution_to_csv(const DistributionTable& table) {
    std::ostringstream os;
    os << "threshold,measure_above\n";
    for (const auto& bp : table.breakpoints)
        os << format_double(bp.threshold) << "," << format_double(bp.measure) << "\n";
    return os.str();
}

std::string tail_curve_to_csv(const TailCurve& curve) {
    std::ostringstream os;
    os << "# set_measure," << format_double(curve.set_measure) << "\n";
    os << "alpha,tail\n";
    if (!curve.levels.empty()) {
        for (size_t i = 0; i < curve.levels.size(); ++i)
            os << format_double(curve.levels[i]) << ","
               << format_double(curve.values[i]) << "\n";
    } else {
        for (size_t i = 0; i < curve.breakpoints.size(); ++i)
            os << format_double(curve.breakpoints[i]) << ","
               << format_double(curve.tail_after[i]) << "\n";
    }
    return os.str();
}

std::string reference_table_to_json() {
    json arr = json::array();
    for (const auto& rc : reference_constants())
        arr.push_back({{"name", rc.name},
                       {"p", rc.p},
                       {"basis", rc.basis},
                       {"dimension", rc.dimension},
                       {"value", rc.value},
                       {"source", rc.source}});
    return arr.dump(2) + "\n";
}

std::string decomposition_to_csv(const DecompositionReport& report) {
    std::ostringstream os;
    os << "k,p,norm,sum_slice_norms,max_slice_norm,bound_a_margin,bound_a_ok,"
          "bound_b_constant,bound_b_margin,bound_b_ok\n";
    os << report.slice_norms.size() << "," << format_double(report.p) << ","
       << format_double(report.norm) << "," << format_double(report.sum_slice_norms)
       << "," << format_double(report.max_slice_norm) << ","
       << format_double(report.bound_a_margin) << "," << (report.bound_a_ok ? 1 : 0)
       << "," << format_double(report.bound_b_constant) << ","
       << format_double(report.bound_b_margin) << "," << (report.bound_b_ok ? 1 : 0)
       << "\n";
    return os.str();
}

std::string decomposition_to_json(const DecompositionReport& report) {
    json j{{"p", report.p},
           {"norm", report.norm},
           {"slice_norms", report.slice_norms},
           {"sum_slice_norms", report.sum_slice_norms},
           {"max_slice_norm", report.max_slice_norm},
           {"bound_a_margin", report.bound_a_margin},
           {"bound_a_ok", report.bound_a_ok},
           {"bound_b_checked", report.bound_b_checked},
           {"bound_b_constant", report.bound_b_constant},
           {"bound_b_margin", report.bound_b_margin},
           {"bound_b_ok", report.bound_b_ok}};
    return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace oscillab
