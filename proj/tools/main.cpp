#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "oscillab/grid.hpp"
#include "oscillab/io.hpp"
#include "oscillab/jn.hpp"
#include "oscillab/oscillation.hpp"
#include "oscillab/product.hpp"
#include "oscillab/rearrange.hpp"
#include "oscillab/shapes.hpp"
#include "oscillab/transforms.hpp"
#include "oscillab/verify.hpp"

namespace {

using namespace oscillab;
using nlohmann::json;

struct Options {
    std::string config;
    std::string gen = "two_level";
    std::vector<int> cells;
    std::vector<double> extent;       // lo,hi pairs per axis
    std::string basis = "intervals:exhaustive";
    std::vector<double> p = {1.0};
    std::uint64_t seed = 0;
    std::string out;
    double tol = -1.0;
    std::string sweep;
    std::string transform = "trunc_full(0.5)";
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--config", o.config, "JSON config file; flags override its keys");
    cmd->add_option("--gen", o.gen, "generator spec, e.g. indicator(0.25)");
    cmd->add_option("--cells", o.cells, "cells per axis (1-3 values)")->delimiter(',');
    cmd->add_option("--extent", o.extent, "lo,hi pairs per axis")->delimiter(',');
    cmd->add_option("--basis", o.basis, "shape basis, e.g. rectangles:exhaustive");
    cmd->add_option("--p", o.p, "integrability parameters")->delimiter(',');
    cmd->add_option("--seed", o.seed, "seed for random generators / sampled bases");
    cmd->add_option("--out", o.out, "output file (stdout when omitted)");
    cmd->add_option("--tol", o.tol, "tolerance override for slack checks");
    cmd->add_option("--sweep", o.sweep, "subcommand-specific sweep values");
    cmd->add_option("--transform", o.transform, "transform spec for `transform`");
}

void merge_config(const CLI::App* cmd, Options& o) {
    if (o.config.empty()) return;
    json j;
    try {
        j = json::parse(read_text_file(o.config));
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("--config: ") + e.what());
    }
    auto absent = [&](const char* flag) { return cmd->count(flag) == 0; };
    try {
    if (absent("--gen") && j.contains("gen")) o.gen = j["gen"].get<std::string>();
    if (absent("--cells") && j.contains("cells"))
        o.cells = j["cells"].get<std::vector<int>>();
    if (absent("--extent") && j.contains("extent"))
        o.extent = j["extent"].get<std::vector<double>>();
    if (absent("--basis") && j.contains("basis")) o.basis = j["basis"].get<std::string>();
    if (absent("--p") && j.contains("p")) o.p = j["p"].get<std::vector<double>>();
    if (absent("--seed") && j.contains("seed")) o.seed = j["seed"].get<std::uint64_t>();
    if (absent("--out") && j.contains("out")) o.out = j["out"].get<std::string>();
    if (absent("--tol") && j.contains("tol")) o.tol = j["tol"].get<double>();
    if (absent("--sweep") && j.contains("sweep")) o.sweep = j["sweep"].get<std::string>();
    if (absent("--transform") && j.contains("transform"))
        o.transform = j["transform"].get<std::string>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("--config: ") + e.what());
    }
}

Domain make_domain(const Options& o) {
    std::vector<int> cells = o.cells.empty() ? std::vector<int>{64} : o.cells;
    std::vector<Interval> ext;
    if (o.extent.empty()) {
        ext.assign(cells.size(), {0.0, 1.0});
    } else {
        if (o.extent.size() != 2 * cells.size())
            throw std::invalid_argument("--extent needs one lo,hi pair per axis");
        for (size_t a = 0; a < cells.size(); ++a)
            ext.push_back({o.extent[2 * a], o.extent[2 * a + 1]});
    }
    return Domain::make(ext, cells);
}

GridFunction make_function(const CLI::App* cmd, const Options& o, const Domain& d) {
    GeneratorSpec spec = parse_generator(o.gen);
    if (spec.kind == GeneratorSpec::Kind::random_step) {
        if (cmd->count("--seed")) spec.seed = o.seed;
        else if (spec.seed == 0 && o.gen.find("seed=") == std::string::npos)
            throw std::invalid_argument("random_step generator requires a seed");
    }
    return generate(spec, d);
}

BasisSpec make_basis(const CLI::App* cmd, const Options& o) {
    BasisSpec spec = parse_basis(o.basis);
    if (spec.policy == BasisSpec::Policy::sampled) {
        if (cmd->count("--seed")) spec.seed = o.seed;
        else if (o.basis.find("seed=") == std::string::npos)
            throw std::invalid_argument("sampled basis requires a seed");
    }
    return spec;
}

TransformSpec parse_transform(const std::string& text) {
    std::string name = text, args;
    if (auto pos = text.find('('); pos != std::string::npos) {
        if (text.back() != ')') throw std::invalid_argument("bad transform: " + text);
        name = text.substr(0, pos);
        args = text.substr(pos + 1, text.size() - pos - 2);
    }
    if (name == "abs") return TransformSpec::abs();
    if (name == "trunc_above") return TransformSpec::trunc_above(std::stod(args));
    if (name == "trunc_below") return TransformSpec::trunc_below(std::stod(args));
    if (name == "trunc_full") return TransformSpec::trunc_full(std::stod(args));
    if (name == "holder") {
        auto comma = args.find(',');
        double alpha = std::stod(args.substr(0, comma));
        double coeff = comma == std::string::npos ? 1.0 : std::stod(args.substr(comma + 1));
        return TransformSpec::holder_power(alpha, coeff);
    }
    throw std::invalid_argument("unknown transform: " + text);
}

std::vector<double> parse_sweep_values(const std::string& sweep) {
    std::vector<double> out;
    std::stringstream ss(sweep);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) std::cout << text;
    else write_text_file(o.out, text);
}

int run_osc(const CLI::App* cmd, Options& o) {
    merge_config(cmd, o);
    Domain d = make_domain(o);
    GridFunction f = make_function(cmd, o, d);
    Shape full = Shape::full(d);
    std::ostringstream os;
    os << "p,osc,osc_double,inf_const\n";
    for (double p : o.p)
        os << format_double(p) << "," << format_double(osc_p(f, full, p).value) << ","
           << format_double(osc_double(f, full, p)) << ","
           << format_double(osc_inf_const(f, full, p).value) << "\n";
    emit(o, os.str());
    return 0;
}

int run_norm(const CLI::App* cmd, Options& o) {
    merge_config(cmd, o);
    Domain d = make_domain(o);
    GridFunction f = make_function(cmd, o, d);
    BasisSpec basis = make_basis(cmd, o);
    std::ostringstream os;
    os << "p,basis,value,shapes_visited,sampled,non_covering,argmax\n";
    for (double p : o.p) {
        NormReport r = bmo_norm(f, basis, p);
        os << format_double(r.p) << "," << r.basis << "," << format_double(r.value)
           << "," << r.shapes_visited << "," << (r.sampled ? 1 : 0) << ","
           << (r.non_covering ? 1 : 0) << "," << r.argmax.to_string(d) << "\n";
    }
    emit(o, os.str());
    return 0;
}

int run_rearrange(const CLI::App* cmd, Options& o) {
    merge_config(cmd, o);
    Domain d = make_domain(o);
    GridFunction f = make_function(cmd, o, d);
    if (o.sweep == "distribution") {
        emit(o, distribution_to_csv(distribution(f, false)));
        return 0;
    }
    GridFunction star = decreasing_rearrangement(f);
    GridFunction circ = signed_rearrangement(f);
    std::ostringstream os;
    os << "index,decreasing,signed\n";
    for (long long i = 0; i < star.size(); ++i)
        os << i << "," << format_double(star.value(i)) << ","
           << format_double(circ.value(i)) << "\n";
    emit(o, os.str());
    return 0;
}

int run_transform(const CLI::App* cmd, Options& o) {
    merge_config(cmd, o);
    Domain d = make_domain(o);
    GridFunction f = make_function(cmd, o, d);
    BasisSpec basis = make_basis(cmd, o);
    TransformSpec t = parse_transform(o.transform);
    std::ostringstream os;
    os << "p,transform,max_ratio,shapes_visited,shapes_skipped\n";
    for (double p : o.p) {
        RatioReport r = shapewise_ratio(t, f, basis, p);
        os << format_double(p) << "," << t.to_string() << ","
           << format_double(r.max_ratio) << "," << r.shapes_visited << ","
           << r.shapes_skipped << "\n";
    }
    emit(o, os.str());
    return 0;
}

int run_jn(const CLI::App* cmd, Options& o) {
    merge_config(cmd, o);
    Domain d = make_domain(o);
    GridFunction f = make_function(cmd, o, d);
    Shape full = Shape::full(d);
    TailCurve curve = tail_curve(f, full, {});
    std::ostringstream os;
    os << tail_curve_to_csv(curve);
    std::vector<double> c2s =
        o.sweep.empty() ? std::vector<double>{0.5, 1.0, 2.0} : parse_sweep_values(o.sweep);
    os << "\nc2,c1,degenerate,moment_p1,moment_p2,moment_p3\n";
    for (double c2 : c2s) {
        EnvelopeConstants env = fit_envelope(curve, c2);
        os << format_double(c2) << "," << format_double(env.c1) << ","
           << (env.degenerate ? 1 : 0);
        for (double p : {1.0, 2.0, 3.0})
            os << "," << format_double(moment_bound(env.c1, c2, p));
        os << "\n";
    }
    emit(o, os.str());
    return 0;
}

int run_cinfty(const CLI::App* cmd, Options& o) {
    merge_config(cmd, o);
    std::ostringstream os;
    os << "p,c_infty\n";
    std::vector<double> ps = o.sweep.empty() ? o.p : parse_sweep_values(o.sweep);
    for (double p : ps) os << format_double(p) << "," << format_double(c_infty(p)) << "\n";
    emit(o, os.str());
    return 0;
}

int run_product(const CLI::App* cmd, Options& o) {
    merge_config(cmd, o);
    if (o.cells.empty()) o.cells = {12, 12};
    Domain d = make_domain(o);
    GridFunction f = make_function(cmd, o, d);
    FactorSplit split = FactorSplit::axiswise(d);
    double slack = o.tol > 0.0 ? o.tol : 1e-9;
    std::ostringstream os;
    bool first = true;
    for (double p : o.p) {
        DecompositionReport r = decomposition_report(f, split, p, true, slack);
        std::string csv = decomposition_to_csv(r);
        if (!first) csv = csv.substr(csv.find('\n') + 1);  // keep one header
        os << csv;
        first = false;
    }
    emit(o, os.str());
    return 0;
}

int run_sharpness(const CLI::App* cmd, Options& o) {
    merge_config(cmd, o);
    emit(o, reference_table_to_json());
    return 0;
}

int run_verify_all(const CLI::App* cmd, Options& o) {
    merge_config(cmd, o);
    std::ostringstream os;
    bool all_pass = true;
    std::string first_failure;
    for (const CheckResult& r : run_acceptance_suite()) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  ("
           << format_double(r.seconds) << " s)  " << r.detail << "\n";
        if (!r.pass && first_failure.empty()) first_failure = r.name;
        all_pass = all_pass && r.pass;
    }
    os << (all_pass ? "ALL CHECKS PASSED\n" : "CHECKS FAILED: " + first_failure + "\n");
    emit(o, os.str());
    if (!all_pass) {
        std::cerr << "failing check: " << first_failure << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"oscillab: p-mean oscillation laboratory for grid functions"};
    app.require_subcommand(1);
    Options o;

    struct Sub {
        const char* name;
        const char* help;
        int (*fn)(const CLI::App*, Options&);
        CLI::App* cmd = nullptr;
    };
    Sub subs[] = {
        {"osc", "oscillation of a generated function on its full domain", run_osc},
        {"norm", "supremum of oscillations over a shape basis", run_norm},
        {"rearrange", "decreasing/signed rearrangements or the distribution table",
         run_rearrange},
        {"transform", "shapewise oscillation ratio of a pointwise transform",
         run_transform},
        {"jn", "level-set tails, envelope fits, and moment bounds", run_jn},
        {"cinfty", "sup-norm comparison constant as a function of p", run_cinfty},
        {"product", "slicewise norms and product-decomposition bounds", run_product},
        {"sharpness", "reference table of sharp constants", run_sharpness},
        {"verify-all", "full release-gate check suite", run_verify_all},
    };
    for (Sub& s : subs) {
        s.cmd = app.add_subcommand(s.name, s.help);
        add_common(s.cmd, o);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (Sub& s : subs)
            if (s.cmd->parsed()) return s.fn(s.cmd, o);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
