#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "trop/json_io.hpp"

using namespace trop;

namespace {

struct CommonOpts {
    std::string graph_path;
    std::string divisor_path;
    std::string out_path;
    std::string format = "json";
};

void emit(const Json& j, const CommonOpts& opts) {
    std::string text = j.dump(2) + "\n";
    if (!opts.out_path.empty()) {
        std::ofstream out(opts.out_path);
        if (!out) throw Error("cannot write file: " + opts.out_path);
        out << text;
    }
    if (opts.format == "json") std::cout << text;
}

GraphPtr load_graph(const std::string& path) {
    return std::make_shared<MetricGraph>(graph_from_json(load_json_file(path)));
}

int run_linsys(const CommonOpts& opts, long long slope_bound) {
    GraphPtr g = load_graph(opts.graph_path);
    Divisor d = divisor_from_json(*g, load_json_file(opts.divisor_path));
    Json j;
    j["degree"] = static_cast<long long>(to_int(d.degree()));
    if (d.degree() < 0) {
        j["empty"] = true;
        j["reason"] = "empty linear system";
        emit(j, opts);
        return 0;
    }
    Int bound(slope_bound);
    CellComplex cc = enumerate_cells(g, d, bound);
    j["empty"] = cc.cells.empty();
    if (cc.cells.empty()) j["reason"] = "empty linear system";
    j["complex"] = cell_complex_to_json(cc);
    GeneratorSet gens = generating_set(g, d, bound);
    j["generators"] = Json::array();
    for (const auto& f : gens.functions) j["generators"].push_back(function_to_json(f));
    j["generator_divisors"] = Json::array();
    for (const auto& dv : gens.divisors) j["generator_divisors"].push_back(divisor_to_json(*g, dv));
    Json ext = Json::array();
    for (size_t i = 0; i < gens.extremal.size(); ++i)
        if (gens.extremal[i]) ext.push_back(i);
    j["extremals"] = ext;
    j["link"] = complex_to_json(link_fine_subdivision(g, d));
    emit(j, opts);
    return 0;
}

int run_embed(const CommonOpts& opts, const std::string& functions_path, int level) {
    GraphPtr g = load_graph(opts.graph_path);
    Divisor d = divisor_from_json(*g, load_json_file(opts.divisor_path));

    std::vector<PLFunction> fs;
    if (!functions_path.empty()) {
        Json jf = load_json_file(functions_path);
        if (!jf.is_array()) throw Error("functions file must be an array");
        for (const auto& f : jf) fs.push_back(function_from_json(g, f));
    }
    if (fs.empty() || !is_base_point_free(fs, d).free) {
        std::vector<PLFunction> gens = generating_set(g, d).functions;
        if (gens.empty() || !is_base_point_free(gens, d).free) {
            std::cerr << "no base-point-free function set available for this divisor\n";
            return 4;
        }
        if (fs.empty()) fs = std::move(gens);
        else {
            std::cerr << "provided functions have a base point\n";
            return 4;
        }
    }

    EmbeddedCurve curve = balance(g, fs, d);
    Json j = curve_to_json(curve);
    j["degree"] = static_cast<long long>(to_int(curve_degree(curve)));
    VeryAmpleResult va = is_very_ample(g, d);
    j["very_ample"] = va.very_ample;
    if (va.collision) {
        j["collision"] = {va.collision->first.describe(*g), va.collision->second.describe(*g)};
    }
    HyperellipticResult hy = is_hyperelliptic(g, level);
    j["hyperelliptic"] = hy.witness.has_value();
    if (hy.witness) j["hyperelliptic_witness"] = divisor_to_json(*g, *hy.witness);
    j["hyperelliptic_verified_level"] = hy.verified_level;
    emit(j, opts);
    return 0;
}

int run_picard(const CommonOpts& opts, int level, long long cap) {
    GraphPtr g = load_graph(opts.graph_path);
    Int s = g->integral_scale();
    auto scaled = std::make_shared<const MetricGraph>(g->scaled(Rat(s)));
    SubdivisionModel model = subdivision_model(scaled, level);
    CriticalGroup cg = critical_group(model.fine, model.base_vertex(0), Int(cap));
    Json j = critical_group_to_json(cg, level);
    if (!opts.divisor_path.empty()) {
        Divisor d = divisor_from_json(*g, load_json_file(opts.divisor_path));
        PicardClass pc = picard_class(g, d);
        SubdivisionModel pm = subdivision_model(pc.base, pc.level);
        Json jc;
        jc["level"] = pc.level;
        jc["order"] = static_cast<long long>(to_int(pic_order(pc, Int(cap))));
        jc["representative"] = divisor_to_json(*pm.fine, from_vertex_divisor(*pm.fine, pc.rep));
        j["class"] = jc;
    }
    emit(j, opts);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with divisors on metric graphs"};
    app.require_subcommand(1);

    CommonOpts opts;
    long long slope_bound = 0;
    long long cap = 100000;
    int model_level = 1;
    int hyper_level = 2;
    std::string functions_path;

    auto add_common = [&](CLI::App* cmd, bool needs_divisor) {
        cmd->add_option("--graph", opts.graph_path, "graph JSON file")->required();
        auto* dopt = cmd->add_option("--divisor", opts.divisor_path, "divisor JSON file");
        if (needs_divisor) dopt->required();
        cmd->add_option("--out", opts.out_path, "write the result to this file");
        cmd->add_option("--format", opts.format, "json or off")
            ->check(CLI::IsMember({"json", "off"}));
    };

    CLI::App* linsys = app.add_subcommand("linsys", "cells, generators, and the firing link");
    add_common(linsys, true);
    linsys->add_option("--slope-bound", slope_bound, "slope bound override (0 = default)");

    CLI::App* embed = app.add_subcommand("embed", "balanced curve, degree, ampleness");
    add_common(embed, true);
    embed->add_option("--functions", functions_path, "explicit function set JSON file");
    embed->add_option("--model-level", hyper_level, "hyperellipticity search depth");

    CLI::App* picard = app.add_subcommand("picard", "critical group of a subdivision");
    add_common(picard, false);
    picard->add_option("--model-level", model_level, "subdivision level k");
    picard->add_option("--cap", cap, "enumeration cap");

    CLI11_PARSE(app, argc, argv);

    try {
        if (linsys->parsed()) return run_linsys(opts, slope_bound);
        if (embed->parsed()) return run_embed(opts, functions_path, hyper_level);
        return run_picard(opts, model_level, cap);
    } catch (const TooLarge& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const NotBasePointFree& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 4;
    } catch (const NotReady& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 4;
    } catch (const NotDivisible& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 4;
    } catch (const NotSuperstable& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 4;
    } catch (const NonIntegralLengths& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
}
