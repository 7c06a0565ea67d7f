#include "trop/json_io.hpp"

#include <fstream>

namespace trop {

namespace {

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw Error("expected a rational as integer or \"p/q\" string");
}

long long int_from_json(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) throw Error(what + " must be an integer");
    return j.get<long long>();
}

Json int_to_json(const Int& v) { return Json(static_cast<long long>(to_int(v))); }

}  // namespace

void require_keys(const Json& obj, const std::vector<std::string>& allowed,
                  const std::vector<std::string>& required, const std::string& what) {
    if (!obj.is_object()) throw Error(what + " must be a JSON object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw Error("unknown key \"" + it.key() + "\" in " + what);
    }
    for (const auto& k : required)
        if (!obj.contains(k)) throw Error(what + " is missing key \"" + k + "\"");
}

MetricGraph graph_from_json(const Json& j) {
    require_keys(j, {"vertices", "edges"}, {"vertices", "edges"}, "graph");
    GraphSpec spec;
    if (!j["vertices"].is_array()) throw Error("graph vertices must be an array");
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw Error("vertex ids must be strings");
        spec.vertices.push_back(v.get<std::string>());
    }
    if (!j["edges"].is_array()) throw Error("graph edges must be an array");
    for (const auto& e : j["edges"]) {
        require_keys(e, {"id", "ends", "length"}, {"id", "ends", "length"}, "edge");
        if (!e["ends"].is_array() || e["ends"].size() != 2)
            throw Error("edge ends must be a pair of vertex ids");
        spec.edges.push_back({e["id"].get<std::string>(), e["ends"][0].get<std::string>(),
                              e["ends"][1].get<std::string>(), rat_from_json(e["length"])});
    }
    return build_graph(spec);
}

Json graph_to_json(const MetricGraph& g) {
    Json j;
    j["vertices"] = g.vertex_ids();
    j["edges"] = Json::array();
    for (const auto& e : g.edges()) {
        Json je;
        je["id"] = e.id;
        je["ends"] = {g.vertex_id(e.u), g.vertex_id(e.v)};
        je["length"] = format_rational(e.length);
        j["edges"].push_back(je);
    }
    return j;
}

Divisor divisor_from_json(const MetricGraph& g, const Json& j) {
    if (!j.is_array()) throw Error("divisor must be an array of terms");
    Divisor d;
    for (const auto& t : j) {
        if (!t.is_object()) throw Error("divisor term must be an object");
        Int c;
        if (t.contains("vertex")) {
            require_keys(t, {"vertex", "coeff"}, {"vertex", "coeff"}, "divisor term");
            auto v = g.find_vertex(t["vertex"].get<std::string>());
            if (!v) throw Error("unknown vertex \"" + t["vertex"].get<std::string>() + "\"");
            d.add(GraphPoint::vertex(*v), Int(int_from_json(t["coeff"], "coeff")));
        } else {
            require_keys(t, {"edge", "offset", "coeff"}, {"edge", "offset", "coeff"},
                         "divisor term");
            auto e = g.find_edge(t["edge"].get<std::string>());
            if (!e) throw Error("unknown edge \"" + t["edge"].get<std::string>() + "\"");
            Rat off = rat_from_json(t["offset"]);
            if (off < 0 || off > g.edge(*e).length)
                throw Error("offset outside edge \"" + g.edge(*e).id + "\"");
            d.add(GraphPoint::on_edge(g, *e, off), Int(int_from_json(t["coeff"], "coeff")));
        }
    }
    return d;
}

Json divisor_to_json(const MetricGraph& g, const Divisor& d) {
    Json j = Json::array();
    for (const auto& [p, c] : d.coeffs()) {
        Json t;
        if (p.at_vertex()) {
            t["vertex"] = g.vertex_id(p.vertex_index());
        } else {
            t["edge"] = g.edge(p.edge_index()).id;
            t["offset"] = format_rational(p.offset());
        }
        t["coeff"] = int_to_json(c);
        j.push_back(t);
    }
    return j;
}

PLFunction function_from_json(GraphPtr g, const Json& j) {
    require_keys(j, {"edges"}, {"edges"}, "function");
    std::vector<PL1D> per_edge(g->num_edges());
    std::vector<bool> seen(g->num_edges(), false);
    for (const auto& je : j["edges"]) {
        require_keys(je, {"edge", "points"}, {"edge", "points"}, "function edge");
        auto e = g->find_edge(je["edge"].get<std::string>());
        if (!e) throw Error("unknown edge \"" + je["edge"].get<std::string>() + "\"");
        PL1D f;
        for (const auto& pt : je["points"]) {
            if (!pt.is_array() || pt.size() != 2)
                throw Error("function breakpoints must be [offset, value] pairs");
            f.pts.emplace_back(rat_from_json(pt[0]), rat_from_json(pt[1]));
        }
        per_edge[*e] = std::move(f);
        seen[*e] = true;
    }
    for (int e = 0; e < g->num_edges(); ++e)
        if (!seen[e]) throw Error("function is missing edge \"" + g->edge(e).id + "\"");
    return PLFunction::from_edge_data(std::move(g), std::move(per_edge));
}

Json function_to_json(const PLFunction& f) {
    Json j;
    j["edges"] = Json::array();
    for (int e = 0; e < f.graph().num_edges(); ++e) {
        Json je;
        je["edge"] = f.graph().edge(e).id;
        je["points"] = Json::array();
        for (const auto& [x, y] : f.on_edge(e).pts)
            je["points"].push_back({format_rational(x), format_rational(y)});
        j["edges"].push_back(je);
    }
    return j;
}

Json complex_to_json(const SimplicialComplex& c) {
    Json j;
    j["num_vertices"] = c.num_vertices;
    j["f_vector"] = c.f_vector();
    j["facets"] = c.facets();
    return j;
}

Json cell_complex_to_json(const CellComplex& cc) {
    Json j;
    j["f_vector"] = cc.f_vector();
    j["cells"] = Json::array();
    for (const auto& cell : cc.cells) {
        Json jc;
        jc["dim"] = cell.dim;
        jc["vertex_chips"] = Json::array();
        for (const Int& x : cell.dv) jc["vertex_chips"].push_back(int_to_json(x));
        jc["edge_chips"] = Json::array();
        for (const auto& comp : cell.de) {
            Json row = Json::array();
            for (const Int& x : comp) row.push_back(int_to_json(x));
            jc["edge_chips"].push_back(row);
        }
        jc["start_slopes"] = Json::array();
        for (const Int& x : cell.m0) jc["start_slopes"].push_back(int_to_json(x));
        j["cells"].push_back(jc);
    }
    j["faces"] = cc.faces;
    return j;
}

namespace {

Json point_to_json(const TropicalProjectivePoint& p) {
    Json j = Json::array();
    for (const Rat& c : p.coords) j.push_back(format_rational(c));
    return j;
}

Json direction_to_json(const std::vector<Int>& v) {
    Json j = Json::array();
    for (const Int& x : v) j.push_back(int_to_json(x));
    return j;
}

}  // namespace

Json curve_to_json(const EmbeddedCurve& c) {
    Json j;
    j["ambient"] = c.ambient;
    j["segments"] = Json::array();
    for (const auto& s : c.segments) {
        Json js;
        js["a"] = point_to_json(s.a);
        js["b"] = point_to_json(s.b);
        js["direction"] = direction_to_json(s.direction);
        js["multiplicity"] = int_to_json(s.multiplicity);
        j["segments"].push_back(js);
    }
    j["rays"] = Json::array();
    for (const auto& r : c.rays) {
        Json jr;
        jr["base"] = point_to_json(r.base);
        jr["direction"] = direction_to_json(r.direction);
        jr["multiplicity"] = int_to_json(r.multiplicity);
        j["rays"].push_back(jr);
    }
    return j;
}

Json critical_group_to_json(const CriticalGroup& cg, int level) {
    Json j;
    j["invariant_factors"] = Json::array();
    for (const Int& f : cg.factors) j["invariant_factors"].push_back(int_to_json(f));
    j["order"] = int_to_json(cg.order);
    j["base_vertex"] = cg.model->vertex_id(cg.v0);
    j["level"] = level;
    if (cg.reps_complete) j["superstable_count"] = cg.reps.size();
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw Error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace trop
