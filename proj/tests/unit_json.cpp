#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "trop/json_io.hpp"

using namespace trop;
using namespace troptest;

TEST_CASE("graph round trip") {
    auto g = theta(1, Rat(3, 2), 2);
    Json j = graph_to_json(*g);
    MetricGraph back = graph_from_json(j);
    CHECK(back.num_vertices() == g->num_vertices());
    CHECK(back.num_edges() == g->num_edges());
    for (int e = 0; e < g->num_edges(); ++e) {
        CHECK(back.edge(e).id == g->edge(e).id);
        CHECK(back.edge(e).length == g->edge(e).length);
    }
    CHECK(graph_to_json(back) == j);
    CHECK(j.dump(2) == graph_to_json(back).dump(2));  // byte determinism

    CHECK_THROWS_AS(graph_from_json(Json{{"vertices", Json::array()}}), Error);
    Json bad = j;
    bad["extra"] = 1;
    CHECK_THROWS_AS(graph_from_json(bad), Error);
}

TEST_CASE("divisor round trip") {
    auto g = k4();
    Divisor d = Divisor::at(GraphPoint::vertex(2), 3) +
                Divisor::at(GraphPoint::on_edge(*g, 1, Rat(1, 3)), -2);
    Json j = divisor_to_json(*g, d);
    CHECK(divisor_from_json(*g, j) == d);
    CHECK(divisor_to_json(*g, divisor_from_json(*g, j)) == j);

    CHECK_THROWS_AS(divisor_from_json(*g, Json::parse(R"([{"vertex":"zz","coeff":1}])")), Error);
    CHECK_THROWS_AS(divisor_from_json(*g, Json::parse(R"([{"edge":"e12","offset":"7","coeff":1}])")),
                    Error);
}

TEST_CASE("function round trip") {
    auto g = theta();
    PLFunction f = PLFunction::interpolate(g, {0, -1});
    Json j = function_to_json(f);
    PLFunction back = function_from_json(g, j);
    CHECK(back == f);
    CHECK(function_to_json(back) == j);

    Json missing = j;
    missing["edges"].erase(0);
    CHECK_THROWS_AS(function_from_json(g, missing), Error);
}

TEST_CASE("derived serializations") {
    auto g = theta();
    Divisor k = canonical_divisor(*g);
    CellComplex cc = enumerate_cells(g, k);
    Json j = cell_complex_to_json(cc);
    CHECK(j["f_vector"].size() == cc.f_vector().size());
    CHECK(j["cells"].size() == cc.cells.size());

    auto model = subdivision_model(g, 1);
    CriticalGroup cg = critical_group(model.fine, 0);
    Json jg = critical_group_to_json(cg, 1);
    CHECK(jg["order"] == 3);
    CHECK(jg["invariant_factors"] == Json::array({3}));
    CHECK(jg["base_vertex"] == "a");
    CHECK(jg["superstable_count"] == 3);
}
