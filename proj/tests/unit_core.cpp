#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "trop/chipfire.hpp"
#include "trop/divisor.hpp"
#include "trop/plfunction.hpp"
#include "trop/reduce.hpp"

using namespace trop;
using namespace troptest;

TEST_CASE("graph basics") {
    auto g = k4();
    CHECK(g->num_vertices() == 4);
    CHECK(g->num_edges() == 6);
    CHECK(g->genus() == 3);
    CHECK(g->degree(0) == 3);
    CHECK(g->total_length() == Rat(6));

    auto c = circle(3);
    CHECK(c->genus() == 1);
    CHECK(c->degree(0) == 2);

    CHECK_THROWS_AS(make_graph({"a", "b"}, {}), DisconnectedGraph);
    CHECK_THROWS_AS(make_graph({"a", "b"}, {{"e", "a", "b", Rat(0)}}), NonpositiveLength);
}

TEST_CASE("graph points and canonical divisor") {
    auto g = k4();
    GraphPoint p = GraphPoint::on_edge(*g, 0, Rat(0));
    CHECK(p.at_vertex());
    CHECK(p.vertex_index() == 0);
    GraphPoint q = GraphPoint::on_edge(*g, 0, Rat(1, 2));
    CHECK(!q.at_vertex());
    CHECK(q.valence(*g) == 2);
    CHECK(q.smooth(*g));
    CHECK(GraphPoint::vertex(1).valence(*g) == 3);

    Divisor K = canonical_divisor(*g);
    CHECK(K.degree() == 4);  // 2g - 2
    CHECK(K.coeff(GraphPoint::vertex(0)) == 1);

    CHECK(canonical_divisor(*circle()).is_zero());
}

TEST_CASE("subdivision and refinement") {
    auto g = banana(3, 1);
    MetricGraph s = subdivide(*g, 2);
    CHECK(s.num_vertices() == 2 + 3);
    CHECK(s.num_edges() == 6);
    for (auto& e : s.edges()) CHECK(e.length == Rat(1, 2));

    // refine_at keeps points addressable in both directions
    auto g2 = k4();
    GraphPoint mid = GraphPoint::on_edge(*g2, 3, Rat(1, 2));
    Refinement r = refine_at(*g2, {mid});
    CHECK(r.fine.num_vertices() == 5);
    GraphPoint fine_mid = r.to_fine(*g2, mid);
    CHECK(fine_mid.at_vertex());
    CHECK(r.to_base(*g2, fine_mid) == mid);
}

TEST_CASE("components minus a cut") {
    auto g = k4();
    GraphPoint m = GraphPoint::on_edge(*g, 0, Rat(1, 2));
    auto comps = components_minus(*g, {m});
    CHECK(comps.size() == 1);
    CHECK(!is_smooth_cut_set(*g, {m}));

    auto c = circle(1);
    GraphPoint a = GraphPoint::on_edge(*c, 0, Rat(1, 4));
    GraphPoint b = GraphPoint::on_edge(*c, 0, Rat(3, 4));
    CHECK(components_minus(*c, {a}).size() == 1);
    CHECK(components_minus(*c, {a, b}).size() == 2);
    CHECK(is_smooth_cut_set(*c, {a, b}));
}

TEST_CASE("pl function construction and divisor") {
    auto g = segment(2);
    // f rises with slope 1 then falls with slope -1, peak at midpoint
    PL1D tent;
    tent.pts = {{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(0)}};
    PLFunction f = PLFunction::from_edge_data(g, {tent});
    GraphPoint mid = GraphPoint::on_edge(*g, 0, Rat(1));
    CHECK(f.order_at(mid) == -2);
    CHECK(f.order_at(GraphPoint::vertex(0)) == 1);
    Divisor div = f.divisor();
    CHECK(div.degree() == 0);
    CHECK(div.coeff(mid) == -2);

    CHECK(f.max_over_graph() == Rat(1));
    CHECK(f.min_over_graph() == Rat(0));
    ClosedSubgraph top = f.level_set(Rat(1));
    CHECK(top.contains(*g, mid));
    CHECK(!top.contains(*g, GraphPoint::vertex(0)));
}

TEST_CASE("pl function continuity is enforced") {
    auto g = theta();
    PL1D a = PL1D::linear(Rat(1), Rat(0), Rat(1));
    PL1D b = PL1D::linear(Rat(1), Rat(0), Rat(1));
    PL1D c = PL1D::linear(Rat(1), Rat(0), Rat(0));
    CHECK_THROWS_AS(PLFunction::from_edge_data(g, {a, b, c}), Error);
    PL1D c2 = PL1D::linear(Rat(1), Rat(0), Rat(1));
    PLFunction f = PLFunction::from_edge_data(g, {a, b, c2});
    CHECK(f.order_at(GraphPoint::vertex(0)) == 3);
    CHECK(f.order_at(GraphPoint::vertex(1)) == -3);
}

TEST_CASE("tropical combine") {
    auto g = segment(1);
    PLFunction f0 = PLFunction::constant(g, Rat(0));
    PLFunction f1 = PLFunction::interpolate(g, {Rat(0), Rat(1)});
    PLFunction m = tropical_combine({{Rat(0), f0}, {Rat(-1), f1}});
    // max(0, x - 1) on [0,1] is 0
    CHECK(m.is_constant());
    PLFunction m2 = tropical_combine({{Rat(0), f0}, {Rat(0), f1}});
    CHECK(m2.max_over_graph() == Rat(1));
    CHECK(m2.value(GraphPoint::vertex(0)) == Rat(0));
}

TEST_CASE("chip firing function on a circle") {
    auto c = circle(4);
    GraphPoint a = GraphPoint::on_edge(*c, 0, Rat(1));
    GraphPoint b = GraphPoint::on_edge(*c, 0, Rat(3));
    ClosedSubgraph arc(*c, {}, {{0, {{Rat(1), Rat(3)}}}});
    PLFunction f = chip_firing_function(c, arc, Rat(1, 2));
    CHECK(f.value(a) == Rat(0));
    CHECK(f.value(GraphPoint::vertex(0)) == Rat(-1, 2));
    Divisor d = f.divisor();
    CHECK(d.coeff(a) == -1);
    CHECK(d.coeff(b) == -1);
    CHECK(d.degree() == 0);
}

TEST_CASE("can_fire caps and obstructions") {
    auto c = circle(4);
    GraphPoint a = GraphPoint::on_edge(*c, 0, Rat(1));
    GraphPoint b = GraphPoint::on_edge(*c, 0, Rat(3));
    ClosedSubgraph arc(*c, {}, {{0, {{Rat(1), Rat(3)}}}});

    Divisor d;
    d.add(a, 1);
    d.add(b, 1);
    auto l = can_fire(c, d, arc);
    REQUIRE(l.has_value());
    CHECK(*l == Rat(1));  // chips meet at the far point

    Divisor short_d;
    short_d.add(a, 1);
    CHECK(!can_fire(c, short_d, arc).has_value());
}

TEST_CASE("decompose round trip on a simple function") {
    auto g = theta();
    PL1D a = PL1D::linear(Rat(1), Rat(0), Rat(1));
    PLFunction f = PLFunction::from_edge_data(g, {a, a, a});
    auto moves = decompose_function(f);
    REQUIRE(!moves.empty());
    PLFunction sum = PLFunction::constant(g, Rat(0));
    for (auto& m : moves) {
        sum = sum + (m.f.add_const(-m.high_value));
        for (auto& piece : decompose_weighted_move(m)) {
            (void)piece;  // validated inside
        }
    }
    CHECK(sum == f.add_const(-f.max_over_graph()));
}

TEST_CASE("q-reduction and rank on models") {
    auto g = k4();
    VertexDivisor c = {Int(4), Int(0), Int(0), Int(0)};
    VertexDivisor red = q_reduce(*g, c, 0);
    CHECK(is_superstable(*g, red, 0));
    CHECK(rank_on_model(*g, c) == 2);

    // canonical divisor of K4: one chip per vertex, rank g - 1
    VertexDivisor K = {Int(1), Int(1), Int(1), Int(1)};
    CHECK(rank_on_model(*g, K) == 2);
}

TEST_CASE("metric rank via subdivision agreement") {
    auto g = k4();
    Divisor K = canonical_divisor(*g);
    CHECK(rank(*g, K) == 2);

    Divisor neg;
    neg.add(GraphPoint::vertex(0), -1);
    CHECK(rank(*g, neg) == -1);

    // Riemann-Roch sanity on one instance: deg 5 >= 2g-1 forces rank d-g
    Divisor d5;
    d5.add(GraphPoint::vertex(0), 5);
    CHECK(rank(*g, d5) == 2);
}

TEST_CASE("linear equivalence with witness") {
    auto c = circle(2);
    GraphPoint a = GraphPoint::on_edge(*c, 0, Rat(1, 2));
    GraphPoint b = GraphPoint::on_edge(*c, 0, Rat(3, 2));
    Divisor d1, d2, d3;
    d1.add(a, 1);
    d1.add(b, 1);
    d2.add(GraphPoint::vertex(0), 2);  // position sums agree mod the circumference
    d3.add(GraphPoint::vertex(0), 1);
    d3.add(a, 1);

    auto w = is_linearly_equivalent(c, d1, d2);
    REQUIRE(w.has_value());
    Divisor moved = d1 + w->divisor();
    CHECK(moved == d2);
    CHECK(!is_linearly_equivalent(c, d1, d3).has_value());
}
