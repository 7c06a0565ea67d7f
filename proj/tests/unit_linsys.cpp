#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "trop/cells.hpp"

using namespace trop;
using namespace troptest;

static Divisor at_vertex(int v, int c) { return Divisor::at(GraphPoint::vertex(v), c); }

TEST_CASE("segment: complete system of d*v is a d-simplex") {
    for (int d = 1; d <= 5; ++d) {
        auto g = segment(1);
        CellComplex cc = enumerate_cells(g, at_vertex(1, d));
        auto f = cc.f_vector();
        REQUIRE((int)f.size() == d + 1);
        // binomial(d+1, i+1) cells of dimension i
        Int binom = d + 1;
        for (int i = 0; i <= d; ++i) {
            CHECK(Int(f[i]) == binom);
            binom = binom * (d - i) / (i + 2);
        }
        GeneratorSet gs = generating_set(g, at_vertex(1, d));
        CHECK((int)gs.functions.size() == d + 1);
        for (bool e : gs.extremal) CHECK(e);
    }
}

static long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long b = 1;
    for (int j = 1; j <= k; ++j) b = b * (n - j + 1) / j;
    return b;
}

TEST_CASE("circle: cells of |d*v| away from the apex") {
    // The complex is a cone with apex d*v; cells not containing the apex in
    // their closure number (i+1)*C(d, i+2) per dimension i.
    for (int d = 3; d <= 6; ++d) {
        auto c = circle(1);
        CellComplex cc = enumerate_cells(c, at_vertex(0, d));
        int apex = -1;
        for (int i : cc.zero_cells())
            if (zero_cell_divisor(cc, i) == at_vertex(0, d)) apex = i;
        REQUIRE(apex >= 0);
        std::vector<long> away(d, 0);
        for (size_t i = 0; i < cc.cells.size(); ++i) {
            if ((int)i == apex) continue;
            bool touches = std::binary_search(cc.faces[i].begin(), cc.faces[i].end(), apex);
            if (!touches) away[cc.cells[i].dim]++;
        }
        for (int i = 0; i < d; ++i) CHECK(away[i] == (i + 1) * binom(d, i + 2));
        // cone structure fixes the full f-vector
        auto f = cc.f_vector();
        REQUIRE((int)f.size() == d);
        CHECK(f[0] == away[0] + 1);
        for (int i = 1; i < d; ++i) CHECK(f[i] == away[i] + away[i - 1]);
    }
}

TEST_CASE("circle d=3 exact cell structure") {
    auto c = circle(1);
    CellComplex cc = enumerate_cells(c, at_vertex(0, 3));
    auto f = cc.f_vector();
    CHECK(f == std::vector<int>{4, 5, 2});
    CHECK(cc.zero_cells().size() == 4);

    // every 1-cell has two 0-cell faces; every 2-cell has 3+3 proper faces
    for (size_t i = 0; i < cc.cells.size(); ++i) {
        if (cc.cells[i].dim == 1) CHECK(cc.faces[i].size() == 2);
        if (cc.cells[i].dim == 2) CHECK(cc.faces[i].size() == 6);
    }

    GeneratorSet gs = generating_set(c, at_vertex(0, 3));
    CHECK(gs.functions.size() == 3);
    GeneratorSet ex = extremals(c, at_vertex(0, 3));
    CHECK(ex.functions.size() == 3);
}

TEST_CASE("K4 canonical: generators and extremals") {
    auto g = k4();
    Divisor K = canonical_divisor(*g);
    GeneratorSet gs = generating_set(g, K);
    CHECK(gs.functions.size() == 14);
    int n_ext = 0;
    for (bool e : gs.extremal) n_ext += e ? 1 : 0;
    CHECK(n_ext == 7);

    // the whole set is reproduced by its own tropical span
    for (const PLFunction& f : gs.functions) {
        auto coeffs = express_in_generators(f, gs.functions);
        CHECK(coeffs.size() == gs.functions.size());
    }
}

TEST_CASE("K4 canonical: 0-cells of the cell complex") {
    auto g = k4();
    Divisor K = canonical_divisor(*g);
    CellComplex cc = enumerate_cells(g, K);
    CHECK((int)cc.zero_cells().size() == 14);
    for (int i : cc.zero_cells()) {
        Divisor dp = zero_cell_divisor(cc, i);
        CHECK(dp.degree() == 4);
        CHECK(dp.effective());
        PLFunction f = zero_cell_function(cc, i);
        auto found = find_cell(cc, f);
        REQUIRE(found.has_value());
        CHECK(*found == i);
    }
}

TEST_CASE("cell dimension of class members") {
    auto g = k4();
    Divisor K = canonical_divisor(*g);
    CHECK(cell_dimension(g, K, K) == 0);
    CHECK(cell_dimension(g, K, at_vertex(0, 4)) == 0);  // fire v1 once from 4*v1
    Divisor bad = at_vertex(0, 2) + at_vertex(1, 2);    // different class
    CHECK_THROWS_AS(cell_dimension(g, K, bad), NotEquivalent);
    Divisor neg = at_vertex(0, 5) + at_vertex(1, -1);
    CHECK_THROWS_AS(cell_dimension(g, K, neg), NotEquivalent);
}

TEST_CASE("firing poset of K4 canonical has 13 elements") {
    auto g = k4();
    Divisor K = canonical_divisor(*g);
    FiringPoset p = firing_poset(g, K);
    CHECK(p.elements.size() == 13);
    int rel = 0;
    for (auto& row : p.less)
        for (bool b : row) rel += b ? 1 : 0;
    CHECK(rel == 18);
    SimplicialComplex link = link_fine_subdivision(g, K);
    CHECK(link.num_vertices == 13);
    CHECK(link.dimension() == 1);
}

TEST_CASE("firing poset of theta canonical: three incomparable circuits") {
    auto g = theta();
    Divisor K = canonical_divisor(*g);  // one chip per vertex
    FiringPoset p = firing_poset(g, K);
    CHECK(p.elements.size() == 3);
    for (auto& row : p.less)
        for (bool b : row) CHECK(!b);
}

TEST_CASE("one cells at a zero cell") {
    auto c = circle(1);
    CellComplex cc = enumerate_cells(c, at_vertex(0, 3));
    // the apex 3v is joined to the three other 0-cells
    auto ones = one_cells_at(cc, at_vertex(0, 3));
    CHECK(ones.size() == 3);
    CHECK_THROWS_AS(one_cells_at(cc, at_vertex(0, 2)), NotAVertex);
}
