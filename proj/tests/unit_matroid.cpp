#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "trop/cells.hpp"
#include "trop/matroid.hpp"

using namespace trop;
using namespace troptest;

TEST_CASE("bond circuits") {
    auto g = k4();
    CographicMatroid m = cographic_matroid(g);
    // 4 vertex stars + 3 balanced bipartitions
    CHECK(m.circuits.size() == 7);
    CHECK(m.rank_all() == 3);
    int size3 = 0, size4 = 0;
    for (const auto& c : m.circuits) {
        if (c.size() == 3) size3++;
        if (c.size() == 4) size4++;
    }
    CHECK(size3 == 4);
    CHECK(size4 == 3);

    auto th = theta();
    CographicMatroid mt = cographic_matroid(th);
    REQUIRE(mt.circuits.size() == 1);
    CHECK(mt.circuits[0] == std::set<int>{0, 1, 2});
    CHECK(mt.rank_all() == 2);
}

TEST_CASE("flats vs closure on K4") {
    auto g = k4();
    CographicMatroid m = cographic_matroid(g);
    int flat_count = 0;
    for (int mask = 0; mask < (1 << 6); ++mask) {
        std::set<int> a;
        for (int e = 0; e < 6; ++e)
            if (mask & (1 << e)) a.insert(e);
        bool fl = m.is_flat(a);
        CHECK(fl == (m.closure(a) == a));
        if (fl) flat_count++;
    }
    CHECK(flat_count == 15);  // bottom + 13 proper + top

    FlatLattice lat = lattice_of_flats(m);
    CHECK(lat.flats.size() == 15);
    CHECK(lat.flats[lat.bottom].empty());  // no bridges in K4
    CHECK(lat.flats[lat.top].size() == 6);
    int singles = 0, pairs = 0, triples = 0;
    for (int i = 0; i < 15; ++i) {
        if (i == lat.bottom || i == lat.top) continue;
        size_t s = lat.flats[i].size();
        if (s == 1) singles++;
        if (s == 2) pairs++;
        if (s == 3) triples++;
    }
    CHECK(singles == 6);
    CHECK(pairs == 3);  // pairs of opposite edges
    CHECK(triples == 4);  // complements of vertex stars
}

TEST_CASE("bergman complex of K4 is a subdivided Petersen graph") {
    auto g = k4();
    SimplicialComplex berg = bergman_complex(cographic_matroid(g));
    CHECK(berg.num_vertices == 13);
    CHECK(berg.f_vector() == std::vector<int>{13, 18});
    CHECK(berg.dimension() == 1);
    MultiGraph sk = suppress_degree_two(one_skeleton(berg));
    CHECK(multigraphs_isomorphic(sk, petersen_graph()));
}

TEST_CASE("degenerate flat lattices") {
    // a bridge is a one-element circuit (a loop of the matroid); the only
    // flat is the whole ground set
    auto seg = segment();
    CographicMatroid m = cographic_matroid(seg);
    REQUIRE(m.circuits.size() == 1);
    CHECK(m.circuits[0] == std::set<int>{0});
    CHECK(m.rank(std::set<int>{0}) == 0);
    FlatLattice lat = lattice_of_flats(m);
    CHECK(lat.flats.size() == 1);
    CHECK(lat.bottom == lat.top);
    CHECK(bergman_complex(m).empty());

    // theta: three incomparable singleton flats
    SimplicialComplex bt = bergman_complex(cographic_matroid(theta()));
    CHECK(bt.f_vector() == std::vector<int>{3});
}

TEST_CASE("link contains bergman: equality on K4") {
    auto g = k4();
    SimplicialComplex link = link_fine_subdivision(g, canonical_divisor(*g));
    SimplicialComplex berg = bergman_complex(cographic_matroid(g));
    BergmanEmbedding emb = link_contains_bergman(g, link, berg);
    CHECK(emb.contained);
    CHECK(emb.equal);
    CHECK(emb.extra_link_vertices.empty());
    CHECK(!emb.failing_simplex.has_value());
}

TEST_CASE("link contains bergman: strict on the prism") {
    auto g = prism();
    SimplicialComplex link = link_fine_subdivision(g, canonical_divisor(*g));
    SimplicialComplex berg = bergman_complex(cographic_matroid(g));
    BergmanEmbedding emb = link_contains_bergman(g, link, berg);
    CHECK(emb.contained);
    CHECK(!emb.equal);
    CHECK(!emb.extra_link_vertices.empty());
}
