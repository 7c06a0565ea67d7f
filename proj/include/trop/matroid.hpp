#pragma once

#include <optional>
#include <set>

#include "trop/cells.hpp"
#include "trop/simplicial.hpp"

namespace trop {

// Matroid on the edge set of a model whose dependent sets are the edge cuts.
struct CographicMatroid {
    GraphPtr graph;
    std::vector<std::set<int>> circuits;  // minimal cuts (bonds)

    int rank(const std::set<int>& a) const;
    int rank_all() const;  // = genus
    std::set<int> closure(const std::set<int>& a) const;
    // Flat test: the complement is a union of graph circuits, equivalently
    // spans a bridgeless subgraph.
    bool is_flat(const std::set<int>& a) const;
};

CographicMatroid cographic_matroid(GraphPtr g);

struct FlatLattice {
    std::vector<std::set<int>> flats;  // sorted by (size, contents)
    int bottom = -1;                   // set of rank-0 elements (bridges)
    int top = -1;                      // full ground set
    std::vector<std::vector<bool>> less;  // strict inclusion
};

FlatLattice lattice_of_flats(const CographicMatroid& m);

// Order complex of the proper part (flats strictly between bottom and top).
SimplicialComplex bergman_complex(const CographicMatroid& m);

struct BergmanEmbedding {
    bool contained = false;
    bool equal = false;
    std::vector<int> vertex_map;  // bergman vertex -> link vertex
    std::vector<int> extra_link_vertices;
    std::optional<std::vector<int>> failing_simplex;
};

// Realizes the Bergman complex inside the link fine subdivision for D = K on
// the same model: a proper flat maps to the firing-poset element whose
// subgraph is the flat's complement with all chip weights 1.
BergmanEmbedding link_contains_bergman(GraphPtr g, const SimplicialComplex& link,
                                       const SimplicialComplex& berg);

}  // namespace trop
