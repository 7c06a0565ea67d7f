#pragma once

#include <set>
#include <vector>

namespace trop {

// Abstract simplicial complex on vertices 0..num_vertices-1; stores every
// nonempty simplex as a sorted vertex list.
struct SimplicialComplex {
    int num_vertices = 0;
    std::set<std::vector<int>> simplices;

    void add_simplex(std::vector<int> s);
    bool empty() const { return simplices.empty(); }
    int dimension() const;
    std::vector<int> f_vector() const;
    std::vector<std::vector<int>> facets() const;
    bool is_pure() const;
    long euler_characteristic() const;
};

// Order complex: simplices are the chains of a strict partial order.
SimplicialComplex order_complex(const std::vector<std::vector<bool>>& less);

// Multigraph on n vertices given by an edge list (self-loops allowed).
struct MultiGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

// Edges of a 1-dimensional complex.
MultiGraph one_skeleton(const SimplicialComplex& c);

// Suppresses degree-2 vertices (concatenating their two edges) until none
// remain; isolated vertices are dropped.
MultiGraph suppress_degree_two(const MultiGraph& g);

bool multigraphs_isomorphic(const MultiGraph& a, const MultiGraph& b);

MultiGraph petersen_graph();

bool complexes_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace trop
