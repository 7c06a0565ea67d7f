#pragma once

#include <map>
#include <optional>

#include "trop/chipfire.hpp"
#include "trop/plfunction.hpp"
#include "trop/reduce.hpp"
#include "trop/simplicial.hpp"

namespace trop {

// Discrete data of a cell of |D| on a fixed model: chips at vertices, an
// ordered composition of chips along each edge, and the slope of f on the
// initial segment of each edge (tail to head).
struct CellRecord {
    std::vector<Int> dv;
    std::vector<std::vector<Int>> de;
    std::vector<Int> m0;
    int dim = 0;

    friend bool operator==(const CellRecord& a, const CellRecord& b) {
        return a.dv == b.dv && a.de == b.de && a.m0 == b.m0;
    }
    friend bool operator<(const CellRecord& a, const CellRecord& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.dv != b.dv) return a.dv < b.dv;
        if (a.de != b.de) return a.de < b.de;
        return a.m0 < b.m0;
    }
};

struct CellComplex {
    GraphPtr base;           // graph the divisor was given on
    GraphPtr model;          // base refined so supp(D) sits at vertices
    Refinement refinement;   // base -> model
    Divisor d_model;
    std::vector<CellRecord> cells;         // sorted by (dim, data)
    std::vector<std::vector<int>> faces;   // per cell: indices of all proper faces

    std::vector<int> f_vector() const;
    std::vector<int> zero_cells() const;
};

// Enumerates every cell of |D| subordinate to the model.  slope_bound 0 means
// the default bound (sum of positive coefficients of D).
CellComplex enumerate_cells(GraphPtr g, const Divisor& d, const Int& slope_bound = 0);

// The unique function (normalized) of a 0-dimensional cell, on the model.
PLFunction zero_cell_function(const CellComplex& cc, int cell_index);

// The divisor D + (f) of a 0-cell, on the model.
Divisor zero_cell_divisor(const CellComplex& cc, int cell_index);

// Locates the cell whose discrete data matches f (given on the model graph).
std::optional<int> find_cell(const CellComplex& cc, const PLFunction& f_model);

// 1-cells incident to a given 0-cell divisor.  Throws NotAVertex when dp is
// not a 0-cell of the complex.
std::vector<int> one_cells_at(const CellComplex& cc, const Divisor& dp_on_base);

struct GeneratorSet {
    GraphPtr graph;
    std::vector<PLFunction> functions;  // normalized, on the base graph
    std::vector<bool> extremal;
    std::vector<Divisor> divisors;  // D + (f), on the base graph

    GeneratorSet extremal_subset() const;
};

GeneratorSet generating_set(GraphPtr g, const Divisor& d, const Int& slope_bound = 0);
GeneratorSet extremals(GraphPtr g, const Divisor& d, const Int& slope_bound = 0);

// Coefficients a_i = min(f - g_i) with max_i(a_i + g_i) = f; NotInSpan if the
// envelope misses f.
std::vector<Rat> express_in_generators(const PLFunction& f, const std::vector<PLFunction>& gens);

// Dimension of the open cell of |D| containing dp (both on g's model).
int cell_dimension(GraphPtr g, const Divisor& d, const Divisor& dp);

struct FiringPosetElement {
    std::set<int> edges;
    std::set<int> vertices;
    // (vertex, incidence slot in model->incidences(vertex)) -> weight >= 1.
    std::map<std::pair<int, int>, Int> weights;

    friend bool operator==(const FiringPosetElement&, const FiringPosetElement&) = default;
};

struct FiringPoset {
    GraphPtr model;
    Divisor d_model;
    std::vector<FiringPosetElement> elements;
    std::vector<std::vector<bool>> less;  // strict order
};

FiringPoset firing_poset(GraphPtr g, const Divisor& d);

SimplicialComplex link_fine_subdivision(GraphPtr g, const Divisor& d);

// Union of closed subgraphs.
ClosedSubgraph subgraph_union(const MetricGraph& g, const std::vector<ClosedSubgraph>& parts);

}  // namespace trop
