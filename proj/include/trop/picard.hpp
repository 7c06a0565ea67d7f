#pragma once

#include <set>

#include "trop/reduce.hpp"

namespace trop {

// Integer Laplacian of a model with the row/column of a base vertex removed.
struct LaplacianMatrix {
    int v0 = 0;
    std::vector<std::vector<Int>> full;     // n x n, rows sum to 0
    std::vector<std::vector<Int>> reduced;  // (n-1) x (n-1)
};

LaplacianMatrix reduced_laplacian(const MetricGraph& g, int v0);

// Diagonal of the integer normal form, divisibility-ordered, entries > 1 only.
std::vector<Int> invariant_factors(std::vector<std::vector<Int>> m);

// |det|, as the product of the full normal-form diagonal.
Int normal_form_order(std::vector<std::vector<Int>> m);

// Spanning trees counted directly; cross-check for the matrix order.
Int spanning_tree_count(const MetricGraph& g);

// All superstable configurations relative to v0 (chips at v0 always 0).
// Throws TooLarge when the matrix order exceeds the cap.
std::vector<VertexDivisor> superstables(const MetricGraph& g, int v0, const Int& cap = 100000);

struct CriticalGroup {
    GraphPtr model;
    int v0 = 0;
    std::vector<Int> factors;  // invariant factors > 1
    Int order;                 // product over the whole diagonal
    std::vector<VertexDivisor> reps;  // superstable coset representatives
    bool reps_complete = false;       // false when the cap suppressed them
};

CriticalGroup critical_group(GraphPtr g, int v0, const Int& cap = 100000);

// The model whose vertices are the points of denominator k, together with the
// refinement from the integer-length base.
struct SubdivisionModel {
    GraphPtr base;
    int level = 1;
    Refinement refinement;
    GraphPtr fine;

    int base_vertex(int v) const { return refinement.vertex_map[v]; }
};

SubdivisionModel subdivision_model(GraphPtr base, int k);

// Re-indexes a superstable configuration from level k1 into level k2
// (same metric points).  Throws NotDivisible / NotSuperstable.
VertexDivisor transition_map(GraphPtr base, int k1, int k2, const VertexDivisor& c, int v0 = 0);

struct FiringEmulation {
    std::vector<std::set<int>> sequence;  // subsets of level-k2 vertices, in firing order
    VertexDivisor result;                 // configuration on the level-k2 model
};

// Emulates one firing of the level-k1 vertex v on the level-k2 model by a
// cascade of nested-neighborhood set firings.  c lives on the level-k1 model;
// throws NotReady when v cannot fire there, NotDivisible when k1 does not
// divide k2.
FiringEmulation emulate_vertex_firing(GraphPtr base, int k1, int k2, int v, const VertexDivisor& c);

// Element of the rational-point Picard group of degree-0 classes, stored as a
// reduced representative at the least sufficient subdivision level.
struct PicardClass {
    GraphPtr base;  // integer-scaled model
    int level = 1;
    int v0 = 0;
    VertexDivisor rep;  // v0-reduced on the level model
};

PicardClass picard_class(GraphPtr g, const Divisor& d);

bool pic_equal(const PicardClass& a, const PicardClass& b);
bool pic_is_identity(const PicardClass& c);
PicardClass pic_add(const PicardClass& a, const PicardClass& b);
// Least n >= 1 with n * c = identity; throws TooLarge past the cap.
Int pic_order(const PicardClass& c, const Int& cap = 1000);

}  // namespace trop
