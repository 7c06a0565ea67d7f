#pragma once

#include <optional>
#include <set>

#include "trop/chipfire.hpp"
#include "trop/plfunction.hpp"

namespace trop {

// Chip counts indexed by vertex of a finite model.
using VertexDivisor = std::vector<Int>;

// Requires every support point of d to be a vertex.
VertexDivisor to_vertex_divisor(const MetricGraph& g, const Divisor& d);
Divisor from_vertex_divisor(const MetricGraph& g, const VertexDivisor& c);

// Dhar burning from q: returns the maximal set of vertices != q that can fire
// simultaneously without going negative (empty iff the configuration away
// from q is superstable).
std::set<int> dhar_unburnt(const MetricGraph& g, const VertexDivisor& c, int q);

bool is_superstable(const MetricGraph& g, const VertexDivisor& c, int q);

// The unique q-reduced divisor linearly equivalent to c on the finite graph.
VertexDivisor q_reduce(const MetricGraph& g, VertexDivisor c, int q);

// Baker-Norine rank on a finite (combinatorial) model.
int rank_on_model(const MetricGraph& g, const VertexDivisor& c);

// Metric rank: scales to integer lengths, evaluates on the unit subdivision
// refined through supp(d), and re-verifies on the doubled subdivision.
// Throws RankDisagreement if the two levels differ.
int rank(const MetricGraph& g, const Divisor& d);

// PLFunction witness f with d1 + (f) = d2, or nullopt when the classes
// differ.  Supports divisors on rational points.
std::optional<PLFunction> is_linearly_equivalent(GraphPtr g, const Divisor& d1,
                                                 const Divisor& d2);

// Shared helper: least k such that every support offset of d on g (assumed to
// have integer lengths) has denominator dividing k.
Int support_denominator(const MetricGraph& g, const Divisor& d);

// Transplants a divisor through a refinement (all support points must land on
// points of the fine model; vertices map to vertices).
Divisor divisor_to_fine(const MetricGraph& base, const Refinement& r, const Divisor& d);

}  // namespace trop
