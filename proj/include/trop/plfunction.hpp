#pragma once

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "trop/divisor.hpp"
#include "trop/graph.hpp"

namespace trop {

using GraphPtr = std::shared_ptr<const MetricGraph>;

// Piecewise linear function on a single interval [0, L], stored as breakpoints
// (offset, value) with strictly increasing offsets; first offset is 0 and the
// last is L.  Canonical form keeps no collinear interior breakpoints.
struct PL1D {
    std::vector<std::pair<Rat, Rat>> pts;

    static PL1D constant(const Rat& len, const Rat& value);
    static PL1D linear(const Rat& len, const Rat& v0, const Rat& v1);

    const Rat& length() const { return pts.back().first; }
    Rat value(const Rat& x) const;
    // Slope on segment [pts[i], pts[i+1]].
    Rat slope(int i) const;
    bool integer_slopes() const;

    void canonicalize();

    // Restriction to [a, b], reparameterized to start at 0.
    PL1D slice(const Rat& a, const Rat& b) const;

    PL1D negate() const;
    PL1D shift(const Rat& c) const;
    PL1D scale(const Int& n) const;

    static PL1D add(const PL1D& f, const PL1D& g);
    static PL1D min(const PL1D& f, const PL1D& g);
    static PL1D max(const PL1D& f, const PL1D& g);

    friend bool operator==(const PL1D&, const PL1D&) = default;
};

// Continuous piecewise linear function with integer slopes on a metric graph.
// Stored per edge; continuity at vertices is part of the invariant.
class PLFunction {
public:
    PLFunction() = default;

    static PLFunction constant(GraphPtr g, const Rat& value);
    // Validates lengths, continuity at shared vertices, and integer slopes.
    static PLFunction from_edge_data(GraphPtr g, std::vector<PL1D> per_edge);
    // Linear interpolation of vertex values; slopes must come out integral.
    static PLFunction interpolate(GraphPtr g, const std::vector<Rat>& vertex_values);

    const GraphPtr& graph_ptr() const { return graph_; }
    const MetricGraph& graph() const { return *graph_; }
    const PL1D& on_edge(int e) const { return edges_[e]; }

    Rat value(const GraphPoint& p) const;
    Rat vertex_value(int v) const;

    // Outgoing slope at p in the direction of (edge e, end 0/1): end 0 means
    // into the edge from its tail side.  For interior points, dir +1 means
    // toward the head.
    Rat out_slope_vertex(int v, int e, int end) const;

    // Sum of outgoing slopes at p.
    Int order_at(const GraphPoint& p) const;
    // Principal divisor: order_at over all corners.
    Divisor divisor() const;

    // Vertices plus interior breakpoints of every edge.
    std::vector<GraphPoint> corner_points() const;

    Rat min_over_graph() const;
    Rat max_over_graph() const;
    ClosedSubgraph level_set(const Rat& value) const;

    PLFunction operator+(const PLFunction& o) const;
    PLFunction operator-(const PLFunction& o) const;
    PLFunction operator-() const;
    PLFunction add_const(const Rat& c) const;
    PLFunction scale(const Int& n) const;

    static PLFunction pointwise_min(const PLFunction& f, const PLFunction& g);
    static PLFunction pointwise_max(const PLFunction& f, const PLFunction& g);
    PLFunction min_with_const(const Rat& c) const;
    PLFunction max_with_const(const Rat& c) const;

    bool is_constant() const;
    // Subtracts the value at the vertex with the lexicographically least id.
    PLFunction normalized() const;
    friend bool operator==(const PLFunction& a, const PLFunction& b) {
        return a.edges_ == b.edges_;
    }
    static bool equal_mod_const(const PLFunction& a, const PLFunction& b);

private:
    GraphPtr graph_;
    std::vector<PL1D> edges_;
    std::vector<Rat> vertex_values_;
};

// max over i of (c_i + f_i): the tropical span combination.
PLFunction tropical_combine(const std::vector<std::pair<Rat, PLFunction>>& terms);

// Transports functions across a refinement of the model.
PLFunction lift_function(const Refinement& r, GraphPtr fine, const PLFunction& base_f);
PLFunction push_function(const Refinement& r, GraphPtr base, const PLFunction& fine_f);

}  // namespace trop
