#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "trop/errors.hpp"
#include "trop/rational.hpp"

namespace trop {

// A metric graph together with a fixed model: vertices and edges with exact
// rational lengths.  Parallel edges and loops are allowed.  Connectedness is
// enforced at construction.
class MetricGraph {
public:
    struct Edge {
        std::string id;
        int u = -1;  // tail (start of the edge's fixed orientation)
        int v = -1;  // head
        Rat length;
    };

    MetricGraph() = default;
    MetricGraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges);

    int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }

    int vertex_index(const std::string& id) const;
    std::optional<int> find_vertex(const std::string& id) const;
    std::optional<int> find_edge(const std::string& id) const;

    // Valence; loops count twice.
    int degree(int v) const { return degree_[v]; }
    // Incident (edge, end) pairs: end 0 = tail side, 1 = head side.  A loop
    // contributes both ends.
    const std::vector<std::pair<int, int>>& incidences(int v) const { return inc_[v]; }

    int genus() const { return num_edges() - num_vertices() + 1; }
    Rat total_length() const;

    bool has_integral_lengths() const;
    // Least positive integer c such that c * length(e) is an integer for all e.
    Int integral_scale() const;
    // Multiplies every edge length by c.
    MetricGraph scaled(const Rat& c) const;

private:
    std::vector<std::string> vertex_ids_;
    std::vector<Edge> edges_;
    std::map<std::string, int> vertex_lookup_;
    std::vector<int> degree_;
    std::vector<std::vector<std::pair<int, int>>> inc_;
};

// Exact location on a metric graph.  Canonical form: a point at offset 0 or
// length of an edge is stored in vertex form, so equality is structural.
class GraphPoint {
public:
    static GraphPoint vertex(int v);
    // Canonicalizes endpoints into vertex form.
    static GraphPoint on_edge(const MetricGraph& g, int e, const Rat& offset);

    bool at_vertex() const { return vertex_ >= 0; }
    int vertex_index() const { return vertex_; }
    int edge_index() const { return edge_; }
    const Rat& offset() const { return offset_; }

    int valence(const MetricGraph& g) const;
    bool smooth(const MetricGraph& g) const { return valence(g) == 2; }

    friend bool operator==(const GraphPoint&, const GraphPoint&) = default;
    friend auto operator<=>(const GraphPoint& a, const GraphPoint& b) {
        return std::tie(a.vertex_, a.edge_, a.offset_) <=> std::tie(b.vertex_, b.edge_, b.offset_);
    }

    std::string describe(const MetricGraph& g) const;

private:
    int vertex_ = -1;
    int edge_ = -1;
    Rat offset_;
};

// A topologically closed subgraph: per-edge unions of closed subintervals
// (sorted, disjoint, maximal; degenerate intervals are isolated points) plus
// a set of included vertices.  Normalization glues endpoint intervals to
// their vertices.
class ClosedSubgraph {
public:
    struct Interval {
        Rat a, b;  // a <= b; [a, a] is an isolated point
        friend bool operator==(const Interval&, const Interval&) = default;
    };

    ClosedSubgraph() = default;
    ClosedSubgraph(const MetricGraph& g, std::set<int> vertices,
                   std::map<int, std::vector<Interval>> edge_intervals);

    static ClosedSubgraph whole_graph(const MetricGraph& g);
    static ClosedSubgraph single_point(const MetricGraph& g, const GraphPoint& p);

    const std::set<int>& vertices() const { return vertices_; }
    const std::map<int, std::vector<Interval>>& edge_intervals() const { return edge_intervals_; }

    bool empty() const { return vertices_.empty() && edge_intervals_.empty(); }
    bool contains(const MetricGraph& g, const GraphPoint& p) const;
    bool is_whole_graph(const MetricGraph& g) const;
    Rat measure() const;

    // Points of the subgraph that touch its complement.
    std::vector<GraphPoint> boundary(const MetricGraph& g) const;
    // Number of edge directions leaving the subgraph at p (p must lie in it).
    int outgoing_directions(const MetricGraph& g, const GraphPoint& p) const;

    friend bool operator==(const ClosedSubgraph&, const ClosedSubgraph&) = default;
    friend auto operator<=>(const ClosedSubgraph& a, const ClosedSubgraph& b) {
        if (auto c = a.vertices_ <=> b.vertices_; c != 0) return c;
        return a.cmp_intervals(b);
    }

private:
    std::strong_ordering cmp_intervals(const ClosedSubgraph& other) const;
    std::set<int> vertices_;
    std::map<int, std::vector<Interval>> edge_intervals_;  // edge -> intervals
};

// --- core operations -------------------------------------------------------

struct GraphSpec {
    std::vector<std::string> vertices;
    struct EdgeSpec {
        std::string id;
        std::string end_a, end_b;
        Rat length;
    };
    std::vector<EdgeSpec> edges;
};

MetricGraph build_graph(const GraphSpec& spec);

struct CoarsestModel {
    MetricGraph graph;
    // Set when the curve is metrically a circle, which has no unique coarsest
    // model; a designated base vertex (least id) is used instead.
    bool circle_nonunique = false;
    int base_vertex = -1;
};

CoarsestModel coarsest_model(const MetricGraph& g);

// A finer model of the same metric graph, with bidirectional point maps.
struct Refinement {
    MetricGraph fine;
    std::vector<std::vector<Rat>> cuts;      // per base edge: interior cut offsets, ascending
    std::vector<std::vector<int>> segments;  // per base edge: fine edge indices, tail to head
    std::vector<int> vertex_map;             // base vertex -> fine vertex
    std::vector<std::pair<int, Rat>> new_vertex_pos;  // fine vertex >= n -> (base edge, offset)
    std::vector<std::pair<int, Rat>> edge_origin;     // fine edge -> (base edge, tail offset)

    GraphPoint to_fine(const MetricGraph& base, const GraphPoint& p) const;
    GraphPoint to_base(const MetricGraph& base, const GraphPoint& p) const;
};

// Cuts each edge at the given interior offsets.  New vertices are named
// "<edge>@<offset>", segment edges "<edge>:<i>" (orientation preserved).
Refinement refine(const MetricGraph& g, const std::vector<std::vector<Rat>>& cuts_per_edge);

// Refinement placing every point of `points` at a vertex.
Refinement refine_at(const MetricGraph& g, const std::vector<GraphPoint>& points);

// Refinement cutting every edge into pieces of length 1/k.  Requires
// integral edge lengths.
Refinement unit_refinement(const MetricGraph& g, int k);

// Model whose edges all have length 1/k; original vertices keep their ids.
MetricGraph subdivide(const MetricGraph& g, int k);

// Connected components of the complement of A, returned as closures.
std::vector<ClosedSubgraph> components_minus(const MetricGraph& g,
                                             const std::vector<GraphPoint>& a);

bool is_smooth_cut_set(const MetricGraph& g, const std::vector<GraphPoint>& a);

}  // namespace trop
