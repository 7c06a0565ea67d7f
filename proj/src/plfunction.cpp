#include "trop/plfunction.hpp"

#include <algorithm>

namespace trop {

PL1D PL1D::constant(const Rat& len, const Rat& value) {
    PL1D f;
    f.pts = {{Rat(0), value}, {len, value}};
    return f;
}

PL1D PL1D::linear(const Rat& len, const Rat& v0, const Rat& v1) {
    PL1D f;
    f.pts = {{Rat(0), v0}, {len, v1}};
    return f;
}

Rat PL1D::value(const Rat& x) const {
    if (x <= pts.front().first) return pts.front().second;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        if (x <= pts[i + 1].first) {
            const auto& [x0, y0] = pts[i];
            const auto& [x1, y1] = pts[i + 1];
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
        }
    }
    return pts.back().second;
}

Rat PL1D::slope(int i) const {
    return (pts[i + 1].second - pts[i].second) / (pts[i + 1].first - pts[i].first);
}

bool PL1D::integer_slopes() const {
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (!is_integer(slope(static_cast<int>(i)))) return false;
    return true;
}

void PL1D::canonicalize() {
    if (pts.size() < 3) return;
    std::vector<std::pair<Rat, Rat>> out;
    out.push_back(pts.front());
    for (size_t i = 1; i + 1 < pts.size(); ++i) {
        const auto& a = out.back();
        const auto& b = pts[i];
        const auto& c = pts[i + 1];
        // Keep b unless a, b, c are collinear.
        Rat lhs = (b.second - a.second) * (c.first - b.first);
        Rat rhs = (c.second - b.second) * (b.first - a.first);
        if (lhs != rhs) out.push_back(b);
    }
    out.push_back(pts.back());
    pts = std::move(out);
}

PL1D PL1D::slice(const Rat& a, const Rat& b) const {
    PL1D f;
    f.pts.emplace_back(Rat(0), value(a));
    for (const auto& [x, y] : pts)
        if (x > a && x < b) f.pts.emplace_back(x - a, y);
    f.pts.emplace_back(b - a, value(b));
    f.canonicalize();
    return f;
}

PL1D PL1D::negate() const {
    PL1D f = *this;
    for (auto& [x, y] : f.pts) y = -y;
    return f;
}

PL1D PL1D::shift(const Rat& c) const {
    PL1D f = *this;
    for (auto& [x, y] : f.pts) y += c;
    return f;
}

PL1D PL1D::scale(const Int& n) const {
    PL1D f = *this;
    for (auto& [x, y] : f.pts) y *= Rat(n);
    f.canonicalize();
    return f;
}

namespace {

template <typename Op>
PL1D zip(const PL1D& f, const PL1D& g, Op op) {
    // Merge breakpoint offsets, then add crossings of f - g so the result is
    // linear between consecutive offsets.
    std::vector<Rat> xs;
    for (auto& [x, y] : f.pts) xs.push_back(x);
    for (auto& [x, y] : g.pts) xs.push_back(x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Rat> all;
    for (size_t i = 0; i < xs.size(); ++i) {
        all.push_back(xs[i]);
        if (i + 1 == xs.size()) break;
        Rat d0 = f.value(xs[i]) - g.value(xs[i]);
        Rat d1 = f.value(xs[i + 1]) - g.value(xs[i + 1]);
        if ((d0 > 0 && d1 < 0) || (d0 < 0 && d1 > 0)) {
            Rat t = xs[i] + (xs[i + 1] - xs[i]) * d0 / (d0 - d1);
            all.push_back(t);
        }
    }
    PL1D r;
    for (const Rat& x : all) r.pts.emplace_back(x, op(f.value(x), g.value(x)));
    r.canonicalize();
    return r;
}

}  // namespace

PL1D PL1D::add(const PL1D& f, const PL1D& g) {
    return zip(f, g, [](const Rat& a, const Rat& b) { return a + b; });
}

PL1D PL1D::min(const PL1D& f, const PL1D& g) {
    return zip(f, g, [](const Rat& a, const Rat& b) { return a < b ? a : b; });
}

PL1D PL1D::max(const PL1D& f, const PL1D& g) {
    return zip(f, g, [](const Rat& a, const Rat& b) { return a > b ? a : b; });
}

// --- PLFunction ------------------------------------------------------------

PLFunction PLFunction::constant(GraphPtr g, const Rat& value) {
    PLFunction f;
    f.graph_ = std::move(g);
    for (const auto& e : f.graph_->edges()) f.edges_.push_back(PL1D::constant(e.length, value));
    f.vertex_values_.assign(f.graph_->num_vertices(), value);
    return f;
}

PLFunction PLFunction::from_edge_data(GraphPtr g, std::vector<PL1D> per_edge) {
    PLFunction f;
    f.graph_ = std::move(g);
    const MetricGraph& gr = *f.graph_;
    if (static_cast<int>(per_edge.size()) != gr.num_edges())
        throw Error("edge data size mismatch");
    for (int e = 0; e < gr.num_edges(); ++e) {
        auto& p = per_edge[e];
        if (p.pts.size() < 2 || p.pts.front().first != 0 || p.pts.back().first != gr.edge(e).length)
            throw Error("edge function domain mismatch");
        for (size_t i = 0; i + 1 < p.pts.size(); ++i)
            if (p.pts[i].first >= p.pts[i + 1].first) throw Error("breakpoints not increasing");
        if (!p.integer_slopes()) throw Error("non-integer slope");
        p.canonicalize();
    }
    f.vertex_values_.assign(gr.num_vertices(), Rat(0));
    std::vector<bool> seen(gr.num_vertices(), false);
    for (int e = 0; e < gr.num_edges(); ++e) {
        for (int end = 0; end < 2; ++end) {
            int v = end == 0 ? gr.edge(e).u : gr.edge(e).v;
            Rat val = end == 0 ? per_edge[e].pts.front().second : per_edge[e].pts.back().second;
            if (!seen[v]) {
                seen[v] = true;
                f.vertex_values_[v] = val;
            } else if (f.vertex_values_[v] != val) {
                throw Error("discontinuous at vertex " + gr.vertex_id(v));
            }
        }
    }
    f.edges_ = std::move(per_edge);
    return f;
}

PLFunction PLFunction::interpolate(GraphPtr g, const std::vector<Rat>& vertex_values) {
    if (static_cast<int>(vertex_values.size()) != g->num_vertices())
        throw Error("vertex value count mismatch");
    std::vector<PL1D> per_edge;
    for (const auto& e : g->edges())
        per_edge.push_back(PL1D::linear(e.length, vertex_values[e.u], vertex_values[e.v]));
    return from_edge_data(std::move(g), std::move(per_edge));
}

Rat PLFunction::value(const GraphPoint& p) const {
    if (p.at_vertex()) return vertex_values_[p.vertex_index()];
    return edges_[p.edge_index()].value(p.offset());
}

Rat PLFunction::vertex_value(int v) const { return vertex_values_[v]; }

Rat PLFunction::out_slope_vertex(int v, int e, int end) const {
    const PL1D& f = edges_[e];
    (void)v;
    if (end == 0) return f.slope(0);
    return -f.slope(static_cast<int>(f.pts.size()) - 2);
}

Int PLFunction::order_at(const GraphPoint& p) const {
    Rat s = 0;
    if (p.at_vertex()) {
        int v = p.vertex_index();
        for (auto [e, end] : graph_->incidences(v)) s += out_slope_vertex(v, e, end);
    } else {
        const PL1D& f = edges_[p.edge_index()];
        const Rat& x = p.offset();
        for (size_t i = 0; i + 1 < f.pts.size(); ++i) {
            if (f.pts[i].first <= x && x < f.pts[i + 1].first) s += f.slope(static_cast<int>(i));
            if (f.pts[i].first < x && x <= f.pts[i + 1].first) s -= f.slope(static_cast<int>(i));
        }
        // s is now the right slope minus the left slope.
    }
    if (!is_integer(s)) throw Error("non-integer order");
    return num(s);
}

Divisor PLFunction::divisor() const {
    Divisor d;
    for (const GraphPoint& p : corner_points()) {
        Int o = order_at(p);
        if (o != 0) d.add(p, o);
    }
    return d;
}

std::vector<GraphPoint> PLFunction::corner_points() const {
    std::vector<GraphPoint> pts;
    for (int v = 0; v < graph_->num_vertices(); ++v) pts.push_back(GraphPoint::vertex(v));
    for (int e = 0; e < graph_->num_edges(); ++e)
        for (size_t i = 1; i + 1 < edges_[e].pts.size(); ++i)
            pts.push_back(GraphPoint::on_edge(*graph_, e, edges_[e].pts[i].first));
    return pts;
}

Rat PLFunction::min_over_graph() const {
    bool first = true;
    Rat best = 0;
    auto consider = [&](const Rat& v) {
        if (first || v < best) best = v;
        first = false;
    };
    for (const Rat& v : vertex_values_) consider(v);
    for (const PL1D& f : edges_)
        for (auto& [x, y] : f.pts) consider(y);
    if (first) throw Error("empty graph");
    return best;
}

Rat PLFunction::max_over_graph() const {
    return -(operator-()).min_over_graph();
}

ClosedSubgraph PLFunction::level_set(const Rat& value) const {
    std::set<int> vs;
    for (int v = 0; v < graph_->num_vertices(); ++v)
        if (vertex_values_[v] == value) vs.insert(v);
    std::map<int, std::vector<ClosedSubgraph::Interval>> intervals;
    for (int e = 0; e < graph_->num_edges(); ++e) {
        const PL1D& f = edges_[e];
        for (size_t i = 0; i + 1 < f.pts.size(); ++i) {
            const auto& [x0, y0] = f.pts[i];
            const auto& [x1, y1] = f.pts[i + 1];
            if (y0 == value && y1 == value) {
                intervals[e].push_back({x0, x1});
            } else if ((y0 <= value && value <= y1) || (y1 <= value && value <= y0)) {
                Rat t = x0 + (x1 - x0) * (value - y0) / (y1 - y0);
                intervals[e].push_back({t, t});
            }
        }
    }
    return ClosedSubgraph(*graph_, std::move(vs), std::move(intervals));
}

namespace {

template <typename EdgeOp, typename VertOp>
PLFunction combine(const PLFunction& f, const PLFunction& g, EdgeOp eop, VertOp vop) {
    if (f.graph_ptr().get() != g.graph_ptr().get() && !(f.graph().num_edges() == g.graph().num_edges()))
        throw Error("functions on different graphs");
    std::vector<PL1D> per_edge;
    for (int e = 0; e < f.graph().num_edges(); ++e)
        per_edge.push_back(eop(f.on_edge(e), g.on_edge(e)));
    PLFunction r = PLFunction::from_edge_data(f.graph_ptr(), std::move(per_edge));
    if (f.graph().num_edges() == 0) {
        // No edges: carry vertex values through the operation directly.
        std::vector<Rat> vals;
        for (int v = 0; v < f.graph().num_vertices(); ++v)
            vals.push_back(vop(f.vertex_value(v), g.vertex_value(v)));
        return PLFunction::interpolate(f.graph_ptr(), vals);
    }
    return r;
}

}  // namespace

PLFunction PLFunction::operator+(const PLFunction& o) const {
    return combine(*this, o, [](const PL1D& a, const PL1D& b) { return PL1D::add(a, b); },
                   [](const Rat& a, const Rat& b) { return a + b; });
}

PLFunction PLFunction::operator-(const PLFunction& o) const { return *this + (-o); }

PLFunction PLFunction::operator-() const {
    PLFunction r = *this;
    for (auto& f : r.edges_) f = f.negate();
    for (auto& v : r.vertex_values_) v = -v;
    return r;
}

PLFunction PLFunction::add_const(const Rat& c) const {
    PLFunction r = *this;
    for (auto& f : r.edges_) f = f.shift(c);
    for (auto& v : r.vertex_values_) v += c;
    return r;
}

PLFunction PLFunction::scale(const Int& n) const {
    PLFunction r = *this;
    for (auto& f : r.edges_) f = f.scale(n);
    for (auto& v : r.vertex_values_) v *= Rat(n);
    return r;
}

PLFunction PLFunction::pointwise_min(const PLFunction& f, const PLFunction& g) {
    return combine(f, g, [](const PL1D& a, const PL1D& b) { return PL1D::min(a, b); },
                   [](const Rat& a, const Rat& b) { return a < b ? a : b; });
}

PLFunction PLFunction::pointwise_max(const PLFunction& f, const PLFunction& g) {
    return combine(f, g, [](const PL1D& a, const PL1D& b) { return PL1D::max(a, b); },
                   [](const Rat& a, const Rat& b) { return a > b ? a : b; });
}

PLFunction PLFunction::min_with_const(const Rat& c) const {
    return pointwise_min(*this, constant(graph_, c));
}

PLFunction PLFunction::max_with_const(const Rat& c) const {
    return pointwise_max(*this, constant(graph_, c));
}

bool PLFunction::is_constant() const {
    for (const PL1D& f : edges_)
        for (auto& [x, y] : f.pts)
            if (y != edges_.front().pts.front().second) return false;
    for (const Rat& v : vertex_values_)
        if (v != vertex_values_.front()) return false;
    return true;
}

PLFunction PLFunction::normalized() const {
    int best = 0;
    for (int v = 1; v < graph_->num_vertices(); ++v)
        if (graph_->vertex_id(v) < graph_->vertex_id(best)) best = v;
    return add_const(-vertex_values_[best]);
}

bool PLFunction::equal_mod_const(const PLFunction& a, const PLFunction& b) {
    return (a - b).is_constant();
}

PLFunction tropical_combine(const std::vector<std::pair<Rat, PLFunction>>& terms) {
    if (terms.empty()) throw Error("empty tropical combination");
    PLFunction acc = terms.front().second.add_const(terms.front().first);
    for (size_t i = 1; i < terms.size(); ++i)
        acc = PLFunction::pointwise_max(acc, terms[i].second.add_const(terms[i].first));
    return acc;
}

PLFunction lift_function(const Refinement& r, GraphPtr fine, const PLFunction& base_f) {
    const MetricGraph& base = base_f.graph();
    std::vector<PL1D> per_edge(fine->num_edges());
    for (int e = 0; e < base.num_edges(); ++e) {
        std::vector<Rat> bounds;
        bounds.push_back(Rat(0));
        for (const Rat& c : r.cuts[e]) bounds.push_back(c);
        bounds.push_back(base.edge(e).length);
        for (size_t j = 0; j < r.segments[e].size(); ++j)
            per_edge[r.segments[e][j]] = base_f.on_edge(e).slice(bounds[j], bounds[j + 1]);
    }
    return PLFunction::from_edge_data(std::move(fine), std::move(per_edge));
}

PLFunction push_function(const Refinement& r, GraphPtr base, const PLFunction& fine_f) {
    std::vector<PL1D> per_edge;
    for (int e = 0; e < base->num_edges(); ++e) {
        std::vector<Rat> bounds;
        bounds.push_back(Rat(0));
        for (const Rat& c : r.cuts[e]) bounds.push_back(c);
        bounds.push_back(base->edge(e).length);
        PL1D glued;
        for (size_t j = 0; j < r.segments[e].size(); ++j) {
            const PL1D& piece = fine_f.on_edge(r.segments[e][j]);
            for (size_t i = 0; i < piece.pts.size(); ++i) {
                if (j > 0 && i == 0) continue;  // junction point already present
                glued.pts.emplace_back(piece.pts[i].first + bounds[j], piece.pts[i].second);
            }
        }
        glued.canonicalize();
        per_edge.push_back(std::move(glued));
    }
    return PLFunction::from_edge_data(std::move(base), std::move(per_edge));
}

}  // namespace trop
