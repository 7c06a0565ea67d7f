#include "trop/graph.hpp"

#include <algorithm>
#include <numeric>

namespace trop {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

// --- MetricGraph ------------------------------------------------------------

MetricGraph::MetricGraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges)
    : vertex_ids_(std::move(vertex_ids)), edges_(std::move(edges)) {
    for (int i = 0; i < num_vertices(); ++i) {
        if (!vertex_lookup_.emplace(vertex_ids_[i], i).second)
            throw Error("duplicate vertex id: " + vertex_ids_[i]);
    }
    std::set<std::string> edge_ids;
    degree_.assign(num_vertices(), 0);
    inc_.assign(num_vertices(), {});
    for (int e = 0; e < num_edges(); ++e) {
        const Edge& ed = edges_[e];
        if (!edge_ids.insert(ed.id).second) throw Error("duplicate edge id: " + ed.id);
        if (ed.u < 0 || ed.u >= num_vertices() || ed.v < 0 || ed.v >= num_vertices())
            throw Error("edge endpoint out of range: " + ed.id);
        if (ed.length <= 0) throw NonpositiveLength("edge " + ed.id + " has nonpositive length");
        degree_[ed.u]++;
        degree_[ed.v]++;
        inc_[ed.u].push_back({e, 0});
        inc_[ed.v].push_back({e, 1});
    }
    if (num_vertices() == 0) throw Error("graph has no vertices");
    UnionFind uf(num_vertices());
    for (const Edge& ed : edges_) uf.unite(ed.u, ed.v);
    for (int v = 0; v < num_vertices(); ++v)
        if (uf.find(v) != uf.find(0)) throw DisconnectedGraph();
}

int MetricGraph::vertex_index(const std::string& id) const {
    auto it = vertex_lookup_.find(id);
    if (it == vertex_lookup_.end()) throw Error("unknown vertex id: " + id);
    return it->second;
}

std::optional<int> MetricGraph::find_vertex(const std::string& id) const {
    auto it = vertex_lookup_.find(id);
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> MetricGraph::find_edge(const std::string& id) const {
    for (int e = 0; e < num_edges(); ++e)
        if (edges_[e].id == id) return e;
    return std::nullopt;
}

Rat MetricGraph::total_length() const {
    Rat t = 0;
    for (const Edge& e : edges_) t += e.length;
    return t;
}

bool MetricGraph::has_integral_lengths() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return is_integer(e.length); });
}

Int MetricGraph::integral_scale() const {
    Int c = 1;
    for (const Edge& e : edges_) c = lcm(c, den(e.length));
    return c;
}

MetricGraph MetricGraph::scaled(const Rat& c) const {
    if (c <= 0) throw NonpositiveLength("scale factor must be positive");
    std::vector<Edge> es = edges_;
    for (Edge& e : es) e.length *= c;
    return MetricGraph(vertex_ids_, std::move(es));
}

// --- GraphPoint -------------------------------------------------------------

GraphPoint GraphPoint::vertex(int v) {
    GraphPoint p;
    p.vertex_ = v;
    return p;
}

GraphPoint GraphPoint::on_edge(const MetricGraph& g, int e, const Rat& offset) {
    const auto& ed = g.edge(e);
    if (offset < 0 || offset > ed.length) throw Error("point offset outside edge " + ed.id);
    if (offset == 0) return vertex(ed.u);
    if (offset == ed.length) return vertex(ed.v);
    GraphPoint p;
    p.edge_ = e;
    p.offset_ = offset;
    return p;
}

int GraphPoint::valence(const MetricGraph& g) const {
    return at_vertex() ? g.degree(vertex_) : 2;
}

std::string GraphPoint::describe(const MetricGraph& g) const {
    if (at_vertex()) return g.vertex_id(vertex_);
    return g.edge(edge_).id + "@" + format_rational(offset_);
}

// --- ClosedSubgraph ---------------------------------------------------------

ClosedSubgraph::ClosedSubgraph(const MetricGraph& g, std::set<int> vertices,
                               std::map<int, std::vector<Interval>> edge_intervals)
    : vertices_(std::move(vertices)) {
    for (auto& [e, ivs] : edge_intervals) {
        const auto& ed = g.edge(e);
        std::vector<Interval> sorted = ivs;
        std::sort(sorted.begin(), sorted.end(),
                  [](const Interval& x, const Interval& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
        std::vector<Interval> merged;
        for (const Interval& iv : sorted) {
            if (iv.a < 0 || iv.b > ed.length || iv.a > iv.b)
                throw Error("invalid interval on edge " + ed.id);
            if (!merged.empty() && iv.a <= merged.back().b)
                merged.back().b = std::max(merged.back().b, iv.b);
            else
                merged.push_back(iv);
        }
        // endpoint pieces imply the endpoint vertices; degenerate endpoint
        // intervals collapse into the vertex set
        std::vector<Interval> kept;
        for (const Interval& iv : merged) {
            if (iv.a == 0) vertices_.insert(ed.u);
            if (iv.b == ed.length) vertices_.insert(ed.v);
            bool degenerate_endpoint =
                (iv.a == iv.b) && (iv.a == 0 || iv.b == ed.length);
            if (!degenerate_endpoint) kept.push_back(iv);
        }
        if (!kept.empty()) edge_intervals_[e] = std::move(kept);
    }
}

ClosedSubgraph ClosedSubgraph::whole_graph(const MetricGraph& g) {
    std::set<int> vs;
    for (int v = 0; v < g.num_vertices(); ++v) vs.insert(v);
    std::map<int, std::vector<Interval>> ivs;
    for (int e = 0; e < g.num_edges(); ++e) ivs[e] = {{Rat(0), g.edge(e).length}};
    return ClosedSubgraph(g, std::move(vs), std::move(ivs));
}

ClosedSubgraph ClosedSubgraph::single_point(const MetricGraph& g, const GraphPoint& p) {
    if (p.at_vertex()) return ClosedSubgraph(g, {p.vertex_index()}, {});
    return ClosedSubgraph(g, {}, {{p.edge_index(), {{p.offset(), p.offset()}}}});
}

bool ClosedSubgraph::contains(const MetricGraph&, const GraphPoint& p) const {
    if (p.at_vertex()) return vertices_.count(p.vertex_index()) > 0;
    auto it = edge_intervals_.find(p.edge_index());
    if (it == edge_intervals_.end()) return false;
    for (const Interval& iv : it->second)
        if (iv.a <= p.offset() && p.offset() <= iv.b) return true;
    return false;
}

bool ClosedSubgraph::is_whole_graph(const MetricGraph& g) const {
    if (static_cast<int>(vertices_.size()) != g.num_vertices()) return false;
    for (int e = 0; e < g.num_edges(); ++e) {
        auto it = edge_intervals_.find(e);
        if (it == edge_intervals_.end() || it->second.size() != 1) return false;
        if (it->second[0].a != 0 || it->second[0].b != g.edge(e).length) return false;
    }
    return true;
}

Rat ClosedSubgraph::measure() const {
    Rat t = 0;
    for (const auto& [e, ivs] : edge_intervals_)
        for (const Interval& iv : ivs) t += iv.b - iv.a;
    return t;
}

int ClosedSubgraph::outgoing_directions(const MetricGraph& g, const GraphPoint& p) const {
    if (!contains(g, p)) throw Error("point not in subgraph");
    auto covered_end = [&](int e, int end) {
        auto it = edge_intervals_.find(e);
        if (it == edge_intervals_.end()) return false;
        const auto& ivs = it->second;
        if (end == 0) return ivs.front().a == 0;
        return ivs.back().b == g.edge(e).length;
    };
    if (p.at_vertex()) {
        int out = 0;
        for (auto [e, end] : g.incidences(p.vertex_index()))
            if (!covered_end(e, end)) ++out;
        return out;
    }
    const auto& ivs = edge_intervals_.at(p.edge_index());
    for (const Interval& iv : ivs) {
        if (iv.a <= p.offset() && p.offset() <= iv.b) {
            int out = 0;
            if (p.offset() == iv.a) ++out;
            if (p.offset() == iv.b) ++out;
            return out;
        }
    }
    throw Error("point not in subgraph");
}

std::vector<GraphPoint> ClosedSubgraph::boundary(const MetricGraph& g) const {
    std::vector<GraphPoint> out;
    for (int v : vertices_) {
        GraphPoint p = GraphPoint::vertex(v);
        if (outgoing_directions(g, p) > 0) out.push_back(p);
    }
    for (const auto& [e, ivs] : edge_intervals_) {
        for (const Interval& iv : ivs) {
            for (const Rat& o : {iv.a, iv.b}) {
                GraphPoint p = GraphPoint::on_edge(g, e, o);
                if (!p.at_vertex() && outgoing_directions(g, p) > 0) out.push_back(p);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::strong_ordering ClosedSubgraph::cmp_intervals(const ClosedSubgraph& other) const {
    auto ia = edge_intervals_.begin(), ib = other.edge_intervals_.begin();
    for (; ia != edge_intervals_.end() && ib != other.edge_intervals_.end(); ++ia, ++ib) {
        if (auto c = ia->first <=> ib->first; c != 0) return c;
        const auto &va = ia->second, &vb = ib->second;
        auto cmp_rat = [](const Rat& x, const Rat& y) {
            return x < y   ? std::strong_ordering::less
                   : y < x ? std::strong_ordering::greater
                           : std::strong_ordering::equal;
        };
        for (size_t i = 0; i < std::min(va.size(), vb.size()); ++i) {
            if (auto c = cmp_rat(va[i].a, vb[i].a); c != 0) return c;
            if (auto c = cmp_rat(va[i].b, vb[i].b); c != 0) return c;
        }
        if (auto c = va.size() <=> vb.size(); c != 0) return c;
    }
    if (ia != edge_intervals_.end()) return std::strong_ordering::greater;
    if (ib != other.edge_intervals_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

// --- operations -------------------------------------------------------------

MetricGraph build_graph(const GraphSpec& spec) {
    std::vector<std::string> vids = spec.vertices;
    std::sort(vids.begin(), vids.end());
    std::map<std::string, int> idx;
    for (int i = 0; i < static_cast<int>(vids.size()); ++i) idx[vids[i]] = i;
    std::vector<MetricGraph::Edge> edges;
    for (const auto& es : spec.edges) {
        auto ua = idx.find(es.end_a), ub = idx.find(es.end_b);
        if (ua == idx.end() || ub == idx.end())
            throw Error("edge " + es.id + " references unknown vertex");
        edges.push_back({es.id, ua->second, ub->second, es.length});
    }
    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    return MetricGraph(std::move(vids), std::move(edges));
}

CoarsestModel coarsest_model(const MetricGraph& g) {
    CoarsestModel out;
    std::vector<int> keep;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) != 2) keep.push_back(v);
    if (keep.empty()) {
        // metrically a circle; no coarsest model exists
        int base = 0;
        for (int v = 1; v < g.num_vertices(); ++v)
            if (g.vertex_id(v) < g.vertex_id(base)) base = v;
        keep.push_back(base);
        out.circle_nonunique = true;
    }
    std::sort(keep.begin(), keep.end(),
              [&](int a, int b) { return g.vertex_id(a) < g.vertex_id(b); });
    std::map<int, int> new_index;
    std::vector<std::string> vids;
    for (int v : keep) {
        new_index[v] = static_cast<int>(vids.size());
        vids.push_back(g.vertex_id(v));
    }
    out.base_vertex = out.circle_nonunique ? 0 : -1;

    // walk maximal chains through 2-valent vertices
    std::vector<bool> used(g.num_edges(), false);
    std::vector<MetricGraph::Edge> edges;
    for (int v : keep) {
        auto inc = g.incidences(v);
        std::sort(inc.begin(), inc.end(), [&](auto a, auto b) {
            return std::tie(g.edge(a.first).id, a.second) < std::tie(g.edge(b.first).id, b.second);
        });
        for (auto [e0, end0] : inc) {
            if (used[e0]) continue;
            int e = e0, from_end = end0;
            Rat len = 0;
            std::string id;
            used[e0] = true;
            int cur;
            for (;;) {
                const auto& ed = g.edge(e);
                len += ed.length;
                id += (id.empty() ? "" : "+") + ed.id;
                cur = (from_end == 0) ? ed.v : ed.u;
                if (new_index.count(cur)) break;
                // 2-valent: continue along the unique other incidence
                int ne = -1, nend = -1;
                for (auto [f, fe] : g.incidences(cur)) {
                    if (f == e && fe == ((from_end == 0) ? 1 : 0)) continue;
                    ne = f;
                    nend = fe;
                }
                e = ne;
                from_end = nend;
                used[e] = true;
            }
            edges.push_back({id, new_index.at(v), new_index.at(cur), len});
        }
    }
    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    out.graph = MetricGraph(std::move(vids), std::move(edges));
    return out;
}

Refinement refine(const MetricGraph& g, const std::vector<std::vector<Rat>>& cuts_per_edge) {
    Refinement r;
    r.cuts = cuts_per_edge;
    r.cuts.resize(g.num_edges());
    std::vector<std::string> vids = g.vertex_ids();
    std::vector<MetricGraph::Edge> edges;
    r.segments.resize(g.num_edges());
    r.vertex_map.resize(g.num_vertices());
    std::iota(r.vertex_map.begin(), r.vertex_map.end(), 0);
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        auto& cuts = r.cuts[e];
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        for (const Rat& c : cuts)
            if (c <= 0 || c >= ed.length) throw Error("cut offset outside edge " + ed.id);
        if (cuts.empty()) {
            r.segments[e].push_back(static_cast<int>(edges.size()));
            r.edge_origin.push_back({e, Rat(0)});
            edges.push_back(ed);
            continue;
        }
        int prev_v = ed.u;
        Rat prev_o = 0;
        for (size_t i = 0; i <= cuts.size(); ++i) {
            int next_v;
            Rat next_o = (i < cuts.size()) ? cuts[i] : ed.length;
            if (i < cuts.size()) {
                next_v = static_cast<int>(vids.size());
                vids.push_back(ed.id + "@" + format_rational(cuts[i]));
                r.new_vertex_pos.push_back({e, cuts[i]});
            } else {
                next_v = ed.v;
            }
            r.segments[e].push_back(static_cast<int>(edges.size()));
            r.edge_origin.push_back({e, prev_o});
            edges.push_back({ed.id + ":" + std::to_string(i), prev_v, next_v, next_o - prev_o});
            prev_v = next_v;
            prev_o = next_o;
        }
    }
    r.fine = MetricGraph(std::move(vids), std::move(edges));
    return r;
}

Refinement refine_at(const MetricGraph& g, const std::vector<GraphPoint>& points) {
    std::vector<std::vector<Rat>> cuts(g.num_edges());
    for (const GraphPoint& p : points)
        if (!p.at_vertex()) cuts[p.edge_index()].push_back(p.offset());
    return refine(g, cuts);
}

Refinement unit_refinement(const MetricGraph& g, int k) {
    if (k <= 0) throw Error("subdivision level must be positive");
    if (!g.has_integral_lengths()) throw NonIntegralLengths();
    std::vector<std::vector<Rat>> cuts(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        Int pieces = num(g.edge(e).length) * k;
        for (Int j = 1; j < pieces; ++j) cuts[e].push_back(Rat(j, Int(k)));
    }
    return refine(g, cuts);
}

MetricGraph subdivide(const MetricGraph& g, int k) { return unit_refinement(g, k).fine; }

GraphPoint Refinement::to_fine(const MetricGraph& base, const GraphPoint& p) const {
    if (p.at_vertex()) return GraphPoint::vertex(vertex_map[p.vertex_index()]);
    int e = p.edge_index();
    const auto& cs = cuts[e];
    size_t seg = 0;
    Rat prev = 0;
    while (seg < cs.size() && p.offset() >= cs[seg]) {
        if (p.offset() == cs[seg]) {
            // lands on a cut vertex
            int fe = segments[e][seg];
            return GraphPoint::vertex(fine.edge(fe).v);
        }
        prev = cs[seg];
        ++seg;
    }
    (void)base;
    return GraphPoint::on_edge(fine, segments[e][seg], p.offset() - prev);
}

GraphPoint Refinement::to_base(const MetricGraph& base, const GraphPoint& p) const {
    if (p.at_vertex()) {
        int v = p.vertex_index();
        if (v < base.num_vertices()) return GraphPoint::vertex(v);
        const auto& [e, off] = new_vertex_pos[v - base.num_vertices()];
        return GraphPoint::on_edge(base, e, off);
    }
    const auto& [e, tail_off] = edge_origin[p.edge_index()];
    return GraphPoint::on_edge(base, e, tail_off + p.offset());
}

std::vector<ClosedSubgraph> components_minus(const MetricGraph& g,
                                             const std::vector<GraphPoint>& a) {
    std::set<int> cut_vertices;
    std::vector<std::vector<Rat>> cuts(g.num_edges());
    for (const GraphPoint& p : a) {
        if (p.at_vertex())
            cut_vertices.insert(p.vertex_index());
        else
            cuts[p.edge_index()].push_back(p.offset());
    }
    for (auto& c : cuts) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
    }

    // nodes: one per surviving vertex, one per open edge segment
    int n = g.num_vertices();
    std::vector<std::vector<int>> seg_node(g.num_edges());
    int total = n;
    for (int e = 0; e < g.num_edges(); ++e) {
        int pieces = static_cast<int>(cuts[e].size()) + 1;
        for (int i = 0; i < pieces; ++i) seg_node[e].push_back(total++);
    }
    UnionFind uf(total);
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        if (!cut_vertices.count(ed.u)) uf.unite(seg_node[e].front(), ed.u);
        if (!cut_vertices.count(ed.v)) uf.unite(seg_node[e].back(), ed.v);
    }

    std::map<int, std::pair<std::set<int>, std::map<int, std::vector<ClosedSubgraph::Interval>>>>
        comps;
    for (int v = 0; v < n; ++v)
        if (!cut_vertices.count(v)) comps[uf.find(v)].first.insert(v);
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        for (size_t i = 0; i < seg_node[e].size(); ++i) {
            Rat lo = (i == 0) ? Rat(0) : cuts[e][i - 1];
            Rat hi = (i == seg_node[e].size() - 1) ? ed.length : cuts[e][i];
            comps[uf.find(seg_node[e][i])].second[e].push_back({lo, hi});
        }
    }
    std::vector<ClosedSubgraph> out;
    for (auto& [root, data] : comps)
        out.push_back(ClosedSubgraph(g, std::move(data.first), std::move(data.second)));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_smooth_cut_set(const MetricGraph& g, const std::vector<GraphPoint>& a) {
    if (a.empty()) return false;
    for (const GraphPoint& p : a)
        if (!p.smooth(g)) return false;
    return components_minus(g, a).size() >= 2;
}

}  // namespace trop
