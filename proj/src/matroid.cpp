#include "trop/matroid.hpp"

#include <algorithm>

namespace trop {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void join(int a, int b) { p[find(a)] = find(b); }
    int components() {
        int c = 0;
        for (size_t i = 0; i < p.size(); ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) c++;
        return c;
    }
};

// Components of the spanning subgraph keeping the given edges.
int components_with_edges(const MetricGraph& g, const std::set<int>& edges) {
    UnionFind uf(g.num_vertices());
    for (int e : edges) uf.join(g.edge(e).u, g.edge(e).v);
    return uf.components();
}

// Every edge of `b` lies on a cycle of the subgraph spanned by `b`.
bool bridgeless(const MetricGraph& g, const std::set<int>& b) {
    int base = components_with_edges(g, b);
    for (int e : b) {
        if (g.edge(e).u == g.edge(e).v) continue;  // graph loop, its own cycle
        std::set<int> without = b;
        without.erase(e);
        if (components_with_edges(g, without) != base) return false;
    }
    return true;
}

}  // namespace

int CographicMatroid::rank(const std::set<int>& a) const {
    std::set<int> rest;
    for (int e = 0; e < graph->num_edges(); ++e)
        if (!a.count(e)) rest.insert(e);
    return static_cast<int>(a.size()) - components_with_edges(*graph, rest) + 1;
}

int CographicMatroid::rank_all() const { return graph->genus(); }

std::set<int> CographicMatroid::closure(const std::set<int>& a) const {
    int r = rank(a);
    std::set<int> cl = a;
    for (int e = 0; e < graph->num_edges(); ++e) {
        if (a.count(e)) continue;
        std::set<int> bigger = a;
        bigger.insert(e);
        if (rank(bigger) == r) cl.insert(e);
    }
    return cl;
}

bool CographicMatroid::is_flat(const std::set<int>& a) const {
    std::set<int> rest;
    for (int e = 0; e < graph->num_edges(); ++e)
        if (!a.count(e)) rest.insert(e);
    return bridgeless(*graph, rest);
}

CographicMatroid cographic_matroid(GraphPtr g) {
    CographicMatroid m;
    m.graph = std::move(g);
    const MetricGraph& gr = *m.graph;
    int n = gr.num_vertices();
    if (n > 20) throw TooLarge("too many vertices for bond enumeration");
    // Bonds: edge sets between two connected halves of the vertex set.
    for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
        std::set<int> side;  // vertices with vertex 0 always on the other side
        for (int v = 1; v < n; ++v)
            if (mask & (1 << (v - 1))) side.insert(v);
        std::set<int> in_side, in_rest, cut;
        for (int e = 0; e < gr.num_edges(); ++e) {
            bool su = side.count(gr.edge(e).u), sv = side.count(gr.edge(e).v);
            if (su && sv)
                in_side.insert(e);
            else if (!su && !sv)
                in_rest.insert(e);
            else
                cut.insert(e);
        }
        // Both halves must induce connected subgraphs.
        UnionFind a(n), b(n);
        for (int e : in_side) a.join(gr.edge(e).u, gr.edge(e).v);
        for (int e : in_rest) b.join(gr.edge(e).u, gr.edge(e).v);
        auto connected = [&](UnionFind& uf, const std::set<int>& verts) {
            if (verts.empty()) return true;
            int root = uf.find(*verts.begin());
            for (int v : verts)
                if (uf.find(v) != root) return false;
            return true;
        };
        std::set<int> rest;
        for (int v = 0; v < n; ++v)
            if (!side.count(v)) rest.insert(v);
        if (!connected(a, side) || !connected(b, rest)) continue;
        if (!cut.empty()) m.circuits.push_back(std::move(cut));
    }
    std::sort(m.circuits.begin(), m.circuits.end());
    m.circuits.erase(std::unique(m.circuits.begin(), m.circuits.end()), m.circuits.end());
    return m;
}

FlatLattice lattice_of_flats(const CographicMatroid& m) {
    const MetricGraph& g = *m.graph;
    int ne = g.num_edges();
    if (ne > 22) throw TooLarge("too many edges for flat enumeration");
    FlatLattice lat;
    for (int mask = 0; mask < (1 << ne); ++mask) {
        std::set<int> b;
        for (int e = 0; e < ne; ++e)
            if (mask & (1 << e)) b.insert(e);
        if (!bridgeless(g, b)) continue;
        std::set<int> flat;
        for (int e = 0; e < ne; ++e)
            if (!b.count(e)) flat.insert(e);
        lat.flats.push_back(std::move(flat));
    }
    std::sort(lat.flats.begin(), lat.flats.end(),
              [](const std::set<int>& x, const std::set<int>& y) {
                  if (x.size() != y.size()) return x.size() < y.size();
                  return x < y;
              });
    lat.bottom = 0;
    lat.top = static_cast<int>(lat.flats.size()) - 1;
    int k = static_cast<int>(lat.flats.size());
    lat.less.assign(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && std::includes(lat.flats[j].begin(), lat.flats[j].end(),
                                        lat.flats[i].begin(), lat.flats[i].end()))
                lat.less[i][j] = true;
    return lat;
}

namespace {

std::vector<std::set<int>> proper_flats(const FlatLattice& lat) {
    std::vector<std::set<int>> out;
    for (int i = 0; i < static_cast<int>(lat.flats.size()); ++i)
        if (i != lat.bottom && i != lat.top) out.push_back(lat.flats[i]);
    return out;
}

}  // namespace

SimplicialComplex bergman_complex(const CographicMatroid& m) {
    FlatLattice lat = lattice_of_flats(m);
    std::vector<std::set<int>> pf = proper_flats(lat);
    int k = static_cast<int>(pf.size());
    std::vector<std::vector<bool>> less(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && std::includes(pf[j].begin(), pf[j].end(), pf[i].begin(), pf[i].end()))
                less[i][j] = true;
    SimplicialComplex c = order_complex(less);
    c.num_vertices = k;
    return c;
}

BergmanEmbedding link_contains_bergman(GraphPtr g, const SimplicialComplex& link,
                                       const SimplicialComplex& berg) {
    BergmanEmbedding out;
    CographicMatroid m = cographic_matroid(g);
    std::vector<std::set<int>> pf = proper_flats(lattice_of_flats(m));
    FiringPoset poset = firing_poset(g, canonical_divisor(*g));
    const MetricGraph& gr = *poset.model;

    out.vertex_map.assign(pf.size(), -1);
    for (size_t i = 0; i < pf.size(); ++i) {
        FiringPosetElement el;
        for (int e = 0; e < gr.num_edges(); ++e)
            if (!pf[i].count(e)) el.edges.insert(e);
        for (int e : el.edges) {
            el.vertices.insert(gr.edge(e).u);
            el.vertices.insert(gr.edge(e).v);
        }
        for (int v : el.vertices) {
            const auto& inc = gr.incidences(v);
            for (int s = 0; s < static_cast<int>(inc.size()); ++s)
                if (!el.edges.count(inc[s].first)) el.weights[{v, s}] = 1;
        }
        for (size_t j = 0; j < poset.elements.size(); ++j)
            if (poset.elements[j] == el) out.vertex_map[i] = static_cast<int>(j);
        if (out.vertex_map[i] < 0) {
            out.failing_simplex = std::vector<int>{static_cast<int>(i)};
            return out;
        }
    }

    for (const auto& s : berg.simplices) {
        std::vector<int> mapped;
        for (int v : s) mapped.push_back(out.vertex_map[v]);
        std::sort(mapped.begin(), mapped.end());
        if (!link.simplices.count(mapped)) {
            out.failing_simplex = s;
            return out;
        }
    }
    out.contained = true;

    std::set<int> image(out.vertex_map.begin(), out.vertex_map.end());
    for (int j = 0; j < link.num_vertices; ++j)
        if (!image.count(j)) out.extra_link_vertices.push_back(j);
    out.equal = out.extra_link_vertices.empty() && link.simplices.size() == berg.simplices.size();
    return out;
}

}  // namespace trop
