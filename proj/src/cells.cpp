#include "trop/cells.hpp"

#include <algorithm>
#include <queue>

namespace trop {

namespace {

struct DataKey {
    std::vector<Int> dv;
    std::vector<std::vector<Int>> de;
    std::vector<Int> m0;
    friend bool operator==(const DataKey&, const DataKey&) = default;
    friend bool operator<(const DataKey& a, const DataKey& b) {
        if (a.dv != b.dv) return a.dv < b.dv;
        if (a.de != b.de) return a.de < b.de;
        return a.m0 < b.m0;
    }
};

DataKey key_of(const CellRecord& c) { return {c.dv, c.de, c.m0}; }

int dimension_of(const MetricGraph& g, const std::vector<std::vector<Int>>& de) {
    // Components of the graph on all vertices using only chip-free edges,
    // plus one per extra interior gap on chip-carrying edges, minus one.
    int n = g.num_vertices();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int extra = 0;
    for (int e = 0; e < g.num_edges(); ++e) {
        int r = static_cast<int>(de[e].size());
        if (r == 0)
            parent[find(g.edge(e).u)] = find(g.edge(e).v);
        else
            extra += r - 1;
    }
    int c0 = 0;
    for (int i = 0; i < n; ++i)
        if (find(i) == i) c0++;
    return c0 + extra - 1;
}

// Exact feasibility of the breakpoint-position system for chip totals `dt`
// and starting slopes `m`: vertex potentials F with, per edge, F(head) -
// F(tail) in the closed point {m*len} (no chips) or the open interval
// (m*len, (m+dt)*len).  Strict inequalities are tracked with an epsilon
// count; infeasibility shows up as a negative cycle.  Runs on machine
// integers against lengths pre-scaled to integers.
struct FeasibilityChecker {
    int n = 0;
    std::vector<long long> len;  // scaled integer lengths
    std::vector<std::pair<int, int>> ends;

    explicit FeasibilityChecker(const MetricGraph& g) : n(g.num_vertices()) {
        Rat scale(g.integral_scale());
        for (const auto& ed : g.edges()) {
            Rat s = ed.length * scale;
            Int v = num(s);
            if (v > 1000000000000LL) throw Error("edge lengths too large to enumerate cells");
            len.push_back(static_cast<long long>(v));
            ends.emplace_back(ed.u, ed.v);
        }
    }

    bool feasible(const std::vector<int>& dt, const std::vector<Int>& m) const {
        struct W {
            long long r;
            int k;  // epsilon multiples
            bool operator<(const W& o) const { return r != o.r ? r < o.r : k < o.k; }
            W operator+(const W& o) const { return {r + o.r, k + o.k}; }
        };
        struct Arc {
            int from, to;
            W w;
        };
        std::vector<Arc> arcs;
        for (size_t e = 0; e < len.size(); ++e) {
            long long me = static_cast<long long>(m[e]);
            long long lo = me * len[e];
            long long hi = (me + dt[e]) * len[e];
            auto [u, v] = ends[e];
            if (u == v) {
                if (dt[e] == 0) {
                    if (me != 0) return false;
                } else {
                    if (!(lo < 0 && 0 < hi)) return false;
                }
                continue;
            }
            if (dt[e] == 0) {
                arcs.push_back({u, v, {lo, 0}});
                arcs.push_back({v, u, {-lo, 0}});
            } else {
                arcs.push_back({u, v, {hi, -1}});
                arcs.push_back({v, u, {-lo, -1}});
            }
        }
        std::vector<W> dist(n, W{0, 0});
        for (int pass = 0; pass < n; ++pass) {
            bool changed = false;
            for (const Arc& a : arcs) {
                W cand = dist[a.from] + a.w;
                if (cand < dist[a.to]) {
                    dist[a.to] = cand;
                    changed = true;
                }
            }
            if (!changed) return true;
        }
        for (const Arc& a : arcs)
            if (dist[a.from] + a.w < dist[a.to]) return false;
        return true;
    }
};

struct ModelSetup {
    GraphPtr base;
    GraphPtr model;
    Refinement refinement;
    Divisor d_model;
};

ModelSetup make_model(GraphPtr g, const Divisor& d) {
    ModelSetup s;
    s.base = g;
    std::vector<GraphPoint> interior;
    for (const GraphPoint& p : d.support())
        if (!p.at_vertex()) interior.push_back(p);
    s.refinement = refine_at(*g, interior);
    s.model = interior.empty() ? g : std::make_shared<MetricGraph>(s.refinement.fine);
    s.d_model = divisor_to_fine(*g, s.refinement, d);
    return s;
}

// All ordered compositions of t into parts >= 1 (t = 0 gives the empty one).
std::vector<std::vector<Int>> compositions(int t) {
    std::vector<std::vector<Int>> out;
    if (t == 0) {
        out.push_back({});
        return out;
    }
    for (int first = 1; first <= t; ++first)
        for (auto& rest : compositions(t - first)) {
            std::vector<Int> c;
            c.push_back(first);
            c.insert(c.end(), rest.begin(), rest.end());
            out.push_back(std::move(c));
        }
    return out;
}

struct Enumerator {
    const MetricGraph& g;
    FeasibilityChecker checker;
    std::vector<Int> dcoeff;  // divisor coefficient at each vertex
    int deg;
    Int bound;
    std::vector<CellRecord> out;

    // spanning-tree data over non-loop edges
    std::vector<int> parent_vertex, parent_edge, bfs_order;
    std::vector<bool> in_tree;
    std::vector<int> nontree;  // non-loop, non-tree edges
    std::vector<int> loops;

    explicit Enumerator(const MetricGraph& graph) : g(graph), checker(graph) {}

    void build_tree() {
        int n = g.num_vertices();
        parent_vertex.assign(n, -1);
        parent_edge.assign(n, -1);
        in_tree.assign(g.num_edges(), false);
        std::vector<bool> seen(n, false);
        std::queue<int> q;
        q.push(0);
        seen[0] = true;
        bfs_order = {0};
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [e, end] : g.incidences(v)) {
                int w = end == 0 ? g.edge(e).v : g.edge(e).u;
                if (w == v || seen[w]) continue;
                seen[w] = true;
                parent_vertex[w] = v;
                parent_edge[w] = e;
                in_tree[e] = true;
                bfs_order.push_back(w);
                q.push(w);
            }
        }
        for (int e = 0; e < g.num_edges(); ++e) {
            if (g.edge(e).u == g.edge(e).v)
                loops.push_back(e);
            else if (!in_tree[e])
                nontree.push_back(e);
        }
    }

    // Integer particular solution with zero on non-tree edges.
    std::vector<Int> particular(const std::vector<Int>& b) {
        std::vector<Int> m(g.num_edges(), Int(0));
        std::vector<Int> res = b;
        for (auto it = bfs_order.rbegin(); it != bfs_order.rend(); ++it) {
            int v = *it;
            if (parent_edge[v] < 0) continue;
            int e = parent_edge[v];
            // Sign of m_e in the equation at v: +1 if v is the tail.
            Int sign = g.edge(e).u == v ? 1 : -1;
            m[e] = res[v] * sign;
            // Remove this edge's contribution from the equation at the other
            // endpoint.
            int p = parent_vertex[v];
            Int psign = g.edge(e).u == p ? 1 : -1;
            res[p] -= psign * m[e];
        }
        return m;
    }

    // Circulation around the fundamental cycle of non-tree edge e0.
    std::vector<Int> cycle_vector(int e0) {
        std::vector<Int> z(g.num_edges(), Int(0));
        z[e0] = 1;
        auto walk_up = [&](int x, Int dir) {
            while (parent_edge[x] >= 0) {
                int e = parent_edge[x];
                // Moving from x toward the root; flow along traversal adds
                // +1 when traversal agrees with the edge orientation.
                z[e] += (g.edge(e).u == x ? dir : -dir);
                x = parent_vertex[x];
            }
        };
        walk_up(g.edge(e0).v, 1);
        walk_up(g.edge(e0).u, -1);
        return z;
    }

    void run(const Int& slope_bound) {
        bound = slope_bound;
        build_tree();
        int n = g.num_vertices();
        int ne = g.num_edges();
        std::vector<int> slots(n + ne, 0);
        enumerate_slots(slots, 0, deg);
    }

    void enumerate_slots(std::vector<int>& slots, int i, int remaining) {
        int n = g.num_vertices();
        int total = n + g.num_edges();
        if (i == total - 1) {
            slots[i] = remaining;
            handle_distribution(slots);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            slots[i] = v;
            enumerate_slots(slots, i + 1, remaining - v);
        }
        slots[i] = 0;
    }

    void handle_distribution(const std::vector<int>& slots) {
        int n = g.num_vertices();
        int ne = g.num_edges();
        std::vector<Int> dv(slots.begin(), slots.begin() + n);
        std::vector<int> dt(slots.begin() + n, slots.end());

        std::vector<Int> b(n, Int(0));
        for (int v = 0; v < n; ++v) b[v] = dv[v] - dcoeff[v];
        for (int e = 0; e < ne; ++e) b[g.edge(e).v] += dt[e];

        std::vector<Int> part = particular(b);
        // Basis vectors with their private coordinate for range bounds.
        std::vector<std::vector<Int>> basis;
        std::vector<int> private_edge;
        for (int e : loops) {
            std::vector<Int> z(ne, Int(0));
            z[e] = 1;
            basis.push_back(std::move(z));
            private_edge.push_back(e);
        }
        for (int e : nontree) {
            basis.push_back(cycle_vector(e));
            private_edge.push_back(e);
        }
        std::vector<Int> m = part;
        search_kernel(basis, private_edge, 0, m, dt, dv);
    }

    void search_kernel(const std::vector<std::vector<Int>>& basis,
                       const std::vector<int>& private_edge, size_t i, std::vector<Int>& m,
                       const std::vector<int>& dt, const std::vector<Int>& dv) {
        if (i == basis.size()) {
            for (int e = 0; e < g.num_edges(); ++e)
                if (m[e] < -bound || m[e] > bound - dt[e]) return;
            if (!checker.feasible(dt, m)) return;
            emit(dv, dt, m);
            return;
        }
        int pe = private_edge[i];
        Int lo = -bound - m[pe];
        Int hi = bound - dt[pe] - m[pe];
        for (Int c = lo; c <= hi; ++c) {
            if (c == 0) {
                search_kernel(basis, private_edge, i + 1, m, dt, dv);
                continue;
            }
            std::vector<Int> m2 = m;
            for (int e = 0; e < g.num_edges(); ++e) m2[e] += c * basis[i][e];
            search_kernel(basis, private_edge, i + 1, m2, dt, dv);
        }
    }

    void emit(const std::vector<Int>& dv, const std::vector<int>& dt, const std::vector<Int>& m) {
        // All composition refinements share the same feasibility.
        std::vector<std::vector<std::vector<Int>>> per_edge;
        for (int e = 0; e < g.num_edges(); ++e) per_edge.push_back(compositions(dt[e]));
        std::vector<int> idx(g.num_edges(), 0);
        while (true) {
            CellRecord rec;
            rec.dv = dv;
            rec.m0 = m;
            for (int e = 0; e < g.num_edges(); ++e) rec.de.push_back(per_edge[e][idx[e]]);
            rec.dim = dimension_of(g, rec.de);
            out.push_back(std::move(rec));
            int e = 0;
            while (e < g.num_edges()) {
                if (++idx[e] < static_cast<int>(per_edge[e].size())) break;
                idx[e] = 0;
                ++e;
            }
            if (e == g.num_edges()) break;
        }
    }
};

// The ascending slope ladder of a cell on one edge.
std::vector<Int> slope_ladder(const CellRecord& c, int e) {
    std::vector<Int> s = {c.m0[e]};
    for (const Int& d : c.de[e]) s.push_back(s.back() + d);
    return s;
}

// F lies in the closure of C exactly when, edge by edge, F's slopes form a
// subset of C's: collapsing the complementary segments to zero length
// realizes any point of F as a limit of points of C.
bool is_face(const MetricGraph& g, const CellRecord& f, const CellRecord& c) {
    for (int e = 0; e < g.num_edges(); ++e) {
        std::vector<Int> sf = slope_ladder(f, e), sc = slope_ladder(c, e);
        if (!std::includes(sc.begin(), sc.end(), sf.begin(), sf.end())) return false;
    }
    return true;
}

}  // namespace

std::vector<int> CellComplex::f_vector() const {
    int maxdim = -1;
    for (const auto& c : cells) maxdim = std::max(maxdim, c.dim);
    std::vector<int> f(maxdim + 1, 0);
    for (const auto& c : cells) f[c.dim]++;
    return f;
}

std::vector<int> CellComplex::zero_cells() const {
    std::vector<int> out;
    for (size_t i = 0; i < cells.size(); ++i)
        if (cells[i].dim == 0) out.push_back(static_cast<int>(i));
    return out;
}

CellComplex enumerate_cells(GraphPtr g, const Divisor& d, const Int& slope_bound) {
    ModelSetup ms = make_model(std::move(g), d);
    CellComplex cc;
    cc.base = ms.base;
    cc.model = ms.model;
    cc.refinement = ms.refinement;
    cc.d_model = ms.d_model;

    if (d.degree() < 0) return cc;

    Int bound = slope_bound;
    if (bound <= 0) {
        bound = 0;
        for (auto& [p, c] : d.coeffs())
            if (c > 0) bound += c;
        if (bound == 0) bound = 1;  // still allows the zero divisor's cell
    }
    if (bound > 1000000) throw Error("slope bound too large to enumerate cells");

    Enumerator en(*cc.model);
    en.deg = to_int(d.degree());
    en.dcoeff.assign(cc.model->num_vertices(), Int(0));
    for (int v = 0; v < cc.model->num_vertices(); ++v)
        en.dcoeff[v] = cc.d_model.coeff(GraphPoint::vertex(v));
    en.run(bound);

    std::sort(en.out.begin(), en.out.end());
    cc.cells = std::move(en.out);

    cc.faces.assign(cc.cells.size(), {});
    for (size_t i = 0; i < cc.cells.size(); ++i)
        for (size_t j = 0; j < cc.cells.size(); ++j)
            if (i != j && is_face(*cc.model, cc.cells[j], cc.cells[i]))
                cc.faces[i].push_back(static_cast<int>(j));
    return cc;
}

PLFunction zero_cell_function(const CellComplex& cc, int cell_index) {
    const CellRecord& rec = cc.cells[cell_index];
    const MetricGraph& g = *cc.model;
    if (rec.dim != 0) throw Error("cell is not 0-dimensional");

    int n = g.num_vertices();
    std::vector<Rat> f(n, Rat(0));
    std::vector<bool> known(n, false);
    known[0] = true;
    // Chip-free edges pin the potential differences; for a 0-cell they
    // connect all vertices.
    bool progress = true;
    while (progress) {
        progress = false;
        for (int e = 0; e < g.num_edges(); ++e) {
            if (!rec.de[e].empty()) continue;
            const auto& ed = g.edge(e);
            Rat delta = Rat(rec.m0[e]) * ed.length;
            if (known[ed.u] && !known[ed.v]) {
                f[ed.v] = f[ed.u] + delta;
                known[ed.v] = progress = true;
            } else if (known[ed.v] && !known[ed.u]) {
                f[ed.u] = f[ed.v] - delta;
                known[ed.u] = progress = true;
            }
        }
    }
    for (bool k : known)
        if (!k) throw Error("0-cell potentials underdetermined");

    std::vector<PL1D> per_edge;
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        if (rec.de[e].empty()) {
            per_edge.push_back(PL1D::linear(ed.length, f[ed.u], f[ed.v]));
            continue;
        }
        Int t0 = rec.m0[e];
        Int t1 = rec.m0[e] + rec.de[e][0];
        Rat delta = f[ed.v] - f[ed.u];
        Rat x = (Rat(t1) * ed.length - delta) / Rat(t1 - t0);
        PL1D p;
        p.pts = {{Rat(0), f[ed.u]}, {x, f[ed.u] + Rat(t0) * x}, {ed.length, f[ed.v]}};
        p.canonicalize();
        per_edge.push_back(std::move(p));
    }
    return PLFunction::from_edge_data(cc.model, std::move(per_edge)).normalized();
}

Divisor zero_cell_divisor(const CellComplex& cc, int cell_index) {
    return cc.d_model + zero_cell_function(cc, cell_index).divisor();
}

std::optional<int> find_cell(const CellComplex& cc, const PLFunction& f_model) {
    Divisor dp = cc.d_model + f_model.divisor();
    if (!dp.effective()) return std::nullopt;
    const MetricGraph& g = *cc.model;
    DataKey k;
    k.dv.assign(g.num_vertices(), Int(0));
    k.de.assign(g.num_edges(), {});
    k.m0.assign(g.num_edges(), Int(0));
    for (int v = 0; v < g.num_vertices(); ++v) k.dv[v] = dp.coeff(GraphPoint::vertex(v));
    for (auto& [p, c] : dp.coeffs())
        if (!p.at_vertex()) k.de[p.edge_index()].push_back(c);  // map order = ascending offset
    for (int e = 0; e < g.num_edges(); ++e) k.m0[e] = num(f_model.on_edge(e).slope(0));
    for (size_t i = 0; i < cc.cells.size(); ++i)
        if (key_of(cc.cells[i]) == k) return static_cast<int>(i);
    return std::nullopt;
}

std::vector<int> one_cells_at(const CellComplex& cc, const Divisor& dp_on_base) {
    Divisor dp = divisor_to_fine(*cc.base, cc.refinement, dp_on_base);
    int zero_idx = -1;
    for (int i : cc.zero_cells())
        if (zero_cell_divisor(cc, i) == dp) {
            zero_idx = i;
            break;
        }
    if (zero_idx < 0) throw NotAVertex("divisor is not a 0-cell of the complex");
    std::vector<int> out;
    for (size_t j = 0; j < cc.cells.size(); ++j)
        if (cc.cells[j].dim == 1 &&
            std::binary_search(cc.faces[j].begin(), cc.faces[j].end(), zero_idx))
            out.push_back(static_cast<int>(j));
    return out;
}

ClosedSubgraph subgraph_union(const MetricGraph& g, const std::vector<ClosedSubgraph>& parts) {
    std::set<int> vs;
    std::map<int, std::vector<ClosedSubgraph::Interval>> ivs;
    for (const auto& p : parts) {
        vs.insert(p.vertices().begin(), p.vertices().end());
        for (auto& [e, list] : p.edge_intervals())
            ivs[e].insert(ivs[e].end(), list.begin(), list.end());
    }
    return ClosedSubgraph(g, std::move(vs), std::move(ivs));
}

namespace {

bool no_smooth_cut_set_in_support(const MetricGraph& g, const Divisor& dp) {
    std::vector<GraphPoint> smooth;
    for (const GraphPoint& p : dp.support())
        if (p.smooth(g)) smooth.push_back(p);
    if (smooth.empty()) return true;
    return components_minus(g, smooth).size() == 1;
}

bool is_extremal_function(GraphPtr model, const Divisor& dp) {
    std::vector<ClosedSubgraph> comps = components_minus(*model, dp.support());
    int c = static_cast<int>(comps.size());
    // A union of components' closures can fire iff every boundary chip count
    // covers the outgoing directions.
    std::vector<char> fires(1 << c, 0);
    for (int mask = 1; mask < (1 << c); ++mask) {
        std::vector<ClosedSubgraph> sel;
        for (int i = 0; i < c; ++i)
            if (mask & (1 << i)) sel.push_back(comps[i]);
        ClosedSubgraph u = subgraph_union(*model, sel);
        if (u.is_whole_graph(*model)) {
            fires[mask] = 0;
            continue;
        }
        fires[mask] = can_fire(model, dp, u).has_value() ? 1 : 0;
    }
    int full = (1 << c) - 1;
    for (int s = 1; s < full; ++s) {
        if (!fires[s]) continue;
        for (int t = 1; t < full; ++t) {
            if ((s | t) != full || !fires[t]) continue;
            return false;  // two proper covering subgraphs can both fire
        }
    }
    return true;
}

}  // namespace

GeneratorSet GeneratorSet::extremal_subset() const {
    GeneratorSet out;
    out.graph = graph;
    for (size_t i = 0; i < functions.size(); ++i) {
        if (!extremal[i]) continue;
        out.functions.push_back(functions[i]);
        out.extremal.push_back(true);
        out.divisors.push_back(divisors[i]);
    }
    return out;
}

GeneratorSet generating_set(GraphPtr g, const Divisor& d, const Int& slope_bound) {
    CellComplex cc = enumerate_cells(g, d, slope_bound);
    GeneratorSet gs;
    gs.graph = g;
    for (int i : cc.zero_cells()) {
        PLFunction f_model = zero_cell_function(cc, i);
        Divisor dp_model = cc.d_model + f_model.divisor();
        if (!no_smooth_cut_set_in_support(*cc.model, dp_model)) continue;
        PLFunction f_base = cc.model == cc.base
                                ? f_model
                                : push_function(cc.refinement, cc.base, f_model).normalized();
        Divisor dp_base;
        for (auto& [p, c] : dp_model.coeffs())
            dp_base.add(cc.refinement.to_base(*cc.base, p), c);
        gs.functions.push_back(std::move(f_base));
        gs.divisors.push_back(std::move(dp_base));
        gs.extremal.push_back(is_extremal_function(cc.model, dp_model));
    }
    return gs;
}

GeneratorSet extremals(GraphPtr g, const Divisor& d, const Int& slope_bound) {
    return generating_set(std::move(g), d, slope_bound).extremal_subset();
}

std::vector<Rat> express_in_generators(const PLFunction& f,
                                       const std::vector<PLFunction>& gens) {
    if (gens.empty()) throw NotInSpan("no generators");
    std::vector<std::pair<Rat, PLFunction>> terms;
    std::vector<Rat> coeffs;
    for (const PLFunction& gfun : gens) {
        Rat a = (f - gfun).min_over_graph();
        coeffs.push_back(a);
        terms.emplace_back(a, gfun);
    }
    if (!(tropical_combine(terms) == f)) throw NotInSpan("envelope does not reach the function");
    return coeffs;
}

int cell_dimension(GraphPtr g, const Divisor& d, const Divisor& dp) {
    if (!dp.effective()) throw NotEquivalent("divisor is not effective");
    if (!is_linearly_equivalent(g, d, dp)) throw NotEquivalent("divisor is not in the system");
    std::vector<GraphPoint> interior;
    for (const GraphPoint& p : dp.support())
        if (!p.at_vertex()) interior.push_back(p);
    return static_cast<int>(components_minus(*g, interior).size()) - 1;
}

FiringPoset firing_poset(GraphPtr g, const Divisor& d) {
    if (!d.effective()) throw Error("divisor must be effective");
    ModelSetup ms = make_model(std::move(g), d);
    const MetricGraph& gm = *ms.model;
    FiringPoset poset;
    poset.model = ms.model;
    poset.d_model = ms.d_model;

    int ne = gm.num_edges();
    int n = gm.num_vertices();
    for (int emask = 0; emask < (1 << ne); ++emask) {
        std::set<int> forced;
        for (int e = 0; e < ne; ++e)
            if (emask & (1 << e)) {
                forced.insert(gm.edge(e).u);
                forced.insert(gm.edge(e).v);
            }
        std::vector<int> optional_v;
        for (int v = 0; v < n; ++v)
            if (!forced.count(v)) optional_v.push_back(v);
        int no = static_cast<int>(optional_v.size());
        for (int vmask = 0; vmask < (1 << no); ++vmask) {
            std::set<int> verts = forced;
            for (int i = 0; i < no; ++i)
                if (vmask & (1 << i)) verts.insert(optional_v[i]);
            if (verts.empty()) continue;
            if (static_cast<int>(verts.size()) == n && emask == (1 << ne) - 1) continue;

            // Outgoing directions per boundary vertex.
            std::vector<std::pair<int, std::vector<int>>> bdry;  // (vertex, incidence slots)
            bool ok = true;
            for (int v : verts) {
                std::vector<int> outs;
                const auto& inc = gm.incidences(v);
                for (int s = 0; s < static_cast<int>(inc.size()); ++s)
                    if (!(emask & (1 << inc[s].first))) outs.push_back(s);
                if (outs.empty()) continue;
                if (ms.d_model.coeff(GraphPoint::vertex(v)) < static_cast<int>(outs.size())) {
                    ok = false;
                    break;
                }
                bdry.emplace_back(v, std::move(outs));
            }
            if (!ok) continue;

            // Enumerate weight assignments: per boundary vertex, weights >= 1
            // with total <= D(v).
            std::vector<std::vector<std::vector<Int>>> choices;
            for (auto& [v, outs] : bdry) {
                Int cap = ms.d_model.coeff(GraphPoint::vertex(v));
                std::vector<std::vector<Int>> opts;
                std::vector<Int> cur(outs.size(), Int(1));
                auto rec = [&](auto&& self, size_t i, Int used) -> void {
                    if (i == cur.size()) {
                        opts.push_back(cur);
                        return;
                    }
                    for (Int w = 1; used + w + Int(cur.size() - i - 1) <= cap; ++w) {
                        cur[i] = w;
                        self(self, i + 1, used + w);
                    }
                };
                rec(rec, 0, Int(0));
                choices.push_back(std::move(opts));
            }
            std::vector<size_t> idx(choices.size(), 0);
            while (true) {
                FiringPosetElement el;
                for (int e = 0; e < ne; ++e)
                    if (emask & (1 << e)) el.edges.insert(e);
                el.vertices = verts;
                for (size_t bi = 0; bi < bdry.size(); ++bi)
                    for (size_t oi = 0; oi < bdry[bi].second.size(); ++oi)
                        el.weights[{bdry[bi].first, bdry[bi].second[oi]}] = choices[bi][idx[bi]][oi];
                poset.elements.push_back(std::move(el));
                size_t i = 0;
                while (i < choices.size()) {
                    if (++idx[i] < choices[i].size()) break;
                    idx[i] = 0;
                    ++i;
                }
                if (i == choices.size() || choices.empty()) break;
            }
        }
    }

    int k = static_cast<int>(poset.elements.size());
    poset.less.assign(k, std::vector<bool>(k, false));
    auto leq = [&](const FiringPosetElement& a, const FiringPosetElement& b) {
        if (!std::includes(b.edges.begin(), b.edges.end(), a.edges.begin(), a.edges.end()))
            return false;
        if (!std::includes(b.vertices.begin(), b.vertices.end(), a.vertices.begin(),
                           a.vertices.end()))
            return false;
        for (auto& [dir, w] : a.weights) {
            auto it = b.weights.find(dir);
            if (it != b.weights.end() && w < it->second) return false;
        }
        return true;
    };
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && leq(poset.elements[i], poset.elements[j]) &&
                !(poset.elements[i] == poset.elements[j]))
                poset.less[i][j] = true;
    return poset;
}

SimplicialComplex link_fine_subdivision(GraphPtr g, const Divisor& d) {
    return order_complex(firing_poset(std::move(g), d).less);
}

}  // namespace trop
