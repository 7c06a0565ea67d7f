#include "trop/picard.hpp"

#include <algorithm>
#include <numeric>

namespace trop {

namespace {

Int nonloop_degree(const MetricGraph& g, int v) {
    Int d = 0;
    for (auto [e, end] : g.incidences(v))
        if (g.edge(e).u != g.edge(e).v) ++d;
    return d;
}

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Diagonal of the integer normal form, divisibility-ordered, nonnegative.
std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int steps = std::min(rows, cols);
    for (int t = 0; t < steps; ++t) {
        // deterministic pivot: least |value|, then least position
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                if (pi < 0 || abs_int(m[i][j]) < abs_int(m[pi][pj])) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        std::swap(m[t], m[pi]);
        for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                Int q = m[i][t] / m[t][t];
                for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {  // remainder smaller than the pivot
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Int q = m[t][j] / m[t][t];
                for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
            if (clean) {
                // the pivot must divide the remaining block
                for (int i = t + 1; i < rows && clean; ++i)
                    for (int j = t + 1; j < cols && clean; ++j)
                        if (m[i][j] % m[t][t] != 0) {
                            for (int jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                            clean = false;
                        }
            }
        }
    }
    std::vector<Int> d(steps, Int(0));
    for (int t = 0; t < steps; ++t) d[t] = abs_int(m[t][t]);
    // enforce d[i] | d[i+1]
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 0; i + 1 < steps; ++i) {
            if (d[i + 1] == 0 || (d[i] != 0 && d[i + 1] % d[i] == 0)) continue;
            Int g = gcd(d[i], d[i + 1]);
            Int l = g == 0 ? Int(0) : d[i] / g * d[i + 1];
            d[i] = g;
            d[i + 1] = l;
            moved = true;
        }
    }
    return d;
}

}  // namespace

LaplacianMatrix reduced_laplacian(const MetricGraph& g, int v0) {
    int n = g.num_vertices();
    LaplacianMatrix lm;
    lm.v0 = v0;
    lm.full.assign(n, std::vector<Int>(n, Int(0)));
    for (int v = 0; v < n; ++v) lm.full[v][v] = nonloop_degree(g, v);
    for (const auto& e : g.edges()) {
        if (e.u == e.v) continue;
        lm.full[e.u][e.v] -= 1;
        lm.full[e.v][e.u] -= 1;
    }
    for (int i = 0; i < n; ++i) {
        if (i == v0) continue;
        std::vector<Int> row;
        for (int j = 0; j < n; ++j)
            if (j != v0) row.push_back(lm.full[i][j]);
        lm.reduced.push_back(std::move(row));
    }
    return lm;
}

std::vector<Int> invariant_factors(std::vector<std::vector<Int>> m) {
    std::vector<Int> out;
    for (const Int& d : smith_diagonal(std::move(m)))
        if (d > 1) out.push_back(d);
    return out;
}

Int normal_form_order(std::vector<std::vector<Int>> m) {
    Int order = 1;
    for (const Int& d : smith_diagonal(std::move(m))) order *= d;
    return order;
}

Int spanning_tree_count(const MetricGraph& g) {
    int n = g.num_vertices(), ne = g.num_edges();
    if (ne > 30) throw TooLarge("too many edges for spanning tree enumeration");
    Int count = 0;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(chosen.size()) == n - 1) {
            std::vector<int> parent(n);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            for (int e : chosen) {
                int a = find(g.edge(e).u), b = find(g.edge(e).v);
                if (a == b) return;  // cycle
                parent[a] = b;
            }
            count += 1;
            return;
        }
        if (next >= ne) return;
        chosen.push_back(next);
        self(self, next + 1);
        chosen.pop_back();
        if (ne - next - 1 >= n - 1 - static_cast<int>(chosen.size())) self(self, next + 1);
    };
    rec(rec, 0);
    return count;
}

std::vector<VertexDivisor> superstables(const MetricGraph& g, int v0, const Int& cap) {
    Int order = normal_form_order(reduced_laplacian(g, v0).reduced);
    if (order > cap) throw TooLarge("superstable enumeration exceeds the cap");
    int n = g.num_vertices();
    std::vector<VertexDivisor> out;
    VertexDivisor c(n, Int(0));
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            if (is_superstable(g, c, v0)) out.push_back(c);
            return;
        }
        if (v == v0) {
            self(self, v + 1);
            return;
        }
        Int top = nonloop_degree(g, v) - 1;
        for (c[v] = 0; c[v] <= top; ++c[v]) self(self, v + 1);
        c[v] = 0;
    };
    rec(rec, 0);
    return out;
}

CriticalGroup critical_group(GraphPtr g, int v0, const Int& cap) {
    CriticalGroup cg;
    cg.model = g;
    cg.v0 = v0;
    LaplacianMatrix lm = reduced_laplacian(*g, v0);
    cg.factors = invariant_factors(lm.reduced);
    cg.order = normal_form_order(lm.reduced);
    if (cg.order <= cap) {
        cg.reps = superstables(*g, v0, cap);
        cg.reps_complete = true;
    }
    return cg;
}

SubdivisionModel subdivision_model(GraphPtr base, int k) {
    SubdivisionModel m;
    m.base = base;
    m.level = k;
    m.refinement = unit_refinement(*base, k);
    m.fine = std::make_shared<MetricGraph>(m.refinement.fine);
    return m;
}

namespace {

// Re-indexes chips from the level-k1 model into the level-k2 model.
VertexDivisor reindex(GraphPtr base, const SubdivisionModel& m1, const SubdivisionModel& m2,
                      const VertexDivisor& c) {
    VertexDivisor out(m2.fine->num_vertices(), Int(0));
    for (int v = 0; v < m1.fine->num_vertices(); ++v) {
        if (c[v] == 0) continue;
        GraphPoint p = m1.refinement.to_base(*base, GraphPoint::vertex(v));
        GraphPoint q = m2.refinement.to_fine(*base, p);
        if (!q.at_vertex()) throw NotAVertex("point missing from the finer model");
        out[q.vertex_index()] += c[v];
    }
    return out;
}

void fire_vertex_set(const MetricGraph& g, VertexDivisor& c, const std::set<int>& s) {
    for (const auto& e : g.edges()) {
        if (e.u == e.v) continue;
        bool iu = s.count(e.u), iv = s.count(e.v);
        if (iu == iv) continue;
        int from = iu ? e.u : e.v, to = iu ? e.v : e.u;
        c[from] -= 1;
        c[to] += 1;
    }
}

}  // namespace

VertexDivisor transition_map(GraphPtr base, int k1, int k2, const VertexDivisor& c, int v0) {
    if (k2 % k1 != 0) throw NotDivisible();
    SubdivisionModel m1 = subdivision_model(base, k1);
    SubdivisionModel m2 = subdivision_model(base, k2);
    if (!is_superstable(*m1.fine, c, m1.base_vertex(v0))) throw NotSuperstable();
    return reindex(base, m1, m2, c);
}

FiringEmulation emulate_vertex_firing(GraphPtr base, int k1, int k2, int v,
                                      const VertexDivisor& c) {
    if (k2 % k1 != 0) throw NotDivisible();
    SubdivisionModel m1 = subdivision_model(base, k1);
    SubdivisionModel m2 = subdivision_model(base, k2);
    if (c[v] < nonloop_degree(*m1.fine, v)) throw NotReady();

    GraphPoint pv = m2.refinement.to_fine(*base, m1.refinement.to_base(*base, GraphPoint::vertex(v)));
    int m = k2 / k1;
    std::vector<std::set<int>> nested;  // H_0 subset H_1 subset ...
    std::set<int> h = {pv.vertex_index()};
    nested.push_back(h);
    for (int i = 1; i < m; ++i) {
        std::set<int> grown = h;
        for (const auto& e : m2.fine->edges()) {
            if (h.count(e.u)) grown.insert(e.v);
            if (h.count(e.v)) grown.insert(e.u);
        }
        h = std::move(grown);
        nested.push_back(h);
    }

    FiringEmulation out;
    out.result = reindex(base, m1, m2, c);
    for (int i = m - 1; i >= 0; --i) {
        out.sequence.push_back(nested[i]);
        fire_vertex_set(*m2.fine, out.result, nested[i]);
    }
    return out;
}

PicardClass picard_class(GraphPtr g, const Divisor& d) {
    if (d.degree() != 0) throw Error("class requires a degree-zero divisor");
    Int s = g->integral_scale();
    auto scaled = std::make_shared<MetricGraph>(g->scaled(Rat(s)));
    Divisor ds;
    for (auto& [p, c] : d.coeffs()) {
        if (p.at_vertex())
            ds.add(p, c);
        else
            ds.add(GraphPoint::on_edge(*scaled, p.edge_index(), p.offset() * Rat(s)), c);
    }
    PicardClass pc;
    pc.base = scaled;
    pc.v0 = 0;
    pc.level = static_cast<int>(to_int(support_denominator(*scaled, ds)));
    SubdivisionModel m = subdivision_model(scaled, pc.level);
    VertexDivisor vd = to_vertex_divisor(*m.fine, divisor_to_fine(*scaled, m.refinement, ds));
    pc.rep = q_reduce(*m.fine, std::move(vd), m.base_vertex(pc.v0));
    return pc;
}

namespace {

// Representative of c on the level-l model, reduced at the base vertex.
VertexDivisor promote(const PicardClass& c, int l, const SubdivisionModel& target) {
    SubdivisionModel from = subdivision_model(c.base, c.level);
    VertexDivisor vd = reindex(c.base, from, target, c.rep);
    if (l == c.level) return vd;
    return q_reduce(*target.fine, std::move(vd), target.base_vertex(c.v0));
}

}  // namespace

bool pic_equal(const PicardClass& a, const PicardClass& b) {
    int l = std::lcm(a.level, b.level);
    SubdivisionModel m = subdivision_model(a.base, l);
    return promote(a, l, m) == promote(b, l, m);
}

bool pic_is_identity(const PicardClass& c) {
    for (const Int& x : c.rep)
        if (x != 0) return false;
    return true;
}

PicardClass pic_add(const PicardClass& a, const PicardClass& b) {
    int l = std::lcm(a.level, b.level);
    SubdivisionModel m = subdivision_model(a.base, l);
    VertexDivisor va = promote(a, l, m), vb = promote(b, l, m);
    for (size_t i = 0; i < va.size(); ++i) va[i] += vb[i];
    PicardClass out;
    out.base = a.base;
    out.v0 = a.v0;
    out.level = l;
    out.rep = q_reduce(*m.fine, std::move(va), m.base_vertex(a.v0));
    return out;
}

Int pic_order(const PicardClass& c, const Int& cap) {
    if (pic_is_identity(c)) return 1;
    PicardClass acc = c;
    Int n = 1;
    while (!pic_is_identity(acc)) {
        acc = pic_add(acc, c);
        n += 1;
        if (n > cap) throw TooLarge("class order exceeds the cap");
    }
    return n;
}

}  // namespace trop
