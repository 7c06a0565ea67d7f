#include "trop/reduce.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace trop {

VertexDivisor to_vertex_divisor(const MetricGraph& g, const Divisor& d) {
    VertexDivisor c(g.num_vertices(), Int(0));
    for (auto& [p, k] : d.coeffs()) {
        if (!p.at_vertex()) throw NotAVertex(p.describe(g));
        c[p.vertex_index()] += k;
    }
    return c;
}

Divisor from_vertex_divisor(const MetricGraph& g, const VertexDivisor& c) {
    Divisor d;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (c[v] != 0) d.add(GraphPoint::vertex(v), c[v]);
    return d;
}

namespace {

// Multiplicity of edges between v and the set S (loops ignored).
Int edges_to_set(const MetricGraph& g, int v, const std::vector<bool>& in_set) {
    Int k = 0;
    for (auto [e, end] : g.incidences(v)) {
        int w = end == 0 ? g.edge(e).v : g.edge(e).u;
        if (w != v && in_set[w]) ++k;
    }
    return k;
}

// Fires every vertex of S `times` times.
void fire_set(const MetricGraph& g, VertexDivisor& c, const std::vector<bool>& in_set,
              const Int& times) {
    for (const auto& ed : g.edges()) {
        if (ed.u == ed.v) continue;
        if (in_set[ed.u] && !in_set[ed.v]) {
            c[ed.u] -= times;
            c[ed.v] += times;
        } else if (in_set[ed.v] && !in_set[ed.u]) {
            c[ed.v] -= times;
            c[ed.u] += times;
        }
    }
}

}  // namespace

std::set<int> dhar_unburnt(const MetricGraph& g, const VertexDivisor& c, int q) {
    int n = g.num_vertices();
    std::vector<bool> burnt(n, false);
    burnt[q] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (burnt[v]) continue;
            if (c[v] < edges_to_set(g, v, burnt)) {
                burnt[v] = true;
                changed = true;
            }
        }
    }
    std::set<int> unburnt;
    for (int v = 0; v < n; ++v)
        if (!burnt[v]) unburnt.insert(v);
    return unburnt;
}

bool is_superstable(const MetricGraph& g, const VertexDivisor& c, int q) {
    for (int v = 0; v < g.num_vertices(); ++v)
        if (v != q && c[v] < 0) return false;
    return dhar_unburnt(g, c, q).empty();
}

VertexDivisor q_reduce(const MetricGraph& g, VertexDivisor c, int q) {
    int n = g.num_vertices();

    // BFS levels from q.
    std::vector<int> level(n, -1);
    level[q] = 0;
    std::queue<int> bfs;
    bfs.push(q);
    int max_level = 0;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (auto [e, end] : g.incidences(v)) {
            int w = end == 0 ? g.edge(e).v : g.edge(e).u;
            if (level[w] < 0) {
                level[w] = level[v] + 1;
                max_level = std::max(max_level, level[w]);
                bfs.push(w);
            }
        }
    }

    // Phase 1: clear debts level by level, farthest first.  Firing the ball
    // of radius k-1 only moves chips onto level k, so cleared levels stay
    // nonnegative.
    for (int k = max_level; k >= 1; --k) {
        std::vector<bool> ball(n, false);
        for (int v = 0; v < n; ++v)
            if (level[v] < k) ball[v] = true;
        for (int v = 0; v < n; ++v) {
            if (level[v] != k || c[v] >= 0) continue;
            Int gain = edges_to_set(g, v, ball);
            Int t = (-c[v] + gain - 1) / gain;
            fire_set(g, c, ball, t);
        }
    }

    // Phase 2: Dhar superstabilization.
    for (long iter = 0;; ++iter) {
        if (iter > 100000000L) throw Error("q_reduce failed to stabilize");
        std::set<int> u = dhar_unburnt(g, c, q);
        if (u.empty()) break;
        std::vector<bool> in_set(n, false);
        for (int v : u) in_set[v] = true;
        fire_set(g, c, in_set, 1);
    }
    return c;
}

namespace {

int rank_rec(const MetricGraph& g, const VertexDivisor& reduced,
             std::map<VertexDivisor, int>& memo) {
    if (reduced[0] < 0) return -1;
    auto it = memo.find(reduced);
    if (it != memo.end()) return it->second;
    int best = -2;
    for (int v = 0; v < g.num_vertices(); ++v) {
        VertexDivisor c = reduced;
        c[v] -= 1;
        int r = rank_rec(g, q_reduce(g, std::move(c), 0), memo);
        if (best == -2 || r < best) best = r;
        if (best == -1) break;
    }
    int result = 1 + best;
    memo[reduced] = result;
    return result;
}

}  // namespace

int rank_on_model(const MetricGraph& g, const VertexDivisor& c) {
    std::map<VertexDivisor, int> memo;
    return rank_rec(g, q_reduce(g, c, 0), memo);
}

Int support_denominator(const MetricGraph& g, const Divisor& d) {
    (void)g;
    Int k = 1;
    for (auto& [p, c] : d.coeffs())
        if (!p.at_vertex()) k = lcm(k, den(p.offset()));
    return k;
}

Divisor divisor_to_fine(const MetricGraph& base, const Refinement& r, const Divisor& d) {
    Divisor out;
    for (auto& [p, c] : d.coeffs()) out.add(r.to_fine(base, p), c);
    return out;
}

namespace {

struct ScaledSetup {
    MetricGraph scaled;
    Divisor scaled_divisor;  // offsets multiplied by the scale
    Int scale;
};

ScaledSetup scale_integral(const MetricGraph& g, const Divisor& d) {
    ScaledSetup s;
    s.scale = g.integral_scale();
    s.scaled = g.scaled(Rat(s.scale));
    for (auto& [p, c] : d.coeffs()) {
        if (p.at_vertex())
            s.scaled_divisor.add(p, c);
        else
            s.scaled_divisor.add(
                GraphPoint::on_edge(s.scaled, p.edge_index(), p.offset() * Rat(s.scale)), c);
    }
    return s;
}

int rank_at_level(const MetricGraph& gs, const Divisor& ds, int k) {
    Refinement r = unit_refinement(gs, k);
    Divisor fine_d = divisor_to_fine(gs, r, ds);
    return rank_on_model(r.fine, to_vertex_divisor(r.fine, fine_d));
}

}  // namespace

int rank(const MetricGraph& g, const Divisor& d) {
    if (d.degree() < 0) return -1;
    ScaledSetup s = scale_integral(g, d);
    int k1 = to_int(support_denominator(s.scaled, s.scaled_divisor));
    int r1 = rank_at_level(s.scaled, s.scaled_divisor, k1);
    int r2 = rank_at_level(s.scaled, s.scaled_divisor, 2 * k1);
    if (r1 != r2)
        throw RankDisagreement("rank " + std::to_string(r1) + " at level " + std::to_string(k1) +
                               " vs " + std::to_string(r2) + " at level " + std::to_string(2 * k1));
    return r1;
}

namespace {

// Solves the reduced Laplacian system L_0 x = b exactly; q's coordinate of
// the returned full-length vector is 0.
std::vector<Rat> solve_reduced_laplacian(const MetricGraph& g, const std::vector<Int>& b, int q) {
    int n = g.num_vertices();
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (v != q) keep.push_back(v);
    int m = n - 1;
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m + 1, Rat(0)));
    for (int i = 0; i < m; ++i) {
        int v = keep[i];
        a[i][m] = Rat(b[v]);
        for (auto [e, end] : g.incidences(v)) {
            int w = end == 0 ? g.edge(e).v : g.edge(e).u;
            if (w == v) continue;  // loops cancel in the Laplacian
            a[i][i] += 1;
            auto pos = std::lower_bound(keep.begin(), keep.end(), w);
            if (pos != keep.end() && *pos == w) a[i][pos - keep.begin()] -= 1;
        }
    }
    for (int col = 0; col < m; ++col) {
        int piv = -1;
        for (int row = col; row < m; ++row)
            if (a[row][col] != 0) {
                piv = row;
                break;
            }
        if (piv < 0) throw Error("reduced Laplacian is singular");
        std::swap(a[col], a[piv]);
        for (int row = 0; row < m; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rat f = a[row][col] / a[col][col];
            for (int j = col; j <= m; ++j) a[row][j] -= f * a[col][j];
        }
    }
    std::vector<Rat> x(n, Rat(0));
    for (int i = 0; i < m; ++i) x[keep[i]] = a[i][m] / a[i][i];
    return x;
}

}  // namespace

std::optional<PLFunction> is_linearly_equivalent(GraphPtr g, const Divisor& d1,
                                                 const Divisor& d2) {
    if (d1.degree() != d2.degree()) return std::nullopt;
    if (d1 == d2) return PLFunction::constant(g, Rat(0));

    ScaledSetup s1 = scale_integral(*g, d1);
    ScaledSetup s2 = scale_integral(*g, d2);
    const MetricGraph& gs = s1.scaled;
    Int kk = lcm(support_denominator(gs, s1.scaled_divisor),
                 support_denominator(gs, s2.scaled_divisor));
    int k = to_int(kk);
    Refinement r = unit_refinement(gs, k);
    GraphPtr fine = std::make_shared<MetricGraph>(r.fine);
    VertexDivisor c1 = to_vertex_divisor(*fine, divisor_to_fine(gs, r, s1.scaled_divisor));
    VertexDivisor c2 = to_vertex_divisor(*fine, divisor_to_fine(gs, r, s2.scaled_divisor));

    std::vector<Int> b(fine->num_vertices());
    for (int v = 0; v < fine->num_vertices(); ++v) b[v] = c1[v] - c2[v];
    std::vector<Rat> sigma = solve_reduced_laplacian(*fine, b, 0);
    for (const Rat& x : sigma)
        if (!is_integer(x)) return std::nullopt;

    std::vector<Rat> h(sigma.size());
    for (size_t i = 0; i < sigma.size(); ++i) h[i] = sigma[i] / Rat(k);
    PLFunction f_fine = PLFunction::interpolate(fine, h);
    PLFunction f_scaled = push_function(r, std::make_shared<MetricGraph>(gs), f_fine);

    // Undo the integral scaling: shrink offsets and values by the same factor
    // so slopes stay unchanged.
    std::vector<PL1D> per_edge;
    Rat inv = Rat(1) / Rat(s1.scale);
    for (int e = 0; e < g->num_edges(); ++e) {
        PL1D p = f_scaled.on_edge(e);
        for (auto& [x, y] : p.pts) {
            x *= inv;
            y *= inv;
        }
        per_edge.push_back(std::move(p));
    }
    return PLFunction::from_edge_data(std::move(g), std::move(per_edge));
}

}  // namespace trop
