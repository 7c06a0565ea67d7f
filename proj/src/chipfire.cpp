#include "trop/chipfire.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace trop {

PLFunction dist_to_subgraph(GraphPtr g, const ClosedSubgraph& sub) {
    if (sub.empty()) throw EmptySubgraph();
    const MetricGraph& gr = *g;
    int n = gr.num_vertices();
    Rat inf = gr.total_length() + 1;

    std::vector<Rat> d(n, inf);
    for (int v : sub.vertices()) d[v] = 0;
    for (auto& [e, ivs] : sub.edge_intervals()) {
        const auto& ed = gr.edge(e);
        if (ivs.front().a < d[ed.u]) d[ed.u] = ivs.front().a;
        Rat tail = ed.length - ivs.back().b;
        if (tail < d[ed.v]) d[ed.v] = tail;
    }

    std::vector<bool> done(n, false);
    for (int iter = 0; iter < n; ++iter) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!done[v] && (best < 0 || d[v] < d[best])) best = v;
        if (best < 0) break;
        done[best] = true;
        for (auto [e, end] : gr.incidences(best)) {
            int w = end == 0 ? gr.edge(e).v : gr.edge(e).u;
            Rat cand = d[best] + gr.edge(e).length;
            if (cand < d[w]) d[w] = cand;
        }
    }

    std::vector<PL1D> per_edge;
    for (int e = 0; e < gr.num_edges(); ++e) {
        const auto& ed = gr.edge(e);
        PL1D m = PL1D::linear(ed.length, d[ed.u], d[ed.u] + ed.length);
        m = PL1D::min(m, PL1D::linear(ed.length, d[ed.v] + ed.length, d[ed.v]));
        auto it = sub.edge_intervals().find(e);
        if (it != sub.edge_intervals().end()) {
            for (const auto& iv : it->second) {
                PL1D tent;
                if (iv.a > 0) tent.pts.emplace_back(Rat(0), iv.a);
                tent.pts.emplace_back(iv.a, Rat(0));
                if (iv.b > iv.a) tent.pts.emplace_back(iv.b, Rat(0));
                if (iv.b < ed.length) tent.pts.emplace_back(ed.length, ed.length - iv.b);
                m = PL1D::min(m, tent);
            }
        }
        per_edge.push_back(std::move(m));
    }
    return PLFunction::from_edge_data(std::move(g), std::move(per_edge));
}

PLFunction chip_firing_function(GraphPtr g, const ClosedSubgraph& sub, const Rat& l) {
    if (sub.is_whole_graph(*g)) throw Error("cannot fire the whole graph");
    if (l <= 0) throw Error("firing distance must be positive");
    PLFunction dist = dist_to_subgraph(std::move(g), sub);
    return -dist.min_with_const(l);
}

std::optional<Rat> can_fire(GraphPtr g, const Divisor& d, const ClosedSubgraph& sub) {
    const MetricGraph& gr = *g;
    if (sub.empty()) throw EmptySubgraph();
    if (sub.is_whole_graph(gr)) throw Error("cannot fire the whole graph");

    for (const GraphPoint& p : sub.boundary(gr))
        if (d.coeff(p) < sub.outgoing_directions(gr, p)) return std::nullopt;

    PLFunction dist = dist_to_subgraph(g, sub);
    std::optional<Rat> cap;
    auto consider = [&](const Rat& v) {
        if (!cap || v < *cap) cap = v;
    };

    for (const GraphPoint& p : d.support())
        if (!sub.contains(gr, p)) consider(dist.value(p));

    for (int v = 0; v < gr.num_vertices(); ++v) {
        if (sub.contains(gr, GraphPoint::vertex(v))) continue;
        if (gr.degree(v) != 2) {
            consider(dist.vertex_value(v));
            continue;
        }
        bool all_down = true;
        for (auto [e, end] : gr.incidences(v))
            if (dist.out_slope_vertex(v, e, end) >= 0) all_down = false;
        if (all_down) consider(dist.vertex_value(v));
    }

    // Interior local maxima of the distance function: two fronts meet there.
    for (int e = 0; e < gr.num_edges(); ++e) {
        const PL1D& f = dist.on_edge(e);
        for (size_t i = 1; i + 1 < f.pts.size(); ++i)
            if (f.slope(static_cast<int>(i) - 1) > 0 && f.slope(static_cast<int>(i)) < 0)
                consider(f.pts[i].second);
    }

    if (!cap) throw Error("no obstruction found for a proper subgraph");
    return cap;
}

// --- decomposition ---------------------------------------------------------

WeightedChipFiringMove WeightedChipFiringMove::from_function(const PLFunction& f) {
    std::set<Rat> vals;
    for (const GraphPoint& p : f.corner_points()) vals.insert(f.value(p));
    if (vals.size() != 2) throw Error("not a two-valued function");
    WeightedChipFiringMove m;
    m.high_value = *vals.rbegin();
    m.drop = *vals.rbegin() - *vals.begin();
    m.low = f.level_set(*vals.begin());
    m.high = f.level_set(*vals.rbegin());
    m.f = f;
    return m;
}

std::vector<WeightedChipFiringMove> decompose_function(const PLFunction& f) {
    std::set<Rat> vals;
    for (const GraphPoint& p : f.corner_points()) vals.insert(f.value(p));
    if (vals.size() <= 1) return {};
    if (vals.size() == 2) return {WeightedChipFiringMove::from_function(f)};
    auto it = vals.begin();
    std::advance(it, vals.size() / 2);
    Rat c = *it;
    auto lo = decompose_function(f.min_with_const(c));
    auto hi = decompose_function(f.max_with_const(c));
    lo.insert(lo.end(), hi.begin(), hi.end());
    return lo;
}

namespace {

struct Gap {
    int edge;
    Rat a, b;
    // Per end (0 = left/a, 1 = right/b): attach_side is 0 (low), 1 (high) or
    // -1 when the end continues through an uncovered vertex `via_vertex`.
    int attach_side[2] = {-1, -1};
    int via_vertex[2] = {-1, -1};
};

struct ChainPiece {
    int edge;
    Rat from, to;  // offsets; the chain parameter increases from `from` to `to`
    Rat z_start;   // chain parameter at `from`
};

struct Chain {
    std::vector<ChainPiece> pieces;
    Rat length;
};

struct CovIv {
    Rat a, b;
    int side;  // 0 low, 1 high
};

}  // namespace

std::vector<PLFunction> decompose_weighted_move(const WeightedChipFiringMove& m) {
    const MetricGraph& gr = m.f.graph();
    GraphPtr gp = m.f.graph_ptr();

    auto covered_vertex = [&](int v) {
        return m.low.vertices().count(v) || m.high.vertices().count(v);
    };
    auto vertex_side = [&](int v) { return m.high.vertices().count(v) ? 1 : 0; };

    // Per-edge sorted covered intervals from both level sets, with vertex
    // endpoints materialized as degenerate intervals.
    std::vector<std::vector<CovIv>> covs(gr.num_edges());
    for (int side = 0; side < 2; ++side) {
        const ClosedSubgraph& s = side == 0 ? m.low : m.high;
        for (auto& [e, ivs] : s.edge_intervals())
            for (const auto& iv : ivs) covs[e].push_back({iv.a, iv.b, side});
    }
    for (int e = 0; e < gr.num_edges(); ++e) {
        const auto& ed = gr.edge(e);
        auto touches = [&](const Rat& x) {
            for (const auto& c : covs[e])
                if (c.a <= x && x <= c.b) return true;
            return false;
        };
        if (covered_vertex(ed.u) && !touches(0)) covs[e].push_back({Rat(0), Rat(0), vertex_side(ed.u)});
        if (covered_vertex(ed.v) && !touches(ed.length))
            covs[e].push_back({ed.length, ed.length, vertex_side(ed.v)});
        std::sort(covs[e].begin(), covs[e].end(),
                  [](const CovIv& x, const CovIv& y) { return x.a < y.a; });
    }

    // Uncovered gaps with their end connections.
    std::vector<Gap> gaps;
    std::map<int, std::vector<std::pair<int, int>>> at_vertex;  // vertex -> (gap, end)
    for (int e = 0; e < gr.num_edges(); ++e) {
        const auto& ed = gr.edge(e);
        Rat pos = 0;
        int prev_side = -1;
        auto emit = [&](const Rat& a, const Rat& b, int left_side, int right_side) {
            Gap gap;
            gap.edge = e;
            gap.a = a;
            gap.b = b;
            int idx = static_cast<int>(gaps.size());
            if (left_side >= 0) {
                gap.attach_side[0] = left_side;
            } else {
                gap.via_vertex[0] = ed.u;
                at_vertex[ed.u].emplace_back(idx, 0);
            }
            if (right_side >= 0) {
                gap.attach_side[1] = right_side;
            } else {
                gap.via_vertex[1] = ed.v;
                at_vertex[ed.v].emplace_back(idx, 1);
            }
            gaps.push_back(gap);
        };
        for (const auto& c : covs[e]) {
            if (c.a > pos) emit(pos, c.a, prev_side, c.side);
            pos = c.b;
            prev_side = c.side;
        }
        if (pos < ed.length) emit(pos, ed.length, prev_side, -1);
    }

    for (auto& [v, ends] : at_vertex)
        if (static_cast<int>(ends.size()) != 2 || gr.degree(v) != 2)
            throw Error("complement is not a union of open segments");

    // Walk maximal chains from attachment ends.
    std::vector<bool> used(gaps.size(), false);
    std::vector<Chain> chains;
    std::vector<Int> slopes;
    for (size_t g0 = 0; g0 < gaps.size(); ++g0) {
        for (int end0 = 0; end0 < 2; ++end0) {
            if (used[g0] || gaps[g0].attach_side[end0] < 0) continue;
            int start_side = gaps[g0].attach_side[end0];
            Chain chain;
            chain.length = 0;
            int gi = static_cast<int>(g0), entry = end0, end_side = -1;
            while (true) {
                used[gi] = true;
                const Gap& gap = gaps[gi];
                ChainPiece piece;
                piece.edge = gap.edge;
                piece.from = entry == 0 ? gap.a : gap.b;
                piece.to = entry == 0 ? gap.b : gap.a;
                piece.z_start = chain.length;
                chain.pieces.push_back(piece);
                chain.length += entry == 0 ? gap.b - gap.a : gap.b - gap.a;
                int exit = 1 - entry;
                if (gap.attach_side[exit] >= 0) {
                    end_side = gap.attach_side[exit];
                    break;
                }
                int v = gap.via_vertex[exit];
                auto& ends = at_vertex[v];
                auto [ng, ne] = ends[0].first == gi && ends[0].second == exit ? ends[1] : ends[0];
                gi = ng;
                entry = ne;
            }
            if (start_side == end_side) throw Error("segment joins a level set to itself");
            if (start_side == 0) {
                // Reparameterize so z = 0 at the high end.
                std::vector<ChainPiece> rev;
                for (auto it = chain.pieces.rbegin(); it != chain.pieces.rend(); ++it) {
                    ChainPiece p = *it;
                    std::swap(p.from, p.to);
                    Rat plen = p.from < p.to ? p.to - p.from : p.from - p.to;
                    p.z_start = chain.length - (it->z_start + plen);
                    rev.push_back(p);
                }
                chain.pieces = std::move(rev);
            }
            Rat s = m.drop / chain.length;
            if (!is_integer(s) || s <= 0) throw Error("non-integer segment slope");
            slopes.push_back(num(s));
            chains.push_back(std::move(chain));
        }
    }
    for (bool u : used)
        if (!u) throw Error("complement contains a closed curve");

    Int steps = 1;
    for (const Int& s : slopes) steps = lcm(steps, s);
    Rat unit = m.drop / Rat(steps);
    int nsteps = to_int(steps);

    // Map each edge to the chain pieces that lie on it.
    std::vector<std::vector<std::pair<int, ChainPiece>>> pieces_on_edge(gr.num_edges());
    for (size_t ci = 0; ci < chains.size(); ++ci)
        for (const auto& p : chains[ci].pieces)
            pieces_on_edge[p.edge].emplace_back(static_cast<int>(ci), p);

    std::vector<PLFunction> out;
    for (int t = 1; t <= nsteps; ++t) {
        std::vector<Rat> offset_of_chain(chains.size());
        for (size_t ci = 0; ci < chains.size(); ++ci) {
            Int k = steps / slopes[ci];
            Int j = Int(t - 1) % k;
            offset_of_chain[ci] = Rat(j) * unit;
        }
        auto chain_value = [&](int ci, const Rat& z) {
            Rat a = offset_of_chain[ci];
            if (z <= a) return Rat(0);
            if (z >= a + unit) return -unit;
            return a - z;
        };
        std::vector<PL1D> per_edge;
        for (int e = 0; e < gr.num_edges(); ++e) {
            const auto& ed = gr.edge(e);
            std::set<Rat> xs = {Rat(0), ed.length};
            for (const auto& c : covs[e]) {
                xs.insert(c.a);
                xs.insert(c.b);
            }
            for (const auto& [ci, p] : pieces_on_edge[e]) {
                Rat plen = p.from < p.to ? p.to - p.from : p.from - p.to;
                for (const Rat& z : {offset_of_chain[ci], offset_of_chain[ci] + unit}) {
                    if (z <= p.z_start || z >= p.z_start + plen) continue;
                    Rat x = p.from < p.to ? p.from + (z - p.z_start) : p.from - (z - p.z_start);
                    xs.insert(x);
                }
            }
            auto value_at = [&](const Rat& x) -> Rat {
                for (const auto& c : covs[e])
                    if (c.a <= x && x <= c.b) return c.side == 1 ? Rat(0) : -unit;
                for (const auto& [ci, p] : pieces_on_edge[e]) {
                    Rat lo = p.from < p.to ? p.from : p.to;
                    Rat hi = p.from < p.to ? p.to : p.from;
                    if (x < lo || x > hi) continue;
                    Rat z = p.z_start + (p.from < p.to ? x - p.from : p.from - x);
                    return chain_value(ci, z);
                }
                throw Error("point not covered by move decomposition");
            };
            PL1D f;
            for (const Rat& x : xs) f.pts.emplace_back(x, value_at(x));
            f.canonicalize();
            per_edge.push_back(std::move(f));
        }
        out.push_back(PLFunction::from_edge_data(gp, std::move(per_edge)));
    }
    return out;
}

}  // namespace trop
