#include "trop/embed.hpp"

#include <algorithm>
#include <map>

namespace trop {

TropicalProjectivePoint TropicalProjectivePoint::of(std::vector<Rat> raw) {
    Rat m = raw.front();
    for (const Rat& c : raw) m = std::min(m, c);
    for (Rat& c : raw) c -= m;
    return {std::move(raw)};
}

TropicalProjectivePoint evaluate_map(const std::vector<PLFunction>& fs, const GraphPoint& x) {
    if (fs.empty()) throw Error("empty function set");
    std::vector<Rat> raw;
    for (const PLFunction& f : fs) raw.push_back(f.value(x));
    return TropicalProjectivePoint::of(std::move(raw));
}

std::vector<Int> unbalanced_vector(const std::vector<PLFunction>& fs, const GraphPoint& x,
                                   const Divisor& d) {
    std::vector<Int> u;
    bool any_zero = false;
    for (const PLFunction& f : fs) {
        Int c = d.coeff(x) + f.order_at(x);
        u.push_back(c);
        if (c == 0) any_zero = true;
    }
    if (!any_zero) throw NotBasePointFree("every section vanishes at the point");
    return u;
}

BasePointCheck is_base_point_free(const std::vector<PLFunction>& fs, const Divisor& d) {
    BasePointCheck out;
    if (fs.empty()) return out;
    std::vector<Divisor> divs;
    for (const PLFunction& f : fs) divs.push_back(d + f.divisor());
    for (const GraphPoint& p : divs[0].support()) {
        bool common = true;
        for (const Divisor& dv : divs)
            if (dv.coeff(p) <= 0) {
                common = false;
                break;
            }
        if (common) {
            out.base_point = p;
            return out;
        }
    }
    out.free = true;
    return out;
}

namespace {

Int vec_gcd(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x < 0 ? Int(-x) : x);
    return g;
}

// Integer direction of a projective line segment: slopes reduced modulo the
// all-ones vector to a min-0 representative.
std::vector<Int> reduce_mod_ones(const std::vector<Int>& w) {
    Int m = w.front();
    for (const Int& x : w) m = std::min(m, x);
    std::vector<Int> v;
    for (const Int& x : w) v.push_back(x - m);
    return v;
}

}  // namespace

EmbeddedCurve balance(GraphPtr g, const std::vector<PLFunction>& fs, const Divisor& d) {
    BasePointCheck bpc = is_base_point_free(fs, d);
    if (!bpc.free) throw NotBasePointFree("function set has a base point");
    int n = static_cast<int>(fs.size());

    std::vector<GraphPoint> cut_points;
    for (const PLFunction& f : fs)
        for (const GraphPoint& p : f.corner_points())
            if (!p.at_vertex()) cut_points.push_back(p);
    for (const GraphPoint& p : d.support())
        if (!p.at_vertex()) cut_points.push_back(p);
    Refinement r = refine_at(*g, cut_points);
    GraphPtr fine = std::make_shared<MetricGraph>(r.fine);
    std::vector<PLFunction> lifted;
    for (const PLFunction& f : fs) lifted.push_back(lift_function(r, fine, f));
    Divisor d_fine = divisor_to_fine(*g, r, d);

    EmbeddedCurve curve;
    curve.ambient = n;

    // Collect raw image segments: on each fine edge the map is linear.
    struct LineKey {
        std::vector<Int> dir;  // canonical primitive direction
        TropicalProjectivePoint anchor;
        bool operator<(const LineKey& o) const {
            if (dir != o.dir) return dir < o.dir;
            return anchor < o.anchor;
        }
    };
    struct Piece {
        Rat t0, t1;  // t0 < t1 along dir
        Int mult;
    };
    std::map<LineKey, std::vector<Piece>> lines;

    for (int e = 0; e < fine->num_edges(); ++e) {
        std::vector<Int> w;
        for (const PLFunction& f : lifted) w.push_back(num(f.on_edge(e).slope(0)));
        std::vector<Int> v = reduce_mod_ones(w);
        Int m = vec_gcd(v);
        if (m == 0) continue;  // image of this edge is a single point
        std::vector<Int> p;
        for (const Int& x : v) p.push_back(x / m);

        std::vector<Rat> pu, pv;
        for (const PLFunction& f : lifted) {
            pu.push_back(f.vertex_value(fine->edge(e).u));
            pv.push_back(f.vertex_value(fine->edge(e).v));
        }
        TropicalProjectivePoint A = TropicalProjectivePoint::of(pu);
        TropicalProjectivePoint B = TropicalProjectivePoint::of(pv);

        // Canonical orientation: flip when the reversed direction is smaller.
        std::vector<Int> neg;
        for (const Int& x : p) neg.push_back(-x);
        std::vector<Int> pr = reduce_mod_ones(neg);
        std::vector<Int> dir = std::min(p, pr);

        // Anchor the line at the point where coordinate j - coordinate 0
        // vanishes, j the first coordinate moving relative to 0.
        int j = -1;
        for (int i = 1; i < n; ++i)
            if (dir[i] != dir[0]) {
                j = i;
                break;
            }
        Rat delta = Rat(dir[j] - dir[0]);
        auto t_of = [&](const TropicalProjectivePoint& x) {
            return (x.coords[j] - x.coords[0]) / delta;
        };
        auto anchor_of = [&](const TropicalProjectivePoint& x) {
            Rat t = t_of(x);
            std::vector<Rat> raw = x.coords;
            for (int i = 0; i < n; ++i) raw[i] -= t * Rat(dir[i]);
            return TropicalProjectivePoint::of(std::move(raw));
        };
        LineKey key{dir, anchor_of(A)};
        Rat ta = t_of(A), tb = t_of(B);
        if (ta > tb) std::swap(ta, tb);
        // Multiplicity of the map on this edge is the lattice stretch m.
        lines[key].push_back({ta, tb, m});
    }

    for (auto& [key, pieces] : lines) {
        std::vector<Rat> cuts;
        for (const Piece& p : pieces) {
            cuts.push_back(p.t0);
            cuts.push_back(p.t1);
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        auto point_at = [&](const Rat& t) {
            std::vector<Rat> raw = key.anchor.coords;
            for (int i = 0; i < curve.ambient; ++i) raw[i] += t * Rat(key.dir[i]);
            return TropicalProjectivePoint::of(std::move(raw));
        };
        for (size_t i = 0; i + 1 < cuts.size(); ++i) {
            Int mult = 0;
            for (const Piece& p : pieces)
                if (p.t0 <= cuts[i] && cuts[i + 1] <= p.t1) mult += p.mult;
            if (mult == 0) continue;
            curve.segments.push_back({point_at(cuts[i]), point_at(cuts[i + 1]), key.dir, mult});
        }
    }

    // One ray in direction -u(x) at every unbalanced point; support of every
    // D + (f_i) sits at fine vertices.
    std::map<std::pair<TropicalProjectivePoint, std::vector<Int>>, Int> rays;
    for (int v = 0; v < fine->num_vertices(); ++v) {
        GraphPoint x = GraphPoint::vertex(v);
        std::vector<Int> u = unbalanced_vector(lifted, x, d_fine);
        Int m = vec_gcd(u);
        if (m == 0) continue;
        std::vector<Int> dir;
        for (const Int& c : u) dir.push_back(-c / m);
        rays[{evaluate_map(lifted, x), dir}] += m;
    }
    for (auto& [k, mult] : rays) curve.rays.push_back({k.first, k.second, mult});

    std::sort(curve.segments.begin(), curve.segments.end(),
              [](const EmbeddedCurve::Segment& a, const EmbeddedCurve::Segment& b) {
                  if (!(a.a == b.a)) return a.a < b.a;
                  if (!(a.b == b.b)) return a.b < b.b;
                  return a.direction < b.direction;
              });
    return curve;
}

Int curve_degree(const EmbeddedCurve& c) {
    if (c.rays.empty()) return 0;
    std::vector<Int> s(c.ambient, Int(0));
    for (const auto& r : c.rays)
        for (int i = 0; i < c.ambient; ++i) s[i] += r.multiplicity * r.direction[i];
    for (const Int& x : s)
        if (x != s[0]) throw Unbalanced("ray directions do not sum to a multiple of all-ones");
    return -s[0];
}

// --- tropical convex hulls -------------------------------------------------

namespace {

// Type of x relative to the generators (max-plus): per coordinate, the
// generators attaining max_j(lambda_j + p_j) there.
std::vector<std::vector<int>> type_of(const std::vector<TropicalProjectivePoint>& gens,
                                      const TropicalProjectivePoint& x) {
    int n = static_cast<int>(x.coords.size());
    int m = static_cast<int>(gens.size());
    std::vector<Rat> lambda(m);
    for (int j = 0; j < m; ++j) {
        Rat l = x.coords[0] - gens[j].coords[0];
        for (int i = 1; i < n; ++i) l = std::min(l, x.coords[i] - gens[j].coords[i]);
        lambda[j] = l;
    }
    std::vector<std::vector<int>> t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            if (lambda[j] + gens[j].coords[i] == x.coords[i]) t[i].push_back(j);
    return t;
}

bool in_hull(const std::vector<std::vector<int>>& type) {
    for (const auto& ti : type)
        if (ti.empty()) return false;
    return true;
}

int type_dim(const std::vector<std::vector<int>>& type, int m) {
    // Components of the bipartite coordinate/generator incidence graph.
    int n = static_cast<int>(type.size());
    std::vector<int> parent(n + m);
    for (int i = 0; i < n + m; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j : type[i]) parent[find(i)] = find(n + j);
    int c = 0;
    for (int i = 0; i < n + m; ++i)
        if (find(i) == i) c++;
    return c - 1;
}

}  // namespace

std::vector<int> TropicalPolytope::f_vector() const {
    int d = 0;
    for (const Cell& c : cells) d = std::max(d, c.dim);
    std::vector<int> f(d + 1, 0);
    for (const Cell& c : cells) f[c.dim]++;
    return f;
}

bool TropicalPolytope::contains(const TropicalProjectivePoint& p) const {
    return in_hull(type_of(generators, p));
}

TropicalPolytope tconv_of_finite_set(const std::vector<TropicalProjectivePoint>& pts) {
    if (pts.empty()) throw Error("empty point set");
    TropicalPolytope tp;
    tp.generators = pts;
    int n = static_cast<int>(pts[0].coords.size());
    int m = static_cast<int>(pts.size());
    if (n * m > 60) throw TooLarge("too many points/coordinates for type enumeration");

    // Candidate pseudovertices: coordinates determined by chains of exact
    // differences p[j][i] - p[j][k] rooted at coordinate 0.
    std::set<std::vector<Rat>> candidates;
    std::vector<Rat> y(n);
    std::vector<bool> assigned(n, false);
    y[0] = Rat(0);
    assigned[0] = true;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            candidates.insert(y);
            return;
        }
        // extend from any assigned coordinate to the first unassigned one
        int i = 0;
        while (assigned[i]) ++i;
        for (int k = 0; k < n; ++k) {
            if (!assigned[k]) continue;
            for (int j = 0; j < m; ++j) {
                y[i] = y[k] + pts[j].coords[i] - pts[j].coords[k];
                assigned[i] = true;
                self(self, left - 1);
                assigned[i] = false;
            }
        }
    };
    rec(rec, n - 1);

    std::set<TropicalProjectivePoint> pvs;
    for (const auto& c : candidates) {
        TropicalProjectivePoint x = TropicalProjectivePoint::of(c);
        auto t = type_of(pts, x);
        if (in_hull(t) && type_dim(t, m) == 0) pvs.insert(x);
    }
    tp.pseudovertices.assign(pvs.begin(), pvs.end());

    // Cells: every bounded cell is an ordinary polytope whose vertex set is a
    // subset of the pseudovertices, so its barycenter realizes its type.
    // Enumerate barycenters of pseudovertex subsets and keep in-hull types.
    int p = static_cast<int>(tp.pseudovertices.size());
    if (p > 18) throw TooLarge("too many pseudovertices for cell enumeration");
    std::set<std::vector<std::vector<int>>> types;
    for (unsigned long mask = 1; mask < (1ul << p); ++mask) {
        std::vector<Rat> bary(n, Rat(0));
        int cnt = 0;
        for (int v = 0; v < p; ++v)
            if (mask & (1ul << v)) {
                for (int i = 0; i < n; ++i) bary[i] += tp.pseudovertices[v].coords[i];
                cnt++;
            }
        for (int i = 0; i < n; ++i) bary[i] /= Rat(cnt);
        TropicalProjectivePoint x = TropicalProjectivePoint::of(std::move(bary));
        auto t = type_of(pts, x);
        if (in_hull(t)) types.insert(std::move(t));
    }
    for (const auto& t : types) {
        TropicalPolytope::Cell cell;
        cell.type = t;
        cell.dim = type_dim(t, m);
        for (size_t v = 0; v < tp.pseudovertices.size(); ++v) {
            auto tv = type_of(pts, tp.pseudovertices[v]);
            bool contains_cell = true;
            for (int i = 0; i < n && contains_cell; ++i)
                if (!std::includes(tv[i].begin(), tv[i].end(), t[i].begin(), t[i].end()))
                    contains_cell = false;
            if (contains_cell) cell.vertices.push_back(static_cast<int>(v));
        }
        tp.cells.push_back(std::move(cell));
    }
    return tp;
}

// --- injectivity -----------------------------------------------------------

namespace {

struct SegmentData {
    std::vector<Rat> base;  // raw coordinate values at the tail
    std::vector<Rat> step;  // change over the full edge
    int edge;
    Rat len;
};

GraphPoint point_on(const MetricGraph& g, const SegmentData& s, const Rat& t) {
    return GraphPoint::on_edge(g, s.edge, t * s.len);
}

}  // namespace

VeryAmpleResult is_very_ample(GraphPtr g, const Divisor& d) {
    GeneratorSet gs = generating_set(g, d);
    if (gs.functions.empty()) throw Error("empty linear system");
    int n = static_cast<int>(gs.functions.size());

    std::vector<GraphPoint> cut_points;
    for (const PLFunction& f : gs.functions)
        for (const GraphPoint& p : f.corner_points())
            if (!p.at_vertex()) cut_points.push_back(p);
    Refinement r = refine_at(*g, cut_points);
    GraphPtr fine = std::make_shared<MetricGraph>(r.fine);
    std::vector<PLFunction> lifted;
    for (const PLFunction& f : gs.functions) lifted.push_back(lift_function(r, fine, f));

    std::vector<SegmentData> segs;
    for (int e = 0; e < fine->num_edges(); ++e) {
        SegmentData s;
        s.edge = e;
        s.len = fine->edge(e).length;
        for (const PLFunction& f : lifted) {
            s.base.push_back(f.vertex_value(fine->edge(e).u));
            s.step.push_back(f.on_edge(e).slope(0) * s.len);
        }
        segs.push_back(std::move(s));
    }

    VeryAmpleResult out;
    auto report = [&](const SegmentData& s1, const Rat& t, const SegmentData& s2, const Rat& u) {
        GraphPoint x = point_on(*fine, s1, t), y = point_on(*fine, s2, u);
        if (x == y) return false;
        out.collision = {r.to_base(*g, x), r.to_base(*g, y)};
        return true;
    };

    for (size_t a = 0; a < segs.size(); ++a) {
        for (size_t b = a; b < segs.size(); ++b) {
            const SegmentData &s1 = segs[a], &s2 = segs[b];
            // Solve base1 + t*step1 = base2 + u*step2 modulo all-ones:
            // compare coordinate differences against coordinate 0.
            std::vector<Rat> A, B, C;  // A*t + B*u = C per coordinate i >= 1
            for (int i = 1; i < n; ++i) {
                A.push_back(s1.step[i] - s1.step[0]);
                B.push_back(-(s2.step[i] - s2.step[0]));
                C.push_back((s2.base[i] - s2.base[0]) - (s1.base[i] - s1.base[0]));
            }
            // Row reduce the (n-1) x 2 system.
            int r1 = -1;
            for (int i = 0; i < n - 1; ++i)
                if (A[i] != 0 || B[i] != 0) {
                    r1 = i;
                    break;
                }
            if (r1 < 0) {
                // both segments collapsed: images are single points
                bool same = true;
                for (const Rat& c : C)
                    if (c != 0) same = false;
                if (!same) continue;
                if (a == b) {
                    if (report(s1, Rat(0), s2, Rat(1))) return out;
                } else {
                    if (report(s1, Rat(1, 3), s2, Rat(1, 2))) return out;
                    if (report(s1, Rat(1, 3), s2, Rat(1, 4))) return out;
                }
                continue;
            }
            int r2 = -1;
            for (int i = r1 + 1; i < n - 1; ++i)
                if (A[i] * B[r1] - A[r1] * B[i] != 0) {
                    r2 = i;
                    break;
                }
            if (r2 >= 0) {
                // unique candidate solution
                Rat det = A[r1] * B[r2] - A[r2] * B[r1];
                Rat t = (C[r1] * B[r2] - C[r2] * B[r1]) / det;
                Rat u = (A[r1] * C[r2] - A[r2] * C[r1]) / det;
                if (t < 0 || t > 1 || u < 0 || u > 1) continue;
                bool ok = true;
                for (int i = 0; i < n - 1; ++i)
                    if (A[i] * t + B[i] * u != C[i]) ok = false;
                if (!ok) continue;
                if (report(s1, t, s2, u)) return out;
            } else {
                // rank 1: a line of candidates
                bool consistent = true;
                for (int i = 0; i < n - 1; ++i)
                    if (A[i] * C[r1] != A[r1] * C[i] || B[i] * C[r1] != B[r1] * C[i] ||
                        A[i] * B[r1] != A[r1] * B[i])
                        consistent = false;
                if (!consistent) continue;
                Rat a1 = A[r1], b1 = B[r1], c1 = C[r1];
                // Enumerate a few candidate parameters in the unit square.
                std::vector<std::pair<Rat, Rat>> cands;
                auto push_t = [&](const Rat& t) {
                    if (b1 == 0) return;
                    Rat u = (c1 - a1 * t) / b1;
                    if (t >= 0 && t <= 1 && u >= 0 && u <= 1) cands.emplace_back(t, u);
                };
                auto push_u = [&](const Rat& u) {
                    if (a1 == 0) return;
                    Rat t = (c1 - b1 * u) / a1;
                    if (t >= 0 && t <= 1 && u >= 0 && u <= 1) cands.emplace_back(t, u);
                };
                for (int dnum = 0; dnum <= 4; ++dnum) {
                    push_t(Rat(dnum, 4));
                    push_u(Rat(dnum, 4));
                }
                for (auto& [t, u] : cands)
                    if (report(s1, t, s2, u)) return out;
            }
        }
    }
    out.very_ample = true;
    return out;
}

HyperellipticResult is_hyperelliptic(GraphPtr g, int level) {
    HyperellipticResult out;
    out.verified_level = level;
    if (g->genus() == 0) return out;

    Int scale = g->integral_scale();
    MetricGraph gs = g->scaled(Rat(scale));
    for (int k = 1; k <= level; ++k) {
        Refinement r = unit_refinement(gs, k);
        int nv = r.fine.num_vertices();
        // Candidate witnesses: pairs of subdivision points mapped back to g.
        std::vector<GraphPoint> pts;
        for (int v = 0; v < nv; ++v) {
            GraphPoint on_gs = r.to_base(gs, GraphPoint::vertex(v));
            if (on_gs.at_vertex())
                pts.push_back(on_gs);
            else
                pts.push_back(
                    GraphPoint::on_edge(*g, on_gs.edge_index(), on_gs.offset() / Rat(scale)));
        }
        for (int i = 0; i < nv; ++i)
            for (int j = i; j < nv; ++j) {
                Divisor cand = Divisor::at(pts[i]) + Divisor::at(pts[j]);
                if (rank(*g, cand) == 1) {
                    out.witness = cand;
                    return out;
                }
            }
    }
    return out;
}

}  // namespace trop
