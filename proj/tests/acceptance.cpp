// End-to-end checks, one summary line per criterion.
#include <cstdio>
#include <random>
#include <set>

#include "helpers.hpp"
#include "trop/embed.hpp"
#include "trop/json_io.hpp"
#include "trop/matroid.hpp"
#include "trop/picard.hpp"

using namespace trop;
using namespace troptest;

namespace {

int failures = 0;

void report(int n, const char* name, bool ok, const std::string& note = "") {
    std::printf("criterion %2d (%s): %s%s%s\n", n, name, ok ? "PASS" : "FAIL",
                note.empty() ? "" : " -- ", note.c_str());
    if (!ok) failures++;
}

template <typename F>
void criterion(int n, const char* name, F f) {
    bool ok = false;
    std::string note;
    try {
        ok = f();
    } catch (const std::exception& e) {
        note = e.what();
    }
    report(n, name, ok, note);
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Connected random multigraph within the given caps; loops allowed.
GraphPtr random_graph(std::mt19937& rng, int max_v, int max_e, int max_len) {
    int n = 2 + static_cast<int>(rng() % (max_v - 1));
    GraphSpec spec;
    for (int v = 0; v < n; ++v) spec.vertices.push_back("w" + std::to_string(v));
    auto len = [&] { return Rat(1 + static_cast<int>(rng() % max_len)); };
    int e = 0;
    for (int v = 1; v < n; ++v) {  // spanning tree
        int u = static_cast<int>(rng() % v);
        spec.edges.push_back({"e" + std::to_string(e++), spec.vertices[u], spec.vertices[v], len()});
    }
    int extra = static_cast<int>(rng() % (max_e - n + 2));
    for (int i = 0; i < extra && e < max_e; ++i) {
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        spec.edges.push_back({"e" + std::to_string(e++), spec.vertices[u], spec.vertices[v], len()});
    }
    return std::make_shared<MetricGraph>(build_graph(spec));
}

Divisor random_divisor(std::mt19937& rng, const MetricGraph& g, int max_abs_coeff,
                       bool allow_midpoints) {
    Divisor d;
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        Int c = static_cast<int>(rng() % (2 * max_abs_coeff + 1)) - max_abs_coeff;
        if (c == 0) continue;
        if (allow_midpoints && g.num_edges() > 0 && rng() % 3 == 0) {
            int e = static_cast<int>(rng() % g.num_edges());
            d.add(GraphPoint::on_edge(g, e, g.edge(e).length / 2), c);
        } else {
            d.add(GraphPoint::vertex(static_cast<int>(rng() % g.num_vertices())), c);
        }
    }
    return d;
}

bool c1_generators() {
    auto g = k4();
    GeneratorSet gs = generating_set(g, canonical_divisor(*g));
    int ext = 0;
    for (bool b : gs.extremal)
        if (b) ext++;
    return gs.functions.size() == 14 && ext == 7;
}

bool c2_cells() {
    auto g = k4();
    CellComplex cc = enumerate_cells(g, canonical_divisor(*g));
    if (cc.f_vector().empty() || cc.f_vector()[0] != 14) return false;
    std::vector<bool> is_face(cc.cells.size(), false);
    for (const auto& fl : cc.faces)
        for (int f : fl) is_face[f] = true;
    int triangles = 0, quads = 0;
    for (size_t i = 0; i < cc.cells.size(); ++i) {
        if (is_face[i]) continue;
        if (cc.cells[i].dim != 2) return false;
        int verts = 0;
        for (int f : cc.faces[i])
            if (cc.cells[f].dim == 0) verts++;
        if (verts == 3) triangles++;
        else if (verts == 4) quads++;
        else return false;
    }
    return triangles == 12 && quads == 3;
}

bool c3_petersen() {
    auto g1 = k4();
    auto g2 = make_graph({"v1", "v2", "v3", "v4"},
                         {{"e12", "v1", "v2", Rat(1, 2)},
                          {"e13", "v1", "v3", 2},
                          {"e14", "v1", "v4", Rat(7, 3)},
                          {"e23", "v2", "v3", 1},
                          {"e24", "v2", "v4", Rat(3, 5)},
                          {"e34", "v3", "v4", 4}});
    SimplicialComplex l1 = link_fine_subdivision(g1, canonical_divisor(*g1));
    SimplicialComplex l2 = link_fine_subdivision(g2, canonical_divisor(*g2));
    if (!complexes_isomorphic(l1, l2)) return false;
    MultiGraph s1 = suppress_degree_two(one_skeleton(l1));
    MultiGraph s2 = suppress_degree_two(one_skeleton(l2));
    return multigraphs_isomorphic(s1, petersen_graph()) &&
           multigraphs_isomorphic(s2, petersen_graph());
}

bool c4_circle() {
    auto g = circle(1);
    CellComplex c3 = enumerate_cells(g, Divisor::at(GraphPoint::vertex(0), 3));
    if (c3.f_vector() != std::vector<int>{4, 5, 2}) return false;
    for (int d = 3; d <= 6; ++d) {
        Divisor dv = Divisor::at(GraphPoint::vertex(0), d);
        CellComplex cc = enumerate_cells(g, dv);
        int apex = -1;
        for (int i : cc.zero_cells())
            if (zero_cell_divisor(cc, i) == divisor_to_fine(*g, cc.refinement, dv)) apex = i;
        if (apex < 0) return false;
        std::vector<int> away(d, 0);
        for (size_t i = 0; i < cc.cells.size(); ++i) {
            if (static_cast<int>(i) == apex) continue;
            bool cone = false;
            for (int f : cc.faces[i])
                if (f == apex) cone = true;
            if (!cone) away[cc.cells[i].dim]++;
        }
        for (int i = 0; i < d; ++i)
            if (away[i] != (i + 1) * binom(d, i + 2)) return false;
    }
    return true;
}

bool c5_simplex() {
    auto g = segment();
    for (int d = 1; d <= 5; ++d) {
        CellComplex cc = enumerate_cells(g, Divisor::at(GraphPoint::vertex(1), d));
        std::vector<int> f = cc.f_vector();
        if (static_cast<int>(f.size()) != d + 1) return false;
        for (int i = 0; i <= d; ++i)
            if (f[i] != binom(d + 1, i + 1)) return false;
    }
    return true;
}

bool c6_riemann_roch() {
    std::mt19937 rng(20260824);
    int done = 0;
    while (done < 20) {
        auto g = random_graph(rng, 4, 6, 2);
        Divisor d = random_divisor(rng, *g, 3, true);
        if (d.degree() > 6 || d.degree() < -6) continue;
        Divisor k = canonical_divisor(*g);
        if (k.degree() - d.degree() > 6) continue;  // keep both ranks tractable
        int genus = g->genus();
        int r1 = rank(*g, d);
        int r2 = rank(*g, k - d);
        if (Int(r1 - r2) != d.degree() + 1 - genus) return false;
        done++;
    }
    return true;
}

bool c7_degree() {
    // worked example: claw tree, degree-1 divisor -> tropical line
    {
        auto g = make_graph({"c", "v1", "v2", "v3"},
                            {{"l1", "c", "v1", 1}, {"l2", "c", "v2", 1}, {"l3", "c", "v3", 1}});
        std::vector<PLFunction> fs = {PLFunction::interpolate(g, {0, -1, 0, 0}),
                                      PLFunction::interpolate(g, {0, 0, -1, 0}),
                                      PLFunction::interpolate(g, {0, 0, 0, -1})};
        Divisor d = Divisor::at(GraphPoint::vertex(0));
        if (curve_degree(balance(g, fs, d)) != 1) return false;
    }
    // worked example: K4 onto the simplex skeleton, degree = deg K
    {
        auto g = k4();
        Divisor k = canonical_divisor(*g);
        std::vector<PLFunction> fs;
        for (int i = 0; i < 4; ++i) {
            std::vector<Rat> vals(4, Rat(0));
            vals[i] = Rat(-1);
            fs.push_back(PLFunction::interpolate(g, vals));
        }
        if (Int(curve_degree(balance(g, fs, k))) != k.degree()) return false;
    }
    // worked example: the non-injective K4 map has degree 4
    {
        auto g = k4();
        Divisor k = canonical_divisor(*g);
        std::vector<PLFunction> fs;
        int pair[3][2] = {{1, 2}, {0, 2}, {0, 1}};
        const char* eid[3] = {"e14", "e24", "e34"};
        for (int i = 0; i < 3; ++i) {
            GraphPoint u = GraphPoint::on_edge(*g, *g->find_edge(eid[i]), Rat(1, 2));
            Divisor t = Divisor::at(u, 2) + Divisor::at(GraphPoint::vertex(pair[i][0])) +
                        Divisor::at(GraphPoint::vertex(pair[i][1]));
            auto f = is_linearly_equivalent(g, k, t);
            if (!f) return false;
            fs.push_back(*f);
        }
        if (curve_degree(balance(g, fs, k)) != 4) return false;
    }
    // random base-point-free instances
    std::mt19937 rng(7);
    int done = 0, tries = 0;
    while (done < 20 && tries < 400) {
        tries++;
        auto g = random_graph(rng, 3, 4, 2);
        Divisor d;
        int deg = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < deg; ++i)
            d.add(GraphPoint::vertex(static_cast<int>(rng() % g->num_vertices())), 1);
        GeneratorSet gs = generating_set(g, d);
        if (gs.functions.empty() || !is_base_point_free(gs.functions, d).free) continue;
        if (Int(curve_degree(balance(g, gs.functions, d))) != d.degree()) return false;
        done++;
    }
    return done >= 20;
}

bool c8_very_ample() {
    auto b = banana(3);
    VeryAmpleResult vb = is_very_ample(b, canonical_divisor(*b));
    if (vb.very_ample || !vb.collision) return false;
    auto hb = is_hyperelliptic(b);
    Divisor expect = Divisor::at(GraphPoint::vertex(0)) + Divisor::at(GraphPoint::vertex(1));
    if (!hb.witness || !(*hb.witness == expect)) return false;

    std::mt19937 rng(11);
    int done = 0, tries = 0;
    while (done < 10 && tries < 100) {
        tries++;
        auto g = random_graph(rng, 3, 4, 2);
        int deg = 2 * g->genus() + 1;
        Divisor d;
        for (int i = 0; i < deg; ++i)
            d.add(GraphPoint::vertex(static_cast<int>(rng() % g->num_vertices())), 1);
        if (!is_very_ample(g, d).very_ample) return false;
        done++;
    }
    return done >= 10;
}

bool c9_critical_groups() {
    for (int k = 2; k <= 8; ++k) {
        auto model = subdivision_model(circle(k), 1);
        CriticalGroup cg = critical_group(model.fine, 0);
        if (cg.factors != std::vector<Int>{k}) return false;
        if (cg.order != spanning_tree_count(*model.fine)) return false;
    }
    auto b = banana(3);
    for (int k = 1; k <= 4; ++k) {  // k interior vertices per edge
        auto model = subdivision_model(b, k + 1);
        CriticalGroup cg = critical_group(model.fine, 0);
        if (cg.factors != std::vector<Int>{k + 1, 3 * k + 3}) return false;
        if (cg.order != spanning_tree_count(*model.fine)) return false;
    }
    return true;
}

bool c10_transition_emulation() {
    auto c3 = circle(3);
    auto m1 = subdivision_model(c3, 1);
    for (const auto& c : superstables(*m1.fine, 0)) {
        if (transition_map(c3, 1, 4, c) !=
            transition_map(c3, 2, 4, transition_map(c3, 1, 2, c)))
            return false;
    }
    // emulation vs re-indexed plain firing
    auto check = [](GraphPtr base, int k2, int v, VertexDivisor c) {
        auto m1 = subdivision_model(base, 1);
        auto m2 = subdivision_model(base, k2);
        FiringEmulation em = emulate_vertex_firing(base, 1, k2, v, c);
        VertexDivisor fired = emulate_vertex_firing(base, 1, 1, v, c).result;
        VertexDivisor expect(m2.fine->num_vertices(), Int(0));
        for (int w = 0; w < m1.fine->num_vertices(); ++w) {
            if (fired[w] == 0) continue;
            GraphPoint p =
                m2.refinement.to_fine(*base, m1.refinement.to_base(*base, GraphPoint::vertex(w)));
            expect[p.vertex_index()] += fired[w];
        }
        return em.result == expect;
    };
    VertexDivisor cc3(3, Int(0));
    cc3[0] = 2;
    if (!check(c3, 2, 0, cc3)) return false;
    auto b = banana(3);
    VertexDivisor cb(2, Int(0));
    cb[0] = 3;
    return check(b, 2, 0, cb);
}

bool c11_decomposition() {
    std::mt19937 rng(23);
    for (int it = 0; it < 100; ++it) {
        auto base = random_graph(rng, 4, 6, 1);
        auto model = subdivision_model(base, 2);
        GraphPtr g = model.fine;
        std::vector<Rat> vals;
        for (int v = 0; v < g->num_vertices(); ++v)
            vals.push_back(Rat(static_cast<int>(rng() % 7) - 3, 2));
        PLFunction f = PLFunction::interpolate(g, vals);
        auto moves = decompose_function(f);
        PLFunction acc = PLFunction::constant(g, f.max_over_graph());
        for (const auto& m : moves) {
            acc = acc + m.f.add_const(-m.high_value);
            // each weighted move splits into unit moves summing back to it
            std::vector<PLFunction> simple = decompose_weighted_move(m);
            PLFunction macc = PLFunction::constant(g, m.high_value);
            for (const auto& s : simple) macc = macc + s;
            if (!(macc == m.f)) return false;
        }
        if (!(acc == f)) return false;
    }
    return true;
}

bool c12_bergman() {
    auto g = k4();
    BergmanEmbedding ek = link_contains_bergman(g, link_fine_subdivision(g, canonical_divisor(*g)),
                                                bergman_complex(cographic_matroid(g)));
    if (!ek.contained || !ek.equal) return false;

    auto p = prism();
    SimplicialComplex link = link_fine_subdivision(p, canonical_divisor(*p));
    BergmanEmbedding ep = link_contains_bergman(p, link, bergman_complex(cographic_matroid(p)));
    if (!ep.contained || ep.equal || ep.extra_link_vertices.empty()) return false;
    // the extra poset elements fire subgraphs that are not unions of circuits
    FiringPoset poset = firing_poset(p, canonical_divisor(*p));
    CographicMatroid m = cographic_matroid(p);
    for (int v : ep.extra_link_vertices) {
        std::set<int> complement;
        for (int e = 0; e < p->num_edges(); ++e)
            if (!poset.elements[v].edges.count(e)) complement.insert(e);
        bool unit_weights = true;
        for (const auto& [slot, w] : poset.elements[v].weights)
            if (w != 1) unit_weights = false;
        // a unit-weight element over the complement of a proper flat would have
        // been a Bergman vertex, not an extra one
        if (unit_weights && !complement.empty() &&
            static_cast<int>(complement.size()) < p->num_edges() && m.is_flat(complement))
            return false;
    }
    return true;
}

bool c13_semimodule() {
    std::mt19937 rng(31);
    int pairs_checked = 0, rounds = 0;
    while (pairs_checked < 50 && ++rounds < 1000) {
        auto g = random_graph(rng, 3, 4, 2);
        Divisor d;
        int deg = 2 + static_cast<int>(rng() % 3);
        for (int i = 0; i < deg; ++i)
            d.add(GraphPoint::vertex(static_cast<int>(rng() % g->num_vertices())), 1);
        GeneratorSet gs = generating_set(g, d);
        if (gs.functions.size() < 2) continue;
        auto pick = [&] {
            Rat c(static_cast<int>(rng() % 5) - 2);
            std::vector<std::pair<Rat, PLFunction>> terms;
            size_t n = gs.functions.size();
            for (size_t i = 0; i < n; ++i)
                if (rng() % 2) terms.emplace_back(Rat(static_cast<int>(rng() % 3)), gs.functions[i]);
            if (terms.empty()) terms.emplace_back(Rat(0), gs.functions[rng() % n]);
            return tropical_combine(terms).add_const(c);
        };
        PLFunction f = pick(), h = pick(), e = pick();
        // semimodule laws
        if (!(PLFunction::pointwise_max(f, f) == f)) return false;
        if (!(PLFunction::pointwise_max(f, h) == PLFunction::pointwise_max(h, f))) return false;
        PLFunction l = PLFunction::pointwise_max(PLFunction::pointwise_max(f, h), e);
        PLFunction r = PLFunction::pointwise_max(f, PLFunction::pointwise_max(h, e));
        if (!(l == r)) return false;
        Rat c(2);
        if (!(PLFunction::pointwise_max(f.add_const(c), h.add_const(c)) ==
              PLFunction::pointwise_max(f, h).add_const(c)))
            return false;
        // closure under the tropical operations
        if (!(d + PLFunction::pointwise_max(f, h).divisor()).effective()) return false;

        // no ordinary convex segment: distinct classes have a slope gap, so
        // t*f + (1-t)*h leaves the integer-slope space for t = 1/p, p prime
        // beyond every slope difference
        if (PLFunction::equal_mod_const(f, h)) continue;
        PLFunction diff = f - h;
        Int max_gap = 0;
        for (int ed = 0; ed < g->num_edges(); ++ed) {
            const PL1D& pl = diff.on_edge(ed);
            for (int i = 0; i + 1 < static_cast<int>(pl.pts.size()); ++i) {
                Int s = num(pl.slope(i));
                if (s < 0) s = -s;
                if (s > max_gap) max_gap = s;
            }
        }
        if (max_gap == 0) return false;  // nonconstant difference must bend
        pairs_checked++;
    }
    return pairs_checked >= 50;
}

}  // namespace

int main() {
    criterion(1, "K4 generators and extremals", c1_generators);
    criterion(2, "K4 cell complex shape", c2_cells);
    criterion(3, "K4 link is subdivided Petersen", c3_petersen);
    criterion(4, "circle f-vectors and cone structure", c4_circle);
    criterion(5, "segment gives a simplex", c5_simplex);
    criterion(6, "Riemann-Roch on random graphs", c6_riemann_roch);
    criterion(7, "degree of the balanced curve", c7_degree);
    criterion(8, "very ampleness and hyperellipticity", c8_very_ample);
    criterion(9, "critical groups of subdivisions", c9_critical_groups);
    criterion(10, "transition maps and firing emulation", c10_transition_emulation);
    criterion(11, "chip-firing decompositions reassemble", c11_decomposition);
    criterion(12, "Bergman complex containment", c12_bergman);
    criterion(13, "semimodule laws and non-convexity", c13_semimodule);
    return failures == 0 ? 0 : 1;
}
