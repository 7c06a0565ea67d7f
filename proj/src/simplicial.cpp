#include "trop/simplicial.hpp"

#include <algorithm>
#include <map>

namespace trop {

void SimplicialComplex::add_simplex(std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) return;
    for (int v : s) num_vertices = std::max(num_vertices, v + 1);
    // Insert with all faces.
    int k = static_cast<int>(s.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
        std::vector<int> face;
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) face.push_back(s[i]);
        simplices.insert(std::move(face));
    }
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& s : simplices) d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
}

std::vector<int> SimplicialComplex::f_vector() const {
    std::vector<int> f(dimension() + 1, 0);
    for (const auto& s : simplices) f[s.size() - 1]++;
    return f;
}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
    std::vector<std::vector<int>> out;
    for (const auto& s : simplices) {
        bool maximal = true;
        for (const auto& t : simplices) {
            if (t.size() <= s.size()) continue;
            if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

bool SimplicialComplex::is_pure() const {
    auto fs = facets();
    for (const auto& f : fs)
        if (f.size() != fs.front().size()) return false;
    return true;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (const auto& s : simplices) chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

SimplicialComplex order_complex(const std::vector<std::vector<bool>>& less) {
    int n = static_cast<int>(less.size());
    SimplicialComplex c;
    c.num_vertices = n;
    std::vector<int> chain;
    // DFS over chains extending by strictly greater elements.
    auto extend = [&](auto&& self, int last) -> void {
        std::vector<int> sorted = chain;
        std::sort(sorted.begin(), sorted.end());
        c.simplices.insert(std::move(sorted));
        for (int j = 0; j < n; ++j) {
            if (!less[last][j]) continue;
            chain.push_back(j);
            self(self, j);
            chain.pop_back();
        }
    };
    for (int i = 0; i < n; ++i) {
        chain = {i};
        extend(extend, i);
    }
    return c;
}

MultiGraph one_skeleton(const SimplicialComplex& c) {
    MultiGraph g;
    g.n = c.num_vertices;
    for (const auto& s : c.simplices)
        if (s.size() == 2) g.edges.emplace_back(s[0], s[1]);
    return g;
}

MultiGraph suppress_degree_two(const MultiGraph& g0) {
    // Work on a mutable edge list; repeatedly splice out a degree-2 vertex
    // that is not carrying a loop.
    std::vector<std::pair<int, int>> edges = g0.edges;
    int n = g0.n;
    while (true) {
        std::vector<std::vector<int>> inc(n);
        for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
            inc[edges[i].first].push_back(i);
            if (edges[i].second != edges[i].first) inc[edges[i].second].push_back(i);
        }
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v) {
            if (inc[v].size() != 2) continue;
            int e1 = inc[v][0], e2 = inc[v][1];
            if (e1 == e2) continue;  // loop vertex, leave alone
            pick = v;
        }
        if (pick < 0) break;
        int e1 = inc[pick][0], e2 = inc[pick][1];
        int a = edges[e1].first == pick ? edges[e1].second : edges[e1].first;
        int b = edges[e2].first == pick ? edges[e2].second : edges[e2].first;
        std::vector<std::pair<int, int>> next;
        for (int i = 0; i < static_cast<int>(edges.size()); ++i)
            if (i != e1 && i != e2) next.push_back(edges[i]);
        next.emplace_back(std::min(a, b), std::max(a, b));
        edges = std::move(next);
    }
    // Drop isolated vertices, compacting indices.
    std::vector<int> remap(n, -1);
    std::vector<bool> live(n, false);
    for (auto& [a, b] : edges) live[a] = live[b] = true;
    int m = 0;
    for (int v = 0; v < n; ++v)
        if (live[v]) remap[v] = m++;
    MultiGraph out;
    out.n = m;
    for (auto& [a, b] : edges) out.edges.emplace_back(remap[a], remap[b]);
    return out;
}

namespace {

std::vector<std::vector<int>> adjacency_counts(const MultiGraph& g) {
    std::vector<std::vector<int>> a(g.n, std::vector<int>(g.n, 0));
    for (auto& [u, v] : g.edges) {
        a[u][v]++;
        if (u != v) a[v][u]++;
    }
    return a;
}

bool iso_backtrack(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
                   std::vector<int>& map_ab, std::vector<bool>& used, int i) {
    int n = static_cast<int>(a.size());
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
        if (used[j]) continue;
        bool ok = a[i][i] == b[j][j];
        for (int k = 0; ok && k < i; ++k)
            if (a[i][k] != b[j][map_ab[k]]) ok = false;
        if (!ok) continue;
        map_ab[i] = j;
        used[j] = true;
        if (iso_backtrack(a, b, map_ab, used, i + 1)) return true;
        used[j] = false;
    }
    return false;
}

}  // namespace

bool multigraphs_isomorphic(const MultiGraph& ga, const MultiGraph& gb) {
    if (ga.n != gb.n || ga.edges.size() != gb.edges.size()) return false;
    auto a = adjacency_counts(ga);
    auto b = adjacency_counts(gb);
    auto degs = [](const std::vector<std::vector<int>>& m) {
        std::vector<int> d;
        for (size_t i = 0; i < m.size(); ++i) {
            int s = m[i][i];  // loops count twice
            for (size_t j = 0; j < m.size(); ++j) s += m[i][j];
            d.push_back(s);
        }
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b)) return false;
    std::vector<int> map_ab(ga.n, -1);
    std::vector<bool> used(ga.n, false);
    return iso_backtrack(a, b, map_ab, used, 0);
}

MultiGraph petersen_graph() {
    MultiGraph g;
    g.n = 10;
    // Outer 5-cycle 0..4, inner 5-cycle 5..9 with step 2, spokes i -- i+5.
    for (int i = 0; i < 5; ++i) {
        g.edges.emplace_back(i, (i + 1) % 5);
        g.edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        g.edges.emplace_back(i, 5 + i);
    }
    return g;
}

namespace {

bool complex_iso_backtrack(const SimplicialComplex& a, const SimplicialComplex& b,
                           std::vector<int>& map_ab, std::vector<bool>& used, int i) {
    int n = a.num_vertices;
    if (i == n) {
        for (const auto& s : a.simplices) {
            std::vector<int> t;
            for (int v : s) t.push_back(map_ab[v]);
            std::sort(t.begin(), t.end());
            if (!b.simplices.count(t)) return false;
        }
        return true;
    }
    for (int j = 0; j < n; ++j) {
        if (used[j]) continue;
        // Quick consistency: mapped sub-simplices among assigned vertices.
        map_ab[i] = j;
        bool ok = true;
        for (const auto& s : a.simplices) {
            if (s.size() > 3) continue;  // full check happens at the leaf
            bool all_assigned = true;
            for (int v : s)
                if (v > i) all_assigned = false;
            if (!all_assigned) continue;
            std::vector<int> t;
            for (int v : s) t.push_back(map_ab[v]);
            std::sort(t.begin(), t.end());
            if (!b.simplices.count(t)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        used[j] = true;
        if (complex_iso_backtrack(a, b, map_ab, used, i + 1)) return true;
        used[j] = false;
    }
    return false;
}

}  // namespace

bool complexes_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.num_vertices != b.num_vertices) return false;
    if (a.f_vector() != b.f_vector()) return false;
    std::vector<int> map_ab(a.num_vertices, -1);
    std::vector<bool> used(a.num_vertices, false);
    return complex_iso_backtrack(a, b, map_ab, used, 0);
}

}  // namespace trop
