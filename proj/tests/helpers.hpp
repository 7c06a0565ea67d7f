#pragma once

#include <memory>
#include <string>
#include <vector>

#include "trop/graph.hpp"

namespace troptest {

using trop::GraphSpec;
using trop::MetricGraph;
using trop::Rat;

inline std::shared_ptr<const MetricGraph> make_graph(
    std::vector<std::string> vs,
    std::vector<std::tuple<std::string, std::string, std::string, Rat>> es) {
    GraphSpec spec;
    spec.vertices = std::move(vs);
    for (auto& [id, a, b, len] : es) spec.edges.push_back({id, a, b, len});
    return std::make_shared<MetricGraph>(trop::build_graph(spec));
}

inline std::shared_ptr<const MetricGraph> k4(Rat len = 1) {
    return make_graph({"v1", "v2", "v3", "v4"},
                      {{"e12", "v1", "v2", len},
                       {"e13", "v1", "v3", len},
                       {"e14", "v1", "v4", len},
                       {"e23", "v2", "v3", len},
                       {"e24", "v2", "v4", len},
                       {"e34", "v3", "v4", len}});
}

// Circle of circumference c realized as a single loop at one vertex.
inline std::shared_ptr<const MetricGraph> circle(Rat c = 1) {
    return make_graph({"v"}, {{"loop", "v", "v", c}});
}

inline std::shared_ptr<const MetricGraph> segment(Rat len = 1) {
    return make_graph({"u", "v"}, {{"e", "u", "v", len}});
}

// Two vertices joined by k parallel edges.
inline std::shared_ptr<const MetricGraph> banana(int k, Rat len = 1) {
    std::vector<std::tuple<std::string, std::string, std::string, Rat>> es;
    for (int i = 0; i < k; ++i) es.emplace_back("p" + std::to_string(i), "a", "b", len);
    return make_graph({"a", "b"}, es);
}

inline std::shared_ptr<const MetricGraph> theta(Rat l1 = 1, Rat l2 = 1, Rat l3 = 1) {
    return make_graph({"a", "b"},
                      {{"p0", "a", "b", l1}, {"p1", "a", "b", l2}, {"p2", "a", "b", l3}});
}

// Triangular prism: two triangles joined by a matching.
inline std::shared_ptr<const MetricGraph> prism(Rat len = 1) {
    return make_graph({"a1", "a2", "a3", "b1", "b2", "b3"},
                      {{"t1", "a1", "a2", len},
                       {"t2", "a2", "a3", len},
                       {"t3", "a3", "a1", len},
                       {"u1", "b1", "b2", len},
                       {"u2", "b2", "b3", len},
                       {"u3", "b3", "b1", len},
                       {"m1", "a1", "b1", len},
                       {"m2", "a2", "b2", len},
                       {"m3", "a3", "b3", len}});
}

}  // namespace troptest
