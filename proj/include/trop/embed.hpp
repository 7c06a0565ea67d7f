#pragma once

#include <optional>

#include "trop/cells.hpp"
#include "trop/plfunction.hpp"
#include "trop/simplicial.hpp"

namespace trop {

// Point of tropical projective space: coordinates modulo adding a common
// constant; stored with minimum coordinate 0.
struct TropicalProjectivePoint {
    std::vector<Rat> coords;

    static TropicalProjectivePoint of(std::vector<Rat> raw);

    friend bool operator==(const TropicalProjectivePoint&, const TropicalProjectivePoint&) = default;
    friend bool operator<(const TropicalProjectivePoint& a, const TropicalProjectivePoint& b) {
        return a.coords < b.coords;
    }
};

TropicalProjectivePoint evaluate_map(const std::vector<PLFunction>& fs, const GraphPoint& x);

// u(x)_i = coefficient of x in D + (f_i); throws NotBasePointFree when every
// coordinate is positive.
std::vector<Int> unbalanced_vector(const std::vector<PLFunction>& fs, const GraphPoint& x,
                                   const Divisor& d);

struct BasePointCheck {
    bool free = false;
    std::optional<GraphPoint> base_point;  // common point of all supports
};

BasePointCheck is_base_point_free(const std::vector<PLFunction>& fs, const Divisor& d);

// Balanced one-dimensional PL image with multiplicities; rays are symbolic.
struct EmbeddedCurve {
    int ambient = 0;  // number of coordinates
    struct Segment {
        TropicalProjectivePoint a, b;
        std::vector<Int> direction;  // primitive, for a -> b
        Int multiplicity;
    };
    struct Ray {
        TropicalProjectivePoint base;
        std::vector<Int> direction;  // primitive, nonpositive entries, max 0
        Int multiplicity;
    };
    std::vector<Segment> segments;
    std::vector<Ray> rays;
};

EmbeddedCurve balance(GraphPtr g, const std::vector<PLFunction>& fs, const Divisor& d);

// d with ray multiplicities summing to -d * (all-ones); throws Unbalanced.
Int curve_degree(const EmbeddedCurve& c);

// Type decomposition of the tropical convex hull (max-plus) of finitely many
// points; bounded cells only.
struct TropicalPolytope {
    std::vector<TropicalProjectivePoint> generators;
    std::vector<TropicalProjectivePoint> pseudovertices;
    struct Cell {
        std::vector<std::vector<int>> type;  // per coordinate: attaining generators
        std::vector<int> vertices;           // pseudovertex indices
        int dim = 0;
    };
    std::vector<Cell> cells;

    std::vector<int> f_vector() const;
    bool contains(const TropicalProjectivePoint& p) const;
};

TropicalPolytope tconv_of_finite_set(const std::vector<TropicalProjectivePoint>& pts);

struct VeryAmpleResult {
    bool very_ample = false;
    // Two distinct graph points with the same image when not injective.
    std::optional<std::pair<GraphPoint, GraphPoint>> collision;
};

VeryAmpleResult is_very_ample(GraphPtr g, const Divisor& d);

struct HyperellipticResult {
    std::optional<Divisor> witness;  // degree 2, rank 1 when found
    int verified_level = 0;          // subdivision depth searched
};

HyperellipticResult is_hyperelliptic(GraphPtr g, int level = 2);

}  // namespace trop
