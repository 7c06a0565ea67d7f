#pragma once

#include <map>
#include <vector>

#include "trop/graph.hpp"

namespace trop {

// Finite integer-weighted sum of graph points (a chip configuration when
// effective).  Zero coefficients are never stored.
class Divisor {
public:
    Divisor() = default;
    explicit Divisor(std::map<GraphPoint, Int> coeffs);

    static Divisor at(const GraphPoint& p, Int c = 1);

    Int degree() const;
    bool effective() const;
    bool is_zero() const { return coeffs_.empty(); }
    Int coeff(const GraphPoint& p) const;
    std::vector<GraphPoint> support() const;
    const std::map<GraphPoint, Int>& coeffs() const { return coeffs_; }

    void add(const GraphPoint& p, const Int& c);
    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    Divisor operator-() const;

    friend bool operator==(const Divisor&, const Divisor&) = default;
    friend auto operator<=>(const Divisor& a, const Divisor& b) { return a.coeffs_ <=> b.coeffs_; }

    std::string describe(const MetricGraph& g) const;

private:
    std::map<GraphPoint, Int> coeffs_;
};

// K = sum over non-smooth points of (val(x) - 2) * x.
Divisor canonical_divisor(const MetricGraph& g);

}  // namespace trop
