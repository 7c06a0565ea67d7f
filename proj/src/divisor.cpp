#include "trop/divisor.hpp"

#include <sstream>

namespace trop {

Divisor::Divisor(std::map<GraphPoint, Int> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

Divisor Divisor::at(const GraphPoint& p, Int c) {
    Divisor d;
    d.add(p, c);
    return d;
}

Int Divisor::degree() const {
    Int s = 0;
    for (auto& [p, c] : coeffs_) s += c;
    return s;
}

bool Divisor::effective() const {
    for (auto& [p, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

Int Divisor::coeff(const GraphPoint& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? Int(0) : it->second;
}

std::vector<GraphPoint> Divisor::support() const {
    std::vector<GraphPoint> pts;
    pts.reserve(coeffs_.size());
    for (auto& [p, c] : coeffs_) pts.push_back(p);
    return pts;
}

void Divisor::add(const GraphPoint& p, const Int& c) {
    auto [it, inserted] = coeffs_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    } else if (c == 0) {
        coeffs_.erase(it);
    }
}

Divisor Divisor::operator+(const Divisor& o) const {
    Divisor r = *this;
    for (auto& [p, c] : o.coeffs_) r.add(p, c);
    return r;
}

Divisor Divisor::operator-(const Divisor& o) const {
    Divisor r = *this;
    for (auto& [p, c] : o.coeffs_) r.add(p, -c);
    return r;
}

Divisor Divisor::operator-() const {
    Divisor r;
    for (auto& [p, c] : coeffs_) r.coeffs_.emplace(p, -c);
    return r;
}

std::string Divisor::describe(const MetricGraph& g) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c.str() << "*";
        os << p.describe(g);
    }
    return os.str();
}

Divisor canonical_divisor(const MetricGraph& g) {
    Divisor k;
    for (int v = 0; v < g.num_vertices(); ++v) {
        int d = g.degree(v);
        if (d != 2) k.add(GraphPoint::vertex(v), d - 2);
    }
    return k;
}

}  // namespace trop
