#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_int/literals.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trop {

// Expression templates off: values behave like plain numeric types.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

// Parses "p/q" or "p"; q must be positive.
inline Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash)), q(s.substr(slash + 1));
    if (q <= 0) throw std::invalid_argument("rational denominator must be positive: " + s);
    return Rat(p, q);
}

inline std::string format_rational(const Rat& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline int to_int(const Int& v) {
    if (v > INT32_MAX || v < INT32_MIN) throw std::overflow_error("integer out of int range");
    return static_cast<int>(v);
}

}  // namespace trop
