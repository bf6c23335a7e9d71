#pragma once

// Exact arbitrary-precision integers and rationals. Everything downstream
// (hull construction, face forms, semigroup membership) is exact; there is
// no floating point anywhere in this library.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace bsr {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using QVec = std::vector<Rational>;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

// floor(a/b) for b > 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;  // truncates toward zero
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int rational_floor(const Rational& q) { return floor_div(num(q), den(q)); }
inline Int rational_ceil(const Rational& q) { return ceil_div(num(q), den(q)); }

// Smallest positive integer m with m*v integral.
inline Int lcm_of_denominators(const QVec& v) {
    if (v.empty()) throw InputError("lcm_of_denominators: empty vector");
    Int m = 1;
    for (const Rational& q : v) m = lcm(m, den(q));
    return m;
}

// Lowest-terms text form: "-p/q", or "-p" when q == 1.
inline std::string format_rational(const Rational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

inline std::string format_int_vec(const IntVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

inline std::string format_q_vec(const QVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += format_rational(v[i]);
    }
    return s + ")";
}

// Parses "p", "-p", "p/q" with q > 0 after normalization.
Rational parse_rational(const std::string& text);

} // namespace bsr
