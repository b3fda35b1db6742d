#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sl2comod {

// Arbitrary-precision integers and exact rationals. All arithmetic in the
// library is exact; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

inline std::string to_string(const Int& a) { return a.str(); }

inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

}  // namespace sl2comod
