#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hexlap {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow_big(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

inline Rational pow_rat(const Rational& base, unsigned exponent) {
    Rational r = 1;
    for (unsigned i = 0; i < exponent; ++i) r *= base;
    return r;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// log10 of a positive big integer, accurate to double precision even when the
// value itself overflows a double.
double log10_big(const BigInt& v);

} // namespace hexlap
