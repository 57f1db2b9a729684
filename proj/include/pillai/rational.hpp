#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "pillai/errors.hpp"

namespace pillai {

// Exact arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical form we rely on everywhere: gcd(|num|, den) = 1 and den > 0.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigRat make_rat(BigInt num, BigInt den) {
    if (den == 0) {
        throw DomainError("zero_denominator", "rational number with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return BigRat(num, den);
}

inline bool is_integer(const BigRat& r) { return denominator(r) == 1; }

inline BigRat rat_pow(const BigRat& base, long long exp) {
    if (exp == 0) return BigRat(1);
    if (base == 0 && exp < 0) {
        throw DomainError("zero_denominator", "zero raised to a negative power");
    }
    unsigned long long e = exp < 0 ? static_cast<unsigned long long>(-exp)
                                   : static_cast<unsigned long long>(exp);
    BigInt n = boost::multiprecision::pow(numerator(base), static_cast<unsigned>(e));
    BigInt d = boost::multiprecision::pow(denominator(base), static_cast<unsigned>(e));
    return exp < 0 ? make_rat(d, n) : make_rat(n, d);
}

inline std::string to_string(const BigRat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/" + denominator(r).str();
    }
    return s;
}

}  // namespace pillai
