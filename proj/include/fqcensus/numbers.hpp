#pragma once

// Exact arbitrary-precision carriers for all counts and densities.
// No floating point is used anywhere in the counting pipeline.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace fqcensus {

// Nonnegative exact integer count.
using BigCount = boost::multiprecision::cpp_int;

// Exact rational in canonical reduced form (cpp_rational normalizes
// automatically; denominator is always positive).
using ExactRational = boost::multiprecision::cpp_rational;

inline BigCount big_pow(const BigCount& base, std::uint64_t exp) {
    BigCount r = 1, b = base;
    while (exp != 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

inline std::string dec_string(const BigCount& v) { return v.str(); }

// Serialized as "num/den" even for integers ("1/1"), so consumers never
// have to special-case whole values.
inline std::string rational_string(const ExactRational& v) {
    return boost::multiprecision::numerator(v).str() + "/" +
           boost::multiprecision::denominator(v).str();
}

}  // namespace fqcensus
