#pragma once

// Exact integer arithmetic used throughout the library. Occurrence counts
// overflow 64 bits already for moderate word lengths (binom(68,34) does),
// so every count is an arbitrary-precision integer.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace subword {

using OccCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// log2 of a positive big integer, accurate to ~1 ulp of the double result.
inline double log2_big(const OccCount& v) {
    if (v <= 0)
        throw std::domain_error("log2_big: argument must be positive");
    const std::size_t bits = boost::multiprecision::msb(v) + 1;
    if (bits <= 62)
        return std::log2(v.convert_to<double>());
    const unsigned shift = static_cast<unsigned>(bits - 62);
    const OccCount top = v >> shift;
    return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

inline double to_double(const BigRational& q) {
    return q.convert_to<double>();
}

inline std::string to_decimal(const OccCount& v) {
    return v.str();
}

inline OccCount parse_decimal(const std::string& s) {
    return OccCount(s);
}

} // namespace subword
