#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wmas {

/// Exact arbitrary-precision integer used for every count in the library.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// 10^k as a BigInt.
inline BigInt pow10(unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= 10;
    return r;
}

inline BigInt ipow(const BigInt& base, unsigned exp) {
    BigInt r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace wmas
