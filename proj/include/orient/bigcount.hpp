#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <string>

namespace orient {

// Exact nonnegative counts. All counting stays in integer arithmetic;
// logarithms are taken only at the reporting layer.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount pow2_big(long long e) {
    BigCount one = 1;
    return one << e;
}

// Binomial coefficient; out-of-range arguments give 0.
inline BigCount binomial_big(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline double log2_big(const BigCount& x) {
    if (x == 0) return -std::numeric_limits<double>::infinity();
    unsigned msb = boost::multiprecision::msb(x);
    if (msb <= 60) return std::log2(x.convert_to<double>());
    BigCount top = x >> (msb - 52);
    return std::log2(top.convert_to<double>()) + double(msb - 52);
}

inline std::string to_decimal(const BigCount& x) { return x.str(); }

} // namespace orient
