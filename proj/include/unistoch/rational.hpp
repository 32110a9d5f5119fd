#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace unistoch {

// Exact scalar types. Every moment, character sum and Weingarten value in
// this library is computed over these; doubles appear only in the sampler
// and spectra modules.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// (2n-1)!! = 1*3*5*...*(2n-1); the number of perfect matchings of 2n points.
inline BigInt double_factorial_odd(int n) {
    BigInt r = 1;
    for (int i = 3; i <= 2 * n - 1; i += 2) r *= i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

inline bool is_nonneg_integer(const Rational& q) {
    return q >= 0 && denominator(q) == 1;
}

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace unistoch
