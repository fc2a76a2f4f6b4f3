#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational ratio(long long p, long long q) { return Rational(BigInt(p), BigInt(q)); }

inline BigInt pow_int(BigInt base, int e) {
    BigInt r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// base^e for any integer e; negative exponents invert.
inline Rational pow_rat(const Rational& base, int e) {
    if (e >= 0) return Rational(pow_int(num(base), e), pow_int(den(base), e));
    return Rational(pow_int(den(base), -e), pow_int(num(base), -e));
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

// Smallest integer >= r.
inline BigInt ceil_div(const Rational& r) {
    BigInt q = num(r) / den(r);
    if (q * den(r) < num(r)) ++q;
    return q;
}

} // namespace tlab
