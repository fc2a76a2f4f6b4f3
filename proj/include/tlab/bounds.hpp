#pragma once

// Closed-form upper bounds Phi_i(s,t) and the boundary values, exact.

#include <optional>
#include <string>

#include "tlab/error.hpp"
#include "tlab/rational.hpp"
#include "tlab/types.hpp"

namespace tlab {

struct BoundQuery {
    FormulaType type = FormulaType::T0;
    int s = 0;
    int t = 0;
};

// Coefficient c with Phi = c * (2/3)^e(s) * 3^t, e(s) = floor(s/2).
inline Rational phi_coefficient(FormulaType type, bool odd) {
    static const Rational even_c[] = {Rational(1),      Rational(5, 6),  Rational(2, 3),
                                      Rational(25, 36), Rational(7, 12), Rational(7, 12)};
    static const Rational odd_c[] = {Rational(7, 9), Rational(2, 3), Rational(5, 9),
                                     Rational(5, 9), Rational(1, 2), Rational(17, 36)};
    return odd ? odd_c[static_cast<int>(type)] : even_c[static_cast<int>(type)];
}

inline int two_thirds_exponent(int s) { return s % 2 == 0 ? s / 2 : (s - 1) / 2; }

// c * (2/3)^floor(s/2) * 3^t without the validity check; the rule-table audit
// needs it at arbitrary s.
inline Rational phi_formula(FormulaType type, int s, int t) {
    const bool odd = (s % 2) != 0;
    return phi_coefficient(type, odd) * pow_rat(Rational(2, 3), two_thirds_exponent(s)) * Rational(pow_int(3, t));
}

inline bool phi_in_validity(int s, int t) { return t >= 1 && s >= 0 && s <= t; }

inline Rational phi_upper(const BoundQuery& q) {
    if (!phi_in_validity(q.s, q.t))
        throw Error(Errc::OutOfValidity, std::string("phi_upper(") + type_name(q.type) + ", s=" + std::to_string(q.s) +
                                             ", t=" + std::to_string(q.t) + ") needs t >= 1 and 0 <= s <= t");
    return phi_formula(q.type, q.s, q.t);
}

enum class Boundary { SLe0, S2tMinus2, S2tMinus1, S2t };

inline const char* boundary_name(Boundary b) {
    switch (b) {
    case Boundary::SLe0: return "s_le_0";
    case Boundary::S2tMinus2: return "s_eq_2t_minus_2";
    case Boundary::S2tMinus1: return "s_eq_2t_minus_1";
    case Boundary::S2t: return "s_eq_2t";
    }
    return "?";
}

inline std::optional<Boundary> parse_boundary(const std::string& s) {
    for (Boundary b : {Boundary::SLe0, Boundary::S2tMinus2, Boundary::S2tMinus1, Boundary::S2t})
        if (s == boundary_name(b)) return b;
    return std::nullopt;
}

inline Rational phi_boundary(FormulaType type, int t, Boundary which) {
    auto reject = [&](const char* why) {
        return Error(Errc::OutOfValidity, std::string("phi_boundary(") + type_name(type) + ", t=" + std::to_string(t) +
                                              ", " + boundary_name(which) + "): " + why);
    };
    if (type == FormulaType::T3 || type == FormulaType::T4) throw reject("no boundary values for types 3 and 4");
    if (t < 1) throw reject("t >= 1 required");
    // Two disjoint 2-clauses force t >= 2; two overlapping ones only at the
    // 2t-1 and 2t rows, where a single 2-clause would be the whole block.
    const bool two = type == FormulaType::T2o || type == FormulaType::T2d;
    if (type == FormulaType::T2d && t < 2) throw reject("type 2d needs t >= 2");
    switch (which) {
    case Boundary::SLe0: {
        static const Rational scale[] = {Rational(1), Rational(2, 3), Rational(4, 9), Rational(4, 9)};
        if (type == FormulaType::T2o && t == 1) return 1;
        return scale[static_cast<int>(type)] * Rational(pow_int(3, t));
    }
    case Boundary::S2tMinus2: {
        const int corr = type == FormulaType::T0 ? 0 : type == FormulaType::T1 ? 1 : 2;
        return Rational(binomial(t + 2, t) - corr);
    }
    case Boundary::S2tMinus1:
        if (two && t < 2) throw reject("t >= 2 required");
        return Rational(binomial(t + 1, t));
    case Boundary::S2t:
        if (two && t < 2) throw reject("t >= 2 required");
        return 1;
    }
    return 0;
}

// 6^(n/4), exact when 4 | n; otherwise only comparisons are exact.
struct SixQuarter {
    int n = 0;
    std::optional<BigInt> exact;

    // Sign of x - 6^(n/4), via x^4 against 6^n.
    int compare(const BigInt& x) const {
        if (x < 0) return -1;
        const BigInt lhs = pow_int(x, 4), rhs = pow_int(6, n);
        return lhs < rhs ? -1 : lhs == rhs ? 0 : 1;
    }
};

inline SixQuarter six_quarter_bound(int n) {
    if (n < 1) throw Error(Errc::InvalidSpec, "six_quarter_bound needs n >= 1");
    SixQuarter q;
    q.n = n;
    if (n % 4 == 0) q.exact = pow_int(6, n / 4);
    return q;
}

// Implied Turan number T(n, k+1, k) = C(n,k) - Theta(n, n-k, k).
inline BigInt theta_turan_relation(int n, int k, const BigInt& theta) {
    if (k < 1 || n < k) throw Error(Errc::InvalidSpec, "need 1 <= k <= n");
    const BigInt r = binomial(n, k) - theta;
    if (r < 0) throw Error(Errc::NegativeResult, "theta exceeds C(n,k)");
    return r;
}

} // namespace tlab
