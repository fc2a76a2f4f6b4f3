#pragma once

// Building blocks (cliques, Turan-style systems, defective variants) and the
// parametric extremal families built from them.

#include <array>
#include <string>
#include <vector>

#include "tlab/cnf.hpp"
#include "tlab/rational.hpp"
#include "tlab/types.hpp"

namespace tlab {

enum class Defect { D1, D2o, D2d };

inline const char* defect_name(Defect d) {
    switch (d) {
    case Defect::D1: return "1";
    case Defect::D2o: return "2o";
    case Defect::D2d: return "2d";
    }
    return "?";
}

struct BlockSpec {
    enum class Kind { CliqueLK, Turan3, CliqueDef, TuranDef, TwoClause, NThreeTMinus1 };
    Kind kind = Kind::CliqueLK;
    int a = 0; // l, n or t depending on kind
    int b = 0; // k for CliqueLK
    Defect defect = Defect::D1;

    static BlockSpec clique(int l, int k) { return {Kind::CliqueLK, l, k, Defect::D1}; }
    static BlockSpec turan(int n) { return {Kind::Turan3, n, 0, Defect::D1}; }
    static BlockSpec clique_def(int l, Defect d) { return {Kind::CliqueDef, l, 0, d}; }
    static BlockSpec turan_def(int n, Defect d) { return {Kind::TuranDef, n, 0, d}; }
    static BlockSpec two_clause() { return {Kind::TwoClause, 2, 0, Defect::D1}; }
    static BlockSpec n3tm1(int t) { return {Kind::NThreeTMinus1, t, 0, Defect::D1}; }
};

struct FamilySpec {
    FormulaType type = FormulaType::T0;
    int s = 0;
    int t = 0;
};

// All k-subsets of {0..l-1}, k <= 3.
inline MonotoneCnf clique(int l, int k) {
    if (l < 1 || l > kMaxVars || k < 1 || k > l || k > 3)
        throw Error(Errc::InvalidSpec, "K(" + std::to_string(l) + "," + std::to_string(k) + ")");
    std::vector<int> pool(l);
    for (int i = 0; i < l; ++i) pool[i] = i;
    std::vector<VarSet> cs;
    for (int first = 0; first < l; ++first)
        detail::for_each_subset_with_first(pool, k, first, [&](VarSet s) { cs.push_back(s); });
    return MonotoneCnf::make(l, std::move(cs));
}

// Part sizes as equal as possible, larger parts first; part i is a block of
// consecutive variables.
inline std::array<std::vector<int>, 3> turan_parts(int n) {
    std::array<std::vector<int>, 3> parts;
    int next = 0;
    for (int i = 0; i < 3; ++i) {
        const int size = n / 3 + (i < n % 3 ? 1 : 0);
        for (int j = 0; j < size; ++j) parts[i].push_back(next++);
    }
    return parts;
}

// Triples inside a part, plus every pair of part i with every element of
// part i+1 (mod 3).
inline MonotoneCnf turan3(int n) {
    if (n < 3 || n > kMaxVars) throw Error(Errc::InvalidSpec, "T3(" + std::to_string(n) + ")");
    const auto parts = turan_parts(n);
    std::vector<VarSet> cs;
    for (int i = 0; i < 3; ++i) {
        const auto& p = parts[i];
        const auto& q = parts[(i + 1) % 3];
        for (std::size_t x = 0; x < p.size(); ++x)
            for (std::size_t y = x + 1; y < p.size(); ++y) {
                for (std::size_t z = y + 1; z < p.size(); ++z) cs.push_back(bit(p[x]) | bit(p[y]) | bit(p[z]));
                for (int w : q) cs.push_back(bit(p[x]) | bit(p[y]) | bit(w));
            }
    }
    return normalize(MonotoneCnf::make(n, std::move(cs)));
}

inline MonotoneCnf with_clauses(MonotoneCnf f, std::initializer_list<VarSet> extra) {
    for (VarSet c : extra) f.clauses.push_back(c);
    return normalize(f);
}

inline MonotoneCnf clique_def(int l, Defect d) {
    const int min_l = d == Defect::D1 ? 2 : d == Defect::D2o ? 3 : 4;
    if (l < min_l || l > kMaxVars)
        throw Error(Errc::InvalidSpec, "Kdef(" + std::to_string(l) + "," + defect_name(d) + ")");
    MonotoneCnf base = l >= 3 ? clique(l, 3) : MonotoneCnf::make(l, {});
    switch (d) {
    case Defect::D1: return with_clauses(base, {bit(0) | bit(1)});
    case Defect::D2o: return with_clauses(base, {bit(0) | bit(1), bit(0) | bit(2)});
    case Defect::D2d: return with_clauses(base, {bit(0) | bit(1), bit(2) | bit(3)});
    }
    return base;
}

// Defective Turan system: T3(n) plus one 2-clause inside a part (type 1), two
// overlapping 2-clauses on a pair {a,b} of one part and an element c of the
// previous part (type 2o), or a pair from each of two consecutive parts (type
// 2d). Among those placements the one with the most (n-3)-transversals is
// kept; ties go to the lowest part index.
inline MonotoneCnf turan_def(int n, Defect d) {
    const std::string name = "Tdef(" + std::to_string(n) + "," + defect_name(d) + ")";
    if (n < 3 || n > kMaxVars) throw Error(Errc::InvalidSpec, name);
    const auto parts = turan_parts(n);
    const MonotoneCnf base = turan3(n);
    std::vector<MonotoneCnf> candidates;
    for (int p = 0; p < 3; ++p) {
        const auto& cur = parts[p];
        const auto& prev = parts[(p + 2) % 3];
        const auto& next = parts[(p + 1) % 3];
        if (cur.size() < 2) continue;
        const VarSet a = bit(cur[0]), b = bit(cur[1]);
        switch (d) {
        case Defect::D1: candidates.push_back(with_clauses(base, {a | b})); break;
        case Defect::D2o:
            if (prev.empty()) break;
            candidates.push_back(with_clauses(base, {a | b, a | bit(prev[0])}));
            candidates.push_back(with_clauses(base, {a | bit(prev[0]), b | bit(prev[0])}));
            break;
        case Defect::D2d:
            if (next.size() < 2) break;
            candidates.push_back(with_clauses(base, {a | b, bit(next[0]) | bit(next[1])}));
            break;
        }
    }
    if (candidates.empty()) throw Error(Errc::InvalidSpec, name + ": no admissible placement");
    std::size_t best = 0;
    std::uint64_t best_count = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const std::uint64_t c = count_transversals(candidates[i], n - 3);
        if (i == 0 || c > best_count) best = i, best_count = c;
    }
    return candidates[best];
}

inline MonotoneCnf disjoint_sum(const std::vector<MonotoneCnf>& blocks) {
    int total = 0;
    for (const auto& b : blocks) total += b.n;
    if (total > kMaxVars)
        throw Error(Errc::CombinedUniverseTooLarge, "combined universe " + std::to_string(total) + " > 64");
    MonotoneCnf out;
    out.n = total;
    int offset = 0;
    for (const auto& b : blocks) {
        out.universe |= b.universe << offset;
        for (VarSet c : b.clauses) out.clauses.push_back(c << offset);
        offset += b.n;
    }
    out.clauses = normalize_clauses(std::move(out.clauses));
    return out;
}

// Adds isolated variables up to n.
inline MonotoneCnf pad_to(const MonotoneCnf& f, int n) {
    if (n < f.n) throw Error(Errc::InvalidSpec, "cannot pad to fewer variables");
    if (n > kMaxVars) throw Error(Errc::CombinedUniverseTooLarge, "n=" + std::to_string(n));
    MonotoneCnf g = f;
    g.universe |= low_bits(n) & ~low_bits(f.n);
    g.n = n;
    return g;
}

inline MonotoneCnf repeat(const MonotoneCnf& f, int times) {
    return disjoint_sum(std::vector<MonotoneCnf>(static_cast<std::size_t>(std::max(times, 0)), f));
}

// {a,b,c},{a,d,e},{b,c,d} plus (t-2) disjoint triangles.
inline MonotoneCnf build_3t_minus_1(int t) {
    if (t < 2) throw Error(Errc::InvalidSpec, "n3tm1 needs t >= 2");
    // a..e = 0..4
    MonotoneCnf core = MonotoneCnf::make(5, {bit(0) | bit(1) | bit(2), bit(0) | bit(3) | bit(4), bit(1) | bit(2) | bit(3)});
    return disjoint_sum({normalize(core), repeat(clique(3, 3), t - 2)});
}

inline MonotoneCnf build_block(const BlockSpec& s) {
    using K = BlockSpec::Kind;
    switch (s.kind) {
    case K::CliqueLK: return clique(s.a, s.b);
    case K::Turan3: return turan3(s.a);
    case K::CliqueDef: return clique_def(s.a, s.defect);
    case K::TuranDef: return turan_def(s.a, s.defect);
    case K::TwoClause: return clique(2, 2);
    case K::NThreeTMinus1: return build_3t_minus_1(s.a);
    }
    throw Error(Errc::InvalidSpec, "unknown block");
}

namespace detail {

enum class Recipe { SmallS, Even, Odd, S1, Boundary2tm2, Boundary2tm1, Boundary2t, None };

// Which table row a family spec falls into; parametric rows win over the
// boundary rows where both apply.
inline Recipe pick_recipe(const FamilySpec& f) {
    const int s = f.s, t = f.t;
    if (t < 1) return Recipe::None;
    using FT = FormulaType;
    switch (f.type) {
    case FT::T0:
        if (s <= 0) return Recipe::SmallS;
        if (s == 1 && t >= 2) return Recipe::S1;
        if (s <= t && s % 2 == 0) return Recipe::Even;
        if (s <= t && s >= 3) return Recipe::Odd;
        break;
    case FT::T1:
        if (s <= 1) return Recipe::SmallS;
        if (s <= t && s % 2 == 0) return Recipe::Even;
        if (s <= t) return Recipe::Odd;
        break;
    case FT::T2o:
        if (s <= 2 && (t >= 2 || s <= 0)) return Recipe::SmallS;
        if (s <= t && s % 2 == 0) return Recipe::Even;
        if (s <= t && s >= 3) return Recipe::Odd;
        break;
    case FT::T2d:
        if (s <= 2 && t >= 2) return Recipe::SmallS;
        if (s <= t && s % 2 == 0 && s >= 4) return Recipe::Even;
        if (s <= t && s % 2 == 1 && s >= 3) return Recipe::Odd;
        break;
    default: return Recipe::None;
    }
    const int min_t = (f.type == FT::T2o || f.type == FT::T2d) ? 2 : 1;
    if (t < min_t) return Recipe::None;
    if (s == 2 * t - 2 && t >= 2) return Recipe::Boundary2tm2;
    if (s == 2 * t - 1) return Recipe::Boundary2tm1;
    if (s == 2 * t) return Recipe::Boundary2t;
    return Recipe::None;
}

inline Error family_error(const FamilySpec& f) {
    return Error(Errc::InvalidSpec, std::string("fam(") + type_name(f.type) + ",s=" + std::to_string(f.s) +
                                        ",t=" + std::to_string(f.t) + ") outside validity");
}

} // namespace detail

// Number of variables the family lives on: 3t - max(s, 0).
inline int family_n(const FamilySpec& f) { return 3 * f.t - std::max(f.s, 0); }

inline MonotoneCnf build_family(const FamilySpec& f) {
    using detail::Recipe;
    const Recipe r = detail::pick_recipe(f);
    if (r == Recipe::None) throw detail::family_error(f);
    const int s = f.s, t = f.t;
    const MonotoneCnf k33 = clique(3, 3), k43 = clique(4, 3), k22 = clique(2, 2);
    std::vector<MonotoneCnf> parts;
    auto add = [&](const MonotoneCnf& b, int times) {
        for (int i = 0; i < times; ++i) parts.push_back(b);
    };
    switch (r) {
    case Recipe::Boundary2tm2:
        switch (f.type) {
        case FormulaType::T0: parts.push_back(clique(t + 2, 3)); break;
        case FormulaType::T1: parts.push_back(clique_def(t + 2, Defect::D1)); break;
        case FormulaType::T2o: parts.push_back(clique_def(t + 2, Defect::D2o)); break;
        default: parts.push_back(clique_def(t + 2, Defect::D2d)); break;
        }
        break;
    case Recipe::Boundary2tm1: parts.push_back(clique(t + 1, 2)); break;
    case Recipe::Boundary2t: parts.push_back(clique(t, 1)); break;
    default:
        switch (f.type) {
        case FormulaType::T0:
            if (r == Recipe::SmallS) add(k33, t);
            else if (r == Recipe::S1) add(k33, t - 2), parts.push_back(turan3(5));
            else if (r == Recipe::Even) add(k33, t - s), add(k43, s / 2);
            else add(k33, t - s), add(k43, (s - 3) / 2), parts.push_back(turan3(6));
            break;
        case FormulaType::T1:
            if (r == Recipe::SmallS) parts.push_back(k22), add(k33, t - 1);
            else if (r == Recipe::Even) add(k33, t - s), add(k43, (s - 2) / 2), parts.push_back(clique_def(4, Defect::D1));
            else add(k33, t - s), add(k43, (s - 1) / 2), parts.push_back(k22);
            break;
        case FormulaType::T2o:
            if (r == Recipe::SmallS && t == 1) parts.push_back(clique_def(3, Defect::D2o));
            else if (r == Recipe::SmallS) parts.push_back(clique_def(4, Defect::D2o)), add(k33, t - 2);
            else if (r == Recipe::Even) add(k33, t - s), add(k43, (s - 2) / 2), parts.push_back(clique_def(4, Defect::D2o));
            else add(k33, t - s), add(k43, (s - 3) / 2), parts.push_back(turan_def(6, Defect::D2o));
            break;
        case FormulaType::T2d: {
            const MonotoneCnf k431 = clique_def(4, Defect::D1);
            if (r == Recipe::SmallS) add(k22, 2), add(k33, t - 2);
            else if (r == Recipe::Even) add(k33, t - s), add(k43, (s - 4) / 2), add(k431, 2);
            else add(k33, t - s), add(k43, (s - 3) / 2), parts.push_back(k431), parts.push_back(k22);
            break;
        }
        default: throw detail::family_error(f);
        }
    }
    MonotoneCnf out = disjoint_sum(parts);
    if (r == Recipe::SmallS) out = pad_to(out, family_n(f));
    return out;
}

// The closed-form count the family is designed to attain.
inline Rational expected_count(const FamilySpec& f) {
    using detail::Recipe;
    const Recipe r = detail::pick_recipe(f);
    if (r == Recipe::None) throw detail::family_error(f);
    const int s = f.s, t = f.t;
    const Rational p3t = Rational(pow_int(3, t));
    const Rational two3(2, 3);
    Rational v;
    switch (r) {
    case Recipe::Boundary2tm2: {
        const int corr = f.type == FormulaType::T0 ? 0 : f.type == FormulaType::T1 ? 1 : 2;
        v = Rational(binomial(t + 2, t) - corr);
        break;
    }
    case Recipe::Boundary2tm1: v = Rational(binomial(t + 1, t)); break;
    case Recipe::Boundary2t: v = 1; break;
    case Recipe::SmallS:
        switch (f.type) {
        case FormulaType::T0: v = p3t; break;
        case FormulaType::T1: v = two3 * p3t; break;
        default: v = (t == 1) ? Rational(1) : Rational(4, 9) * p3t; break;
        }
        break;
    case Recipe::S1: v = Rational(7, 9) * p3t; break;
    case Recipe::Even: {
        static const Rational coef[] = {Rational(1), Rational(5, 6), Rational(2, 3), Rational(25, 36)};
        v = coef[static_cast<int>(f.type)] * pow_rat(two3, s / 2) * p3t;
        break;
    }
    case Recipe::Odd: {
        static const Rational coef[] = {Rational(7, 9), Rational(2, 3), Rational(5, 9), Rational(5, 9)};
        v = coef[static_cast<int>(f.type)] * pow_rat(two3, (s - 1) / 2) * p3t;
        break;
    }
    case Recipe::None: break;
    }
    if (!is_integer(v)) throw Error(Errc::InvalidSpec, "non-integral family count " + to_string(v));
    return v;
}

} // namespace tlab
