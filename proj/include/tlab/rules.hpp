#pragma once

// Branching case tables. Each row lists the core-variable pattern, the
// assignments the case analysis claims are forced, the parameter change of the
// restricted formula, its type and the printed fraction of the bound (even and
// odd s). Letters name variables of the property's anchor.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tlab/bounds.hpp"
#include "tlab/error.hpp"
#include "tlab/rational.hpp"
#include "tlab/types.hpp"

namespace tlab {

struct Literal {
    std::string letter; // "a", "e'"
    bool value = false;
    bool operator==(const Literal&) const = default;
};

struct BranchRow {
    std::vector<Literal> core;
    std::vector<Literal> forced;
    int dn = 0, dt = 0, ds = 0;
    std::optional<FormulaType> expected_type;
    std::optional<Rational> even, odd; // printed fractions
    int printed_dt = 0;                // differs from dt only where the printed value is a typo
    std::string note;
};

struct BranchRule {
    std::string key;        // "P2o_7.2"
    std::string property;   // "P2o_7"
    std::string case_label; // "", "a", "Case 2"
    FormulaType base = FormulaType::T0;
    bool has_even = true, has_odd = true;
    std::vector<std::string> core_letters; // order of first appearance in the rows
    std::vector<BranchRow> rows;
    std::optional<Rational> total_even, total_odd; // printed
};

namespace detail {

// "a=1,b=c=0" -> a:1, b:0, c:0
inline std::vector<Literal> parse_literals(const std::string& text) {
    std::vector<Literal> out;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ',')) {
        std::vector<std::string> parts;
        std::stringstream ps(group);
        std::string p;
        while (std::getline(ps, p, '=')) parts.push_back(p);
        if (parts.size() < 2 || (parts.back() != "0" && parts.back() != "1"))
            throw Error(Errc::ParseError, "bad literal group '" + group + "'");
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) out.push_back({parts[i], parts.back() == "1"});
    }
    return out;
}

inline std::optional<Rational> parse_fraction(const char* s) {
    if (!s) return std::nullopt;
    const std::string str(s);
    const auto slash = str.find('/');
    if (slash == std::string::npos) return Rational(BigInt(str));
    return Rational(BigInt(str.substr(0, slash)), BigInt(str.substr(slash + 1)));
}

struct RowText {
    const char* core;
    const char* forced;
    int dn, dt, ds;
    const char* type; // "2" means a type-2 formula of unknown overlap, read as 2d
    const char* even;
    const char* odd;
    int printed_dt = 0;
    const char* note = nullptr;
};

struct TableText {
    const char* key;
    FormulaType base;
    bool even, odd;
    const char* total_even;
    const char* total_odd;
    std::vector<RowText> rows;
};

inline BranchRule build_rule(const TableText& t) {
    BranchRule r;
    r.key = t.key;
    const std::string key = t.key;
    const auto dot = key.find('.');
    r.property = key.substr(0, dot);
    if (dot != std::string::npos) {
        const std::string suffix = key.substr(dot + 1);
        r.case_label = (suffix == "a" || suffix == "b") ? suffix : "Case " + suffix;
    }
    r.base = t.base;
    r.has_even = t.even;
    r.has_odd = t.odd;
    r.total_even = parse_fraction(t.total_even);
    r.total_odd = parse_fraction(t.total_odd);
    for (const RowText& rt : t.rows) {
        BranchRow row;
        row.core = parse_literals(rt.core);
        if (rt.forced && *rt.forced) row.forced = parse_literals(rt.forced);
        row.dn = rt.dn;
        row.dt = rt.dt;
        row.ds = rt.ds;
        const std::string ty = rt.type;
        row.expected_type = ty == "2" ? std::optional<FormulaType>(FormulaType::T2d) : parse_type(ty);
        row.even = parse_fraction(rt.even);
        row.odd = parse_fraction(rt.odd);
        row.printed_dt = rt.printed_dt ? rt.printed_dt : rt.dt;
        if (rt.note) row.note = rt.note;
        for (const Literal& l : row.core) {
            bool seen = false;
            for (const auto& c : r.core_letters) seen = seen || c == l.letter;
            if (!seen) r.core_letters.push_back(l.letter);
        }
        r.rows.push_back(std::move(row));
    }
    return r;
}

inline std::vector<BranchRule> build_all_rules() {
    using FT = FormulaType;
    // clang-format off
    const std::vector<TableText> tables = {
    {"P0_1.a", FT::T0, true, true, "31/36", "79/84", {
        {"a=1", "b=0", -2, -1, -1, "0", "7/18", "3/7"},
        {"a=0,b=1", "", -2, -1, -1, "0", "7/18", "3/7"},
        {"a=0,b=0", "c=d=e=1", -5, -3, -4, "0", "1/12", "1/12"}}},
    {"P0_1.b", FT::T0, true, true, "11/12", "79/84", {
        {"a=1", "", -1, -1, -2, "0", "1/2", "1/2"},
        {"a=0,b=1", "", -2, -1, -1, "1", "1/3", "5/14"},
        {"a=0,b=0", "c=d=e=1", -5, -3, -4, "0", "1/12", "1/12"}}},
    {"P0_2", FT::T0, true, true, "1", "1", {
        {"a=1", "", -1, -1, -2, "0", "1/2", "1/2"},
        {"a=0", "", -1, 0, 1, "3", "1/2", "1/2"}}},
    {"P0_3", FT::T0, true, true, "17/18", "1", {
        {"a=1", "b=0", -2, -1, -1, "0", "7/18", "3/7"},
        {"a=0", "", -1, 0, 1, "2o", "5/9", "4/7"}}},
    {"P0_4", FT::T0, true, true, "1", "1", {
        {"a=1,b=0,c=0", "e=1", -4, -2, -2, "0", "1/6", "1/6"},
        {"a=0,b=1,c=0", "f=1", -4, -2, -2, "0", "1/6", "1/6"},
        {"a=0,b=0,c=1", "d=1", -4, -2, -2, "0", "1/6", "1/6"},
        {"a=1,b=1", "c=e=f=0", -4, -2, -2, "0", "1/6", "1/6"},
        {"b=1,c=1", "a=d=f=0", -4, -2, -2, "0", "1/6", "1/6"},
        {"a=1,c=1", "b=e=d=0", -4, -2, -2, "0", "1/6", "1/6"}}},
    {"P0_5", FT::T0, true, true, "103/108", "187/189", {
        {"a=1,b=0,c=0", "", -3, -1, 0, "2d", "25/108", "5/21"},
        {"a=0,b=1,c=0", "", -3, -1, 0, "2d", "25/108", "5/21"},
        {"a=0,b=0,c=1", "", -3, -1, 0, "2d", "25/108", "5/21"},
        {"a=0,b=1,c=1", "f=g=h=i=0", -7, -2, 1, "1", "2/27", "5/63"},
        {"a=1,b=0,c=1", "d=e=h=i=0", -7, -2, 1, "1", "2/27", "5/63"},
        {"a=1,b=1,c=0", "d=e=f=g=0", -7, -2, 1, "1", "2/27", "5/63"},
        {"a=1,b=1,c=1", "d=e=f=g=h=i=0", -9, -3, 0, "0", "1/27", "1/27"}}},
    {"P0_6.a", FT::T0, true, true, "283/324", "19/21", {
        {"a=1,b=0,c=0", "", -3, -1, 0, "2d", "25/108", "5/21"},
        {"a=0,b=1,c=0", "", -3, -1, 0, "1", "5/18", "2/7"},
        {"a=0,b=0,c=1", "", -3, -1, 0, "1", "5/18", "2/7"},
        {"a=0,b=1,c=1", "d=e=f=g=0", -7, -2, 1, "0", "7/81", "2/21"}}},
    {"P0_6.b", FT::T0, true, true, "1", "1", {
        {"c=1", "a=b=0", -3, -1, 0, "0", "1/3", "1/3"},
        {"c=0,a=1,b=0", "", -3, -1, 0, "0", "1/3", "1/3"},
        {"c=0,a=0,b=1", "", -3, -1, 0, "0", "1/3", "1/3"}}},

    {"P1_1", FT::T1, true, true, "14/15", "1", {
        {"a=1", "b=0", -2, -1, -1, "0", "7/15", "1/2"},
        {"a=0", "b=1", -2, -1, -1, "0", "7/15", "1/2"}}},
    {"P1_2", FT::T1, true, true, "1", "1", {
        {"a=1", "", -1, -1, -2, "0", "3/5", "7/12"},
        {"a=0", "b=1", -2, -1, -1, "1", "2/5", "5/12"}}},

    {"P2o_odd", FT::T2o, false, true, nullptr, "1", {
        {"a=1", "", -1, -1, -2, "0", nullptr, "7/10"},
        {"a=0", "b=c=1", -3, -2, -3, "0", nullptr, "3/10"}}},
    {"P2o_1", FT::T2o, true, false, "1", nullptr, {
        {"a=1", "", -1, -1, -2, "0", "3/4", nullptr},
        {"a=0", "b=c=1", -3, -2, -3, "1", "1/4", nullptr}}},
    {"P2o_2.1", FT::T2o, true, false, "1", nullptr, {
        {"b=1", "", -1, -1, -2, "1", "5/8", nullptr},
        {"b=0", "a=1", -2, -1, -1, "3", "3/8", nullptr}}},
    {"P2o_2.2", FT::T2o, true, false, "47/48", nullptr, {
        {"b=1", "", -1, -1, -2, "1", "5/8", nullptr},
        {"b=0,d=0", "a=e=g=i=1", -6, -4, -6, "0", "1/16", nullptr},
        {"b=0,d=1", "a=1", -3, -2, -3, "0", "7/24", nullptr}}},
    {"P2o_3", FT::T2o, true, false, "7/8", nullptr, {
        {"a=1,b=0", "", -2, -1, -1, "0", "7/12", nullptr},
        {"a=0,b=1", "c=1", -3, -2, -3, "0", "7/24", nullptr}}},
    {"P2o_4", FT::T2o, true, false, "1", nullptr, {
        {"a=1,b=0,c=0", "d=e=1", -5, -3, -4, "0", "1/8", nullptr},
        {"a=1,b=0,c=1", "", -3, -2, -3, "0", "7/24", nullptr},
        {"a=1,b=1,c=0", "", -3, -2, -3, "0", "7/24", nullptr},
        {"a=0", "b=c=1", -3, -2, -3, "0", "7/24", nullptr}}},
    {"P2o_5.1", FT::T2o, true, false, "1", nullptr, {
        {"b=1,c=0", "a=1", -3, -2, -3, "1", "1/4", nullptr},
        {"b=0,c=1", "a=1", -3, -2, -3, "1", "1/4", nullptr},
        {"b=0,c=0", "a=d=1", -4, -2, -2, "1", "5/24", nullptr},
        {"b=1,c=1", "a=0", -3, -2, -3, "0", "7/24", nullptr}}},
    {"P2o_5.2", FT::T2o, true, false, "11/12", nullptr, {
        {"b=1,c=0", "a=1,d=0", -4, -2, -2, "1", "5/24", nullptr},
        {"b=1,c=1", "a=0", -3, -2, -3, "0", "7/24", nullptr},
        {"b=0", "a=1", -2, -1, -1, "2o", "5/12", nullptr}}},
    {"P2o_6", FT::T2o, true, false, "23/24", nullptr, {
        {"a=1,b=0", "", -2, -1, -1, "2", "5/12", nullptr},
        {"a=1,b=1", "c=0", -3, -2, -3, "1", "1/4", nullptr},
        {"a=0", "b=c=1", -3, -2, -3, "0", "7/24", nullptr}}},
    {"P2o_7.1", FT::T2o, true, false, "1", nullptr, {
        {"a=1,b=0,c=0", "", -3, -1, 0, "3", "7/24", nullptr},
        {"a=1,b=0,c=1", "", -3, -2, -3, "2", "5/24", nullptr, -3, "printed t-3; two variables are included and t-2 reproduces the printed fraction"},
        {"a=1,b=1,c=0", "", -3, -2, -3, "2", "5/24", nullptr, -3, "printed t-3; two variables are included and t-2 reproduces the printed fraction"},
        {"a=0", "b=c=1", -3, -2, -3, "0", "7/24", nullptr}}},
    {"P2o_7.2", FT::T2o, true, false, "1", nullptr, {
        {"a=1,b=0,c=0,d=0", "e=g=e'=1", -7, -4, -5, "0", "7/144", nullptr},
        {"a=1,b=0,c=0,d=1", "", -4, -2, -2, "1", "5/24", nullptr},
        {"a=1,b=0,c=1", "", -3, -2, -3, "2o", "5/24", nullptr, -3, "printed t-3; two variables are included and t-2 reproduces the printed fraction"},
        {"a=1,b=1,c=0", "", -3, -2, -3, "2", "5/24", nullptr, -3, "printed t-3; two variables are included and t-2 reproduces the printed fraction"},
        {"a=0", "b=c=1", -3, -2, -3, "0", "7/24", nullptr}}},
    {"P2o_7.3", FT::T2o, true, false, "283/288", nullptr, {
        {"a=1,b=0,c=0,d=0", "e=g=e'=g'=1", -8, -5, -7, "0", "7/288", nullptr},
        {"a=1,b=0,c=0,d=1", "", -4, -2, -2, "0", "1/4", nullptr},
        {"a=1,b=0,c=1", "", -3, -2, -3, "2o", "5/24", nullptr, -3, "printed t-3; two variables are included and t-2 reproduces the printed fraction"},
        {"a=1,b=1,c=0", "", -3, -2, -3, "2o", "5/24", nullptr, -3, "printed t-3; two variables are included and t-2 reproduces the printed fraction"},
        {"a=0", "b=c=1", -3, -2, -3, "0", "7/24", nullptr}}},
    {"P2o_8.1", FT::T2o, true, false, "35/36", nullptr, {
        {"a=1,b=0,c=0", "", -3, -1, 0, "3", "7/24", nullptr},
        {"a=1,b=0,c=1", "d'=e'=0", -5, -2, -1, "2", "5/36", nullptr},
        {"a=1,b=1", "c=0", -3, -2, -3, "1", "1/4", nullptr},
        {"a=0", "b=c=1", -3, -2, -3, "0", "7/24", nullptr}}},
    {"P2o_8.2", FT::T2o, true, false, "47/48", nullptr, {
        {"a=1,b=0,c=0,d=0", "e=g=e'=1", -7, -4, -5, "0", "7/144", nullptr},
        {"a=1,b=0,c=0,d=1", "", -4, -2, -2, "0", "1/4", nullptr},
        {"a=1,b=0,c=1", "d'=e'=0", -5, -2, -1, "2o", "5/36", nullptr},
        {"a=1,b=1", "c=0", -3, -2, -3, "1", "1/4", nullptr},
        {"a=0", "b=c=1", -3, -2, -3, "0", "7/24", nullptr}}},
    {"P2o_9.1", FT::T2o, true, false, "1", nullptr, {
        {"a=1,b=0,c=0", "d=1", -4, -2, -2, "0", "1/4", nullptr},
        {"a=1,b=0,c=1", "d=0", -4, -2, -2, "0", "1/4", nullptr},
        {"a=1,b=1", "c=d=0", -4, -2, -2, "0", "1/4", nullptr},
        {"a=0", "b=c=1,d=0", -4, -2, -2, "0", "1/4", nullptr}}},
    {"P2o_9.2", FT::T2o, true, false, "23/24", nullptr, {
        {"a=1,b=0,c=0", "d=1", -4, -2, -2, "0", "1/4", nullptr},
        {"a=1,b=0,c=1", "d=0", -4, -2, -2, "1", "5/24", nullptr},
        {"a=1,b=1", "c=d=0", -4, -2, -2, "1", "5/24", nullptr},
        {"a=0", "b=c=1", -3, -2, -3, "0", "7/24", nullptr}}},
    {"P2o_10", FT::T2o, true, false, "23/24", nullptr, {
        {"a=1,b=0", "", -2, -1, -1, "1", "1/2", nullptr},
        {"a=1,b=1", "c=d=e=0", -5, -2, -1, "1", "1/6", nullptr},
        {"a=0", "b=c=1", -3, -2, -3, "0", "7/24", nullptr}}},

    {"P2d_1.1", FT::T2d, true, true, "24/25", "19/20", {
        {"a=1", "", -1, -1, -2, "1", "3/5", "3/5"},
        {"a=0,b=1", "", -2, -1, -1, "3", "9/25", "7/20"}}},
    {"P2d_1.2", FT::T2d, true, true, "47/50", "23/24", {
        {"a=1", "", -1, -1, -2, "1", "3/5", "3/5"},
        {"a=0,b=1,d=0", "f=h=c=1", -6, -4, -6, "0", "3/50", "7/120"},
        {"a=0,b=1,d=1", "", -3, -2, -3, "0", "7/25", "3/10"}}},
    {"P2d_2", FT::T2d, true, true, "1", "1", {
        {"a=1", "", -1, -1, -2, "1", "3/5", "3/5"},
        {"a=0", "b=1", -2, -1, -1, "2o", "2/5", "2/5"}}},
    {"P2d_3.1", FT::T2d, true, true, "24/25", "19/20", {
        {"a=1,c=0", "d=1,b=0", -4, -2, -2, "1", "1/5", "1/5"},
        {"a=0,c=1", "b=1,d=0", -4, -2, -2, "1", "1/5", "1/5"},
        {"a=0,c=0", "b=d=1", -4, -2, -2, "1", "1/5", "1/5"},
        {"a=1,c=1", "", -2, -2, -4, "0", "9/25", "7/20"}}},
    {"P2d_3.2", FT::T2d, true, true, "1", "1", {
        {"a=1,b=0,e=0,f=1", "", -4, -2, -2, "1", "1/5", "1/5"},
        {"a=1,b=0,e=1,f=0", "", -4, -2, -2, "1", "1/5", "1/5"},
        {"a=0,b=1,e=0,f=1", "", -4, -2, -2, "1", "1/5", "1/5"},
        {"a=0,b=1,e=1,f=0", "", -4, -2, -2, "1", "1/5", "1/5"},
        {"a=1,b=1,e=0,f=0", "", -4, -2, -2, "1", "1/5", "1/5"}}},
    {"P2d_3.3", FT::T2d, true, true, "49/50", "1", {
        {"a=1,b=0,e=1", "", -3, -2, -3, "1", "6/25", "1/4"},
        {"a=1,b=0,e=0,f=1", "", -4, -2, -2, "2", "1/6", "1/6"},
        {"a=0,b=1,e=1", "", -3, -2, -3, "1", "6/25", "1/4"},
        {"a=0,b=1,e=0,f=1", "", -4, -2, -2, "2", "1/6", "1/6"},
        {"a=1,b=1,e=0,f=0", "", -4, -2, -2, "2", "1/6", "1/6"}}},
    {"P2d_4", FT::T2d, true, true, "24/25", "1", {
        {"a=1,b=0", "", -2, -1, -1, "1", "12/25", "1/2"},
        {"a=0,b=1", "", -2, -1, -1, "1", "12/25", "1/2"}}},
    {"P2d_5", FT::T2d, true, true, "24/25", "1", {
        {"a=1,b=0", "", -2, -1, -1, "2d", "2/5", "5/12"},
        {"a=0,b=1", "", -2, -1, -1, "2d", "2/5", "5/12"},
        {"a=1,b=1", "e=f=g=h=0", -5, -2, -1, "1", "4/25", "1/6"}}},

    {"P3p_1", FT::T3, true, true, "20/21", "25/27", {
        {"a=1", "b=0,c=1", -3, -2, -3, "0", "1/3", "1/3"},
        {"a=0,c=1", "b=1", -3, -2, -3, "0", "1/3", "1/3"},
        {"a=0,c=0", "b=d=1", -4, -2, -2, "0", "2/7", "7/27"}}},
    {"P3p_2", FT::T3, true, true, "1", "17/18", {
        {"b=1", "", -1, -1, -2, "1", "5/7", "2/3"},
        {"b=0", "a=c=1", -3, -2, -3, "1", "2/7", "5/18"}}},
    {"P3t_1", FT::T3, true, true, "1", "1", {
        {"a=0", "b=c=1", -3, -2, -3, "0", "1/3", "1/3"},
        {"a=1,b=0", "c=1", -3, -2, -3, "0", "1/3", "1/3"},
        {"a=1,b=1", "c=0", -3, -2, -3, "0", "1/3", "1/3"}}},
    {"P3t_2", FT::T3, true, true, "1", "26/27", {
        {"a=0", "b=c=1", -3, -2, -3, "1", "2/7", "5/18"},
        {"a=1,b=0", "c=1", -3, -2, -3, "1", "2/7", "5/18"},
        {"a=1,b=1,c=0", "", -3, -2, -3, "1", "2/7", "5/18"},
        {"a=1,b=1,c=1", "d=e=0", -5, -3, -4, "0", "1/7", "7/54"}}},
    {"P3t_3", FT::T3, true, true, "13/14", "8/9", {
        {"a=0", "b=c=1", -3, -2, -3, "2", "5/21", "25/108"},
        {"a=1,b=0", "c=1", -3, -2, -3, "2", "5/21", "25/108"},
        {"a=1,b=1,c=0", "", -3, -2, -3, "2", "5/21", "25/108"},
        {"a=1,b=1,c=1", "", -3, -3, -6, "0", "3/14", "7/36"}}},
    {"P3io_1", FT::T3, false, true, nullptr, "1", {
        {"a=1", "", -1, -1, -2, "2o", nullptr, "5/9"},
        {"a=0", "b=1", -2, -1, -1, "2o", nullptr, "4/9"}}},
    {"P3io_2", FT::T3, false, true, nullptr, "25/27", {
        {"a=1", "b=0", -2, -1, -1, "2d", nullptr, "25/54"},
        {"a=0", "b=1", -2, -1, -1, "2d", nullptr, "25/54"}}},
    {"P3io_3", FT::T3, false, true, nullptr, "17/18", {
        {"a=1", "", -1, -1, -2, "2d", nullptr, "5/9"},
        {"a=0", "b=1", -2, -1, -1, "3", nullptr, "7/18"}}},
    {"P3ie_1", FT::T3, true, false, "20/21", nullptr, {
        {"a=1", "b=0", -2, -1, -1, "2", "10/21", nullptr},
        {"a=0", "b=1", -2, -1, -1, "2", "10/21", nullptr}}},
    {"P3ie_2", FT::T3, true, false, "1", nullptr, {
        {"a=1", "", -1, -1, -2, "2", "25/42", nullptr},
        {"a=0,c=1", "b=1", -3, -2, -3, "1", "2/7", nullptr},
        {"a=0,c=0", "b=d=x=1", -5, -3, -4, "1", "5/42", nullptr}}},
    {"P3ie_3", FT::T3, true, false, "1", nullptr, {
        {"a=1", "", -1, -1, -2, "2", "25/42", nullptr},
        {"a=0,b=1,c=1", "", -3, -2, -3, "0", "1/3", nullptr},
        {"a=0,b=1,c=0", "d=e=x=1", -6, -4, -6, "0", "1/14", nullptr}}},
    {"P3ie_4", FT::T3, true, false, "1", nullptr, {
        {"a=1", "", -1, -1, -2, "2o", "4/7", nullptr},
        {"a=0", "b=1", -2, -1, -1, "3", "3/7", nullptr}}},
    {"P3ie_5", FT::T3, true, false, "1", nullptr, {
        {"a=1", "", -1, -1, -2, "2", "25/42", nullptr},
        {"a=0,b=1,c=1", "", -3, -2, -3, "2", "5/21", nullptr},
        {"a=0,b=1,c=0,d=1", "", -4, -2, -2, "3", "1/6", nullptr}}},
    {"P3ie_6", FT::T3, true, false, "1", nullptr, {
        {"a=1", "", -1, -1, -2, "2", "25/42", nullptr},
        {"a=0", "b=1", -2, -1, -1, "4", "17/42", nullptr}}},

    {"P4_1", FT::T4, false, true, nullptr, "16/17", {
        {"a=1", "", -1, -1, -2, "3", nullptr, "9/17"},
        {"a=0", "b=1", -2, -1, -1, "3", nullptr, "7/17"}}},
    {"P4_2", FT::T4, false, true, nullptr, "16/17", {
        {"a=1", "", -1, -1, -2, "2", nullptr, "10/17"},
        {"a=0,b=1", "c=1", -3, -2, -3, "0", nullptr, "6/17"}}},
    {"P4_3", FT::T4, false, true, nullptr, "1", {
        {"a=1", "", -1, -1, -2, "0", nullptr, "14/17"},
        {"a=0,b=1", "c=d=1", -4, -3, -5, "0", nullptr, "3/17"}}},
    };
    // clang-format on
    std::vector<BranchRule> out;
    out.reserve(tables.size());
    for (const auto& t : tables) out.push_back(build_rule(t));
    return out;
}

} // namespace detail

inline const std::vector<BranchRule>& rule_tables() {
    static const std::vector<BranchRule> rules = detail::build_all_rules();
    return rules;
}

inline const BranchRule& rule_by_key(const std::string& key) {
    for (const auto& r : rule_tables())
        if (r.key == key) return r;
    throw Error(Errc::InvalidSpec, "no rule table '" + key + "'");
}

// Fraction of the parent bound claimed by one row: the child's bound divided
// by the parent's, with s' = s + 3*dt - dn derived rather than read from the
// row. `odd` selects the parity of the parent's s.
inline Rational row_fraction(FormulaType base, const BranchRow& row, bool odd) {
    const int s = odd ? 1001 : 1000;
    const int s2 = s + 3 * row.dt - row.dn;
    const FormulaType child = row.expected_type.value_or(base);
    return phi_coefficient(child, s2 % 2 != 0) / phi_coefficient(base, odd) *
           pow_rat(Rational(2, 3), two_thirds_exponent(s2) - two_thirds_exponent(s)) * pow_rat(Rational(3), row.dt);
}

struct AuditRow {
    std::optional<Rational> computed_even, computed_odd;
    bool even_ok = true, odd_ok = true;
    bool deltas_consistent = true; // ds == 3*dt - dn
    bool dt_matches_included = true;
    std::string note;
};

struct AuditTable {
    std::string key;
    std::vector<AuditRow> rows;
    std::optional<Rational> sum_even, sum_odd;
    bool total_even_ok = true, total_odd_ok = true;
    bool at_most_one = true;
    bool ok() const {
        if (!total_even_ok || !total_odd_ok || !at_most_one) return false;
        for (const auto& r : rows)
            if (!r.even_ok || !r.odd_ok || !r.deltas_consistent || !r.dt_matches_included) return false;
        return true;
    }
};

struct AuditReport {
    std::vector<AuditTable> tables;
    bool ok() const {
        for (const auto& t : tables)
            if (!t.ok()) return false;
        return true;
    }
};

inline AuditTable audit_rule(const BranchRule& rule) {
    AuditTable t;
    t.key = rule.key;
    Rational se = 0, so = 0;
    for (const auto& row : rule.rows) {
        AuditRow ar;
        ar.note = row.note;
        ar.deltas_consistent = row.ds == 3 * row.dt - row.dn;
        int included = 0;
        for (const auto& l : row.core) included += l.value;
        for (const auto& l : row.forced) included += l.value;
        ar.dt_matches_included = -row.dt == included;
        if (rule.has_even) {
            ar.computed_even = row_fraction(rule.base, row, false);
            ar.even_ok = row.even && *row.even == *ar.computed_even;
            se += *ar.computed_even;
        }
        if (rule.has_odd) {
            ar.computed_odd = row_fraction(rule.base, row, true);
            ar.odd_ok = row.odd && *row.odd == *ar.computed_odd;
            so += *ar.computed_odd;
        }
        t.rows.push_back(std::move(ar));
    }
    if (rule.has_even) {
        t.sum_even = se;
        t.total_even_ok = rule.total_even && *rule.total_even == se;
        t.at_most_one = t.at_most_one && se <= 1;
    }
    if (rule.has_odd) {
        t.sum_odd = so;
        t.total_odd_ok = rule.total_odd && *rule.total_odd == so;
        t.at_most_one = t.at_most_one && so <= 1;
    }
    return t;
}

inline AuditReport audit_rule_tables() {
    AuditReport rep;
    for (const auto& r : rule_tables()) rep.tables.push_back(audit_rule(r));
    return rep;
}

} // namespace tlab
