#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace tlab {

enum class FormulaType { T0, T1, T2o, T2d, T3, T4 };

inline const char* type_name(FormulaType t) {
    switch (t) {
    case FormulaType::T0: return "0";
    case FormulaType::T1: return "1";
    case FormulaType::T2o: return "2o";
    case FormulaType::T2d: return "2d";
    case FormulaType::T3: return "3";
    case FormulaType::T4: return "4";
    }
    return "?";
}

// Accepts "0", "T0", "2o", "T2o", ...
inline std::optional<FormulaType> parse_type(std::string_view s) {
    if (!s.empty() && (s.front() == 'T' || s.front() == 't')) s.remove_prefix(1);
    if (s == "0") return FormulaType::T0;
    if (s == "1") return FormulaType::T1;
    if (s == "2o") return FormulaType::T2o;
    if (s == "2d") return FormulaType::T2d;
    if (s == "3") return FormulaType::T3;
    if (s == "4") return FormulaType::T4;
    return std::nullopt;
}

inline constexpr FormulaType kAllTypes[] = {FormulaType::T0,  FormulaType::T1, FormulaType::T2o,
                                            FormulaType::T2d, FormulaType::T3, FormulaType::T4};

} // namespace tlab
