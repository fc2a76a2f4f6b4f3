#pragma once

// Construction spec strings, e.g. "K(3,3) + T3(6)", "2*Kdef(4,1) + K(3,3)",
// "with(T3(7); 4 5)", "raw(5; 1 2 3; 3 4 5)". Grammar in FORMATS.md.

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "tlab/cnf.hpp"
#include "tlab/constructions.hpp"
#include "tlab/error.hpp"
#include "tlab/types.hpp"

namespace tlab {

namespace detail {

class SpecParser {
  public:
    explicit SpecParser(std::string_view text) : s_(text) {}

    MonotoneCnf parse() {
        MonotoneCnf f = sum();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return f;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(Errc::ParseError, what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool peek_digit() {
        skip();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    int integer() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') neg = true, ++pos_;
        int v = 0;
        const char* b = s_.data() + pos_;
        const auto [p, ec] = std::from_chars(b, s_.data() + s_.size(), v);
        if (ec != std::errc() || p == b) fail("expected integer");
        pos_ += static_cast<std::size_t>(p - b);
        return neg ? -v : v;
    }

    std::string word() {
        skip();
        const std::size_t b = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) fail("expected name");
        return std::string(s_.substr(b, pos_ - b));
    }

    // `key=` followed by an integer.
    int named(const char* key) {
        const std::string w = word();
        if (w != key) fail(std::string("expected ") + key + "=");
        expect('=');
        return integer();
    }

    Defect defect() {
        const std::string w = word();
        if (w == "1") return Defect::D1;
        if (w == "2o") return Defect::D2o;
        if (w == "2d") return Defect::D2d;
        fail("defect must be 1, 2o or 2d");
    }

    // 1-based indices separated by spaces, up to the next ';' or ')'.
    VarSet clause(int n) {
        VarSet c = 0;
        while (peek_digit()) {
            const int v = integer();
            if (v < 1 || v > n) fail("variable " + std::to_string(v) + " outside 1.." + std::to_string(n));
            c |= bit(v - 1);
        }
        if (!c) fail("empty clause");
        if (set_size(c) > 3) fail("clause wider than 3");
        return c;
    }

    MonotoneCnf sum() {
        std::vector<MonotoneCnf> parts{term()};
        while (eat('+')) parts.push_back(term());
        return parts.size() == 1 ? parts.front() : disjoint_sum(parts);
    }

    MonotoneCnf term() {
        if (peek_digit()) {
            const int k = integer();
            expect('*');
            if (k < 0) fail("negative repeat");
            return repeat(atom(), k);
        }
        return atom();
    }

    MonotoneCnf atom() {
        if (eat('(')) {
            MonotoneCnf f = sum();
            expect(')');
            return f;
        }
        skip();
        const std::size_t at = pos_;
        const std::string name = word();
        expect('(');
        MonotoneCnf f;
        if (name == "K") {
            const int l = integer();
            expect(',');
            f = clique(l, integer());
        } else if (name == "T3") {
            f = turan3(integer());
        } else if (name == "Kdef") {
            const int l = integer();
            expect(',');
            f = clique_def(l, defect());
        } else if (name == "Tdef") {
            const int n = integer();
            expect(',');
            f = turan_def(n, defect());
        } else if (name == "P") {
            const int s = named("s");
            expect(',');
            f = build_family({FormulaType::T0, s, named("t")});
        } else if (name == "fam") {
            const auto type = parse_type(word());
            if (!type) fail("unknown type");
            expect(',');
            const int s = named("s");
            expect(',');
            f = build_family({*type, s, named("t")});
        } else if (name == "n3tm1") {
            f = build_3t_minus_1(named("t"));
        } else if (name == "with") {
            f = sum();
            std::vector<VarSet> cs = f.clauses;
            while (eat(';')) cs.push_back(clause(f.n));
            f = normalize(MonotoneCnf::make(f.n, cs));
        } else if (name == "raw") {
            const int n = integer();
            if (n < 0 || n > kMaxVars) fail("raw needs 0 <= n <= 64");
            std::vector<VarSet> cs;
            while (eat(';')) cs.push_back(clause(n));
            f = normalize(MonotoneCnf::make(n, cs));
        } else if (name == "pad") {
            const int n = integer();
            expect(';');
            f = pad_to(sum(), n);
        } else {
            pos_ = at;
            fail("unknown construction '" + name + "'");
        }
        expect(')');
        return f;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline MonotoneCnf parse_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

} // namespace tlab
