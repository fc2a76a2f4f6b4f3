#include "tlab/golden.hpp"

#include <atomic>
#include <thread>

#include "tlab/spec_parse.hpp"

namespace tlab {

namespace {

std::vector<GoldenRow> make_rows() {
    std::vector<GoldenRow> r;
    auto row = [&](const char* table, int n, int t, int s, std::uint64_t printed, const char* label, const char* spec,
                   const char* note = "", const char* erratum = "") {
        r.push_back(GoldenRow{table, n, t, s, printed, label, spec, note, erratum});
    };

    // Type 0, first listing (n <= 6).
    const char* a = "phi0.small";
    row(a, 0, 0, 0, 1, "empty", "raw(0)");
    row(a, 1, 1, 2, 1, "K_1^1", "K(1,1)");
    row(a, 2, 1, 1, 2, "K_2^2", "K(2,2)");
    row(a, 2, 2, 4, 1, "K_2^1", "K(2,1)");
    row(a, 3, 1, 0, 3, "K_3^3", "K(3,3)");
    row(a, 3, 2, 3, 3, "K_3^2", "K(3,2)");
    row(a, 3, 3, 6, 1, "K_3^1", "K(3,1)");
    row(a, 4, 1, -1, 3, "K_3^3", "K(3,3)");
    row(a, 4, 2, 2, 6, "K_4^3", "K(4,3)");
    row(a, 4, 3, 5, 4, "K_4^2", "K(4,2)");
    row(a, 4, 4, 8, 1, "K_4^1", "K(4,1)");
    row(a, 5, 1, -2, 3, "K_3^3", "K(3,3)");
    row(a, 5, 2, 1, 7, "T_5^3", "T3(5)");
    row(a, 5, 3, 4, 10, "K_5^3", "K(5,3)");
    row(a, 5, 4, 7, 5, "K_5^2", "K(5,2)");
    row(a, 5, 5, 10, 1, "K_5^1", "K(5,1)");
    row(a, 6, 1, -3, 3, "K_3^3", "K(3,3)");
    row(a, 6, 2, 0, 9, "K_6^3", "2*K(3,3)", "label K_6^3 has tau 4; the second listing's 2*K_3^3 is built");
    row(a, 6, 3, 3, 14, "T_6^3", "T3(6)");
    row(a, 6, 4, 6, 15, "K_6^3", "K(6,3)");
    row(a, 6, 5, 9, 6, "K_6^2", "K(6,2)");
    row(a, 6, 6, 12, 1, "K_6^1", "K(6,1)");

    // Type 0, second listing (up to n = 12).
    const char* b = "phi0";
    row(b, 3, 1, 0, 3, "K_3^3", "K(3,3)");
    row(b, 3, 2, 3, 3, "K_3^2", "K(3,2)");
    row(b, 3, 3, 6, 1, "K_3^1", "K(3,1)");
    row(b, 4, 1, -1, 3, "K_3^3", "K(3,3)");
    row(b, 4, 2, 2, 6, "K_4^3", "K(4,3)");
    row(b, 4, 3, 5, 4, "K_4^2", "K(4,2)");
    row(b, 4, 4, 8, 1, "K_4^1", "K(4,1)");
    row(b, 5, 1, -2, 2, "K_3^3", "K(3,3)", "",
        "printed 2, but K_3^3 has 3 one-transversals and the n <= 6 listing prints 3");
    row(b, 5, 2, 1, 7, "T_5^3", "T3(5)");
    row(b, 5, 3, 4, 10, "K_5^3", "K(5,3)");
    row(b, 5, 4, 7, 5, "K_5^2", "K(5,2)");
    row(b, 5, 5, 7, 1, "K_5^1", "K(5,1)", "printed s=7; 3t-n is 10");
    row(b, 6, 1, -3, 2, "K_3^3", "K(3,3)", "",
        "printed 2, but K_3^3 has 3 one-transversals and the n <= 6 listing prints 3");
    row(b, 6, 2, 0, 9, "2*K_3^3", "2*K(3,3)");
    row(b, 6, 3, 3, 14, "T_6^3", "T3(6)");
    row(b, 6, 4, 6, 15, "K_6^3", "K(6,3)");
    row(b, 6, 5, 9, 6, "K_6^2", "K(6,2)");
    row(b, 6, 6, 12, 1, "K_6^1", "K(6,1)");
    row(b, 7, 1, -4, 3, "K_3^3", "K(3,3)");
    row(b, 7, 2, -1, 9, "2*K_3^3", "2*K(3,3)");
    row(b, 7, 3, 2, 18, "K_3^3+K_4^3", "K(3,3) + K(4,3)");
    row(b, 7, 4, 5, 23, "T_7^3", "T3(7)");
    row(b, 8, 3, 1, 21, "K_3^3+T_5^3", "K(3,3) + T3(5)");
    row(b, 8, 4, 4, 36, "2*K_4^3", "2*K(4,3)");
    row(b, 8, 5, 7, 36, "T_8^5", "T3(8)", "label T_8^5 read as T_8^3");
    row(b, 9, 4, 3, 42, "K_3^3+T_6^3", "K(3,3) + T3(6)");
    row(b, 9, 4, 3, 42, "K_4^3+T_5^3", "K(4,3) + T3(5)");
    row(b, 9, 5, 6, 60, "K_4^3+K_5^3", "K(4,3) + K(5,3)");
    row(b, 9, 6, 9, 54, "T_9^3", "T3(9)");
    row(b, 10, 4, 2, 54, "2*K_3^3+K_4^3", "2*K(3,3) + K(4,3)");
    row(b, 10, 5, 5, 84, "K_4^3+T_6^3", "K(4,3) + T3(6)");
    row(b, 10, 6, 8, 100, "2*K_5^3", "2*K(5,3)");
    row(b, 10, 7, 11, 75, "T_10^3", "T3(10)");
    row(b, 11, 4, 1, 63, "2*K_3^3+T_5^3", "2*K(3,3) + T3(5)");
    row(b, 11, 5, 4, 108, "K_3^3+2*K_4^3", "K(3,3) + 2*K(4,3)");
    row(b, 11, 6, 7, 140, "K_5^3+T_6^3", "K(5,3) + T3(6)");
    row(b, 11, 7, 10, 150, "K_5^3+K_6^4", "K(5,3) + K(6,3)", "label K_6^4 has tau 3; K_6^3 is built");
    row(b, 11, 8, 13, 102, "T_11^3", "T3(11)");
    row(b, 12, 5, 3, 126, "K_3^3+K_4^3+T_5^3", "K(3,3) + K(4,3) + T3(5)");
    row(b, 12, 6, 6, 216, "3*K_4^3", "3*K(4,3)");
    row(b, 12, 7, 9, 230, "K_5^3+T_7^3", "K(5,3) + T3(7)");
    row(b, 12, 8, 12, 225, "2*K_6^3", "2*K(6,3)");
    row(b, 12, 9, 15, 136, "T_12^3", "T3(12)");

    // Type 1.
    const char* c = "phi1";
    row(c, 3, 0, -3, 0, "K_2^2", "K(2,2)");
    row(c, 3, 1, 0, 2, "K_2^2", "K(2,2)");
    row(c, 3, 2, 3, 3, "K_2^2+K_3^2", "K(3,2)", "the 2-clause lies inside K_3^2");
    row(c, 3, 3, 6, 1, "K_2^2+K_3^1", "K(3,1)", "units absorb the 2-clause");
    row(c, 4, 1, -1, 2, "K_2^2", "K(2,2)");
    row(c, 4, 2, 2, 5, "K_4^{3,1}", "Kdef(4,1)");
    row(c, 4, 3, 5, 4, "K_2^2+K_4^2", "K(4,2)", "the 2-clause lies inside K_4^2");
    row(c, 4, 4, 8, 1, "K_2^2+K_4^1", "K(4,1)", "units absorb the 2-clause");
    row(c, 5, 1, -2, 2, "K_2^2", "K(2,2)");
    row(c, 5, 2, 1, 6, "K_2^2+K_3^3", "K(2,2) + K(3,3)");
    row(c, 5, 3, 4, 9, "K_2^2+K_5^3", "Kdef(5,1)", "overlapping sum, i.e. K_5^{3,1}");
    row(c, 5, 4, 7, 5, "K_2^2+K_5^2", "K(5,2)", "the 2-clause lies inside K_5^2");
    row(c, 5, 5, 7, 1, "K_2^2+K_5^1", "K(5,1)", "printed s=7; 3t-n is 10");
    row(c, 6, 1, -3, 2, "K_2^2", "K(2,2)");
    row(c, 6, 2, 0, 6, "K_2^2+K_3^3", "K(2,2) + K(3,3)");
    row(c, 6, 3, 3, 12, "K_2^2+K_4^3", "K(2,2) + K(4,3)");
    row(c, 6, 4, 6, 14, "K_6^{4,1}", "Kdef(6,1)", "label read as K_6^{3,1}");
    row(c, 6, 5, 9, 6, "K_2^2+K_6^2", "K(6,2)", "the 2-clause lies inside K_6^2");
    row(c, 6, 6, 12, 1, "K_6^1", "K(6,1)");
    row(c, 7, 1, -4, 2, "K_2^2", "K(2,2)");
    row(c, 7, 2, -1, 6, "K_2^2+K_3^3", "K(2,2) + K(3,3)");
    row(c, 7, 3, 2, 12, "K_2^2+K_4^2", "K(2,2) + K(4,3)", "label K_4^2 gives tau 4; K_4^3 is built");
    row(c, 7, 4, 5, 20, "K_7^{3,1}", "with(T3(7); 4 5)",
        "label K_7^{3,1} has tau 5; T_7^3 plus a 2-clause in a 2-element part gives 20 (a 3-element part gives 21)");
    row(c, 8, 4, 4, 30, "K_4^{3,1}+K_4^3", "Kdef(4,1) + K(4,3)");

    // Type 2o.
    const char* o = "phi2o";
    row(o, 3, 1, 0, 1, "K_3^{3,2o}", "Kdef(3,2o)");
    row(o, 3, 2, 3, 3, "K_3^2", "K(3,2)");
    row(o, 3, 3, 6, 1, "K_3^1", "K(3,1)");
    row(o, 4, 1, -1, 1, "K_3^{3,2o}", "Kdef(3,2o)");
    row(o, 4, 2, 2, 4, "K_4^{3,2o}", "Kdef(4,2o)");
    row(o, 4, 3, 5, 4, "K_4^2", "K(4,2)");
    row(o, 4, 4, 8, 1, "K_4^1", "K(4,1)");
    row(o, 5, 1, -2, 1, "K_3^{3,2o}", "Kdef(3,2o)");
    row(o, 5, 2, 1, 4, "T_5^{3,2o}", "Tdef(5,2o)");
    row(o, 5, 3, 4, 8, "K_5^{3,2o}", "Kdef(5,2o)");
    row(o, 5, 4, 7, 5, "K_5^2", "K(5,2)");
    row(o, 5, 5, 10, 1, "K_5^1", "K(5,1)");
    row(o, 6, 1, -3, 1, "K_3^{3,2o}", "Kdef(3,2o)");
    row(o, 6, 2, 0, 4, "K_4^{3,2o}", "Kdef(4,2o)");
    row(o, 6, 3, 3, 10, "T_6^{3,2o}", "Tdef(6,2o)");
    row(o, 6, 4, 6, 13, "K_6^{3,2o}", "Kdef(6,2o)");
    row(o, 6, 5, 9, 6, "K_6^2", "K(6,2)");
    row(o, 6, 6, 12, 1, "K_6^1", "K(6,1)");
    row(o, 7, 1, -4, 1, "K_3^{3,2o}", "Kdef(3,2o)");
    row(o, 7, 2, -1, 4, "K_4^{3,2o}", "Kdef(4,2o)");
    row(o, 7, 3, 2, 12, "K_4^{3,2o}+K_3^3", "Kdef(4,2o) + K(3,3)");
    row(o, 7, 4, 5, 17, "T_7^{3,2o}", "with(T3(7); 6 7; 1 6)",
        "pair in a 2-element part, third variable from the 3-element part; the best placement gives 18");
    row(o, 7, 5, 8, 19, "K_7^{3,2o}", "Kdef(7,2o)");
    row(o, 7, 6, 11, 7, "K_7^2", "K(7,2)");
    row(o, 7, 7, 14, 1, "K_7^1", "K(7,1)");
    row(o, 8, 1, -5, 1, "K_3^{3,2o}", "Kdef(3,2o)");
    row(o, 8, 2, -2, 4, "K_4^{3,2o}", "Kdef(4,2o)");
    row(o, 8, 3, 1, 12, "K_4^{3,2o}+K_3^3", "Kdef(4,2o) + K(3,3)");
    row(o, 8, 4, 4, 24, "K_4^{3,2o}+K_4^3", "Kdef(4,2o) + K(4,3)");
    row(o, 8, 6, 10, 26, "K_8^{3,2o}", "Kdef(8,2o)");
    row(o, 8, 7, 13, 8, "K_8^2", "K(8,2)");
    row(o, 8, 8, 16, 1, "K_8^1", "K(8,1)");
    row(o, 9, 1, -6, 1, "K_3^{3,2o}", "Kdef(3,2o)");
    row(o, 9, 2, -3, 4, "K_4^{3,2o}", "Kdef(4,2o)");
    row(o, 9, 3, 0, 12, "K_4^{3,2o}+K_3^3", "Kdef(4,2o) + K(3,3)");
    row(o, 9, 4, 3, 30, "T_6^{3,2o}+K_3^3", "Tdef(6,2o) + K(3,3)");
    row(o, 9, 5, 6, 48, "T_5^{3,2o}+K_4^3", "Kdef(5,2o) + K(4,3)", "label T_5^{3,2o} gives tau 4; K_5^{3,2o} is built");
    row(o, 10, 1, -7, 1, "K_3^{3,2o}", "Kdef(3,2o)");
    row(o, 10, 4, 2, 36, "K_4^{3,2o}+2*K_3^3", "Kdef(4,2o) + 2*K(3,3)");
    row(o, 10, 5, 5, 60, "T_6^{3,2o}+K_4^3", "Tdef(6,2o) + K(4,3)");
    row(o, 10, 5, 5, 60, "(ab)(ac)+K_4^3+T_5^3(bcdef)",
        "raw(10; 1 2; 1 3; 2 3 4; 2 3 5; 4 5 6; 7 8 9; 7 8 10; 7 9 10; 8 9 10)");
    row(o, 11, 1, -8, 1, "K_3^{3,2o}", "Kdef(3,2o)");
    row(o, 11, 5, 4, 72, "K_4^{3,2o}+K_4^3+K_3^3", "Kdef(4,2o) + K(4,3) + K(3,3)");
    row(o, 11, 5, 4, 72, "(ab)(ac)+K_4^3+(bcd)(efg)",
        "raw(11; 1 2; 1 3; 2 3 4; 5 6 7; 8 9 10; 8 9 11; 8 10 11; 9 10 11)");

    // Type 2d.
    const char* d = "phi2d";
    row(d, 4, 2, 2, 4, "2*K_2^2", "2*K(2,2)");
    row(d, 5, 2, 1, 4, "2*K_2^2 = T_5^{3,2d}", "Tdef(5,2d)");
    row(d, 5, 3, 4, 8, "K_5^{3,2d}", "Kdef(5,2d)");
    row(d, 5, 4, 7, 10, "K_5^2", "K(5,2)", "", "printed 10, but K_5^2 has C(5,4) = 5 four-transversals");
    row(d, 5, 5, 10, 1, "K_5^1", "K(5,1)");
    row(d, 6, 3, 3, 10, "T_6^{3,2d} = K_2^2+K_4^{3,1}", "Tdef(6,2d)");
    row(d, 6, 4, 6, 13, "K_6^{3,2d}", "Kdef(6,2d)");
    row(d, 6, 5, 9, 6, "K_6^2", "K(6,2)");
    row(d, 7, 3, 2, 12, "2*K_2^2+K_3^3", "2*K(2,2) + K(3,3)");
    row(d, 7, 4, 5, 12, "2*K_2^2+K_3^3 = T_7^{3,2d}", "Tdef(7,2d)", "",
        "printed 12 with a label of tau 3; every T_7^{3,2d} placement has tau 4 and more than 12 four-transversals");
    row(d, 8, 4, 4, 25, "2*K_4^{3,1}", "2*Kdef(4,1)");
    row(d, 9, 4, 3, 30, "T_6^{3,2d}+K_3^3", "Tdef(6,2d) + K(3,3)");
    row(d, 10, 5, 5, 60, "T_6^{3,2d}+K_4^3", "Tdef(6,2d) + K(4,3)");
    row(d, 11, 5, 4, 75, "2*K_4^{3,1}+K_3^3", "2*Kdef(4,1) + K(3,3)");
    return r;
}

} // namespace

const std::vector<GoldenRow>& golden_rows() {
    static const std::vector<GoldenRow> rows = make_rows();
    return rows;
}

GoldenCheck check_golden_row(const GoldenRow& row) {
    GoldenCheck c;
    c.row = &row;
    MonotoneCnf f = parse_spec(row.spec);
    if (f.n > row.n) {
        c.problem = "built system has " + std::to_string(f.n) + " variables";
        return c;
    }
    f = pad_to(f, row.n);
    c.tau = transversal_number(f);
    c.count = count_transversals(f, row.t);
    if (c.tau < row.t) c.problem = "tau " + std::to_string(c.tau) + " < t";
    else if (c.count != row.printed) c.problem = "count " + std::to_string(c.count) + " != printed";
    c.ok = c.problem.empty();
    return c;
}

std::vector<GoldenCheck> check_golden_tables(int jobs) {
    const auto& rows = golden_rows();
    std::vector<GoldenCheck> out(rows.size());
    detail::parallel_for(rows.size(), jobs, [&](std::size_t i) { out[i] = check_golden_row(rows[i]); });
    return out;
}

} // namespace tlab
