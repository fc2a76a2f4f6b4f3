#include <set>
#include <tuple>

#include "test_util.hpp"
#include "tlab/golden.hpp"

using namespace tlab;

namespace {

const GoldenRow* find_row(const std::string& table, int n, int t) {
    for (const auto& r : golden_rows())
        if (r.table == table && r.n == n && r.t == t) return &r;
    return nullptr;
}

} // namespace

TEST(Golden, RowsAreWellFormed) {
    const auto& rows = golden_rows();
    EXPECT_EQ(rows.size(), 147u);
    // a table may print two constructions for the same (n, t)
    std::set<std::tuple<std::string, int, int, std::string>> keys;
    const std::set<std::string> tables = {"phi0.small", "phi0", "phi1", "phi2o", "phi2d"};
    for (const auto& r : rows) {
        EXPECT_TRUE(tables.count(r.table)) << r.table;
        EXPECT_TRUE(keys.insert({r.table, r.n, r.t, r.spec}).second) << r.table << " " << r.n << "," << r.t;
        EXPECT_LE(r.n, 12);
        EXPECT_FALSE(r.spec.empty());
        if (r.s != 3 * r.t - r.n) {
            EXPECT_FALSE(r.note.empty() && r.erratum.empty()) << r.table << " " << r.n << "," << r.t;
        }
    }
}

TEST(Golden, Examples) {
    struct Want {
        const char* table;
        int n, t;
        std::uint64_t count;
    };
    for (const Want& w : {Want{"phi0", 9, 4, 42}, Want{"phi0", 8, 4, 36}, Want{"phi2d", 11, 5, 75},
                          Want{"phi2o", 6, 3, 10}, Want{"phi1", 5, 2, 6}, Want{"phi2d", 4, 2, 4}}) {
        const GoldenRow* r = find_row(w.table, w.n, w.t);
        ASSERT_NE(r, nullptr) << w.table << " " << w.n << "," << w.t;
        EXPECT_EQ(r->printed, w.count);
        const auto c = check_golden_row(*r);
        EXPECT_TRUE(c.ok) << c.problem;
        EXPECT_EQ(c.count, w.count);
    }
}

// Every row rebuilds to its printed count, apart from the rows marked as errata,
// which must still disagree.
TEST(Golden, AllRows) {
    int errata = 0;
    for (const auto& c : check_golden_tables(2)) {
        const GoldenRow& r = *c.row;
        SCOPED_TRACE(r.table + " n=" + std::to_string(r.n) + " t=" + std::to_string(r.t) + " " + r.spec);
        if (r.erratum.empty()) {
            EXPECT_TRUE(c.ok) << c.problem;
        } else {
            ++errata;
            EXPECT_FALSE(c.ok);
            EXPECT_GE(c.tau, r.t);
        }
    }
    EXPECT_EQ(errata, 4);
}

TEST(Golden, ErrataRows) {
    const GoldenRow* r = find_row("phi2d", 7, 4);
    ASSERT_NE(r, nullptr);
    EXPECT_FALSE(r->erratum.empty());
    const auto c = check_golden_row(*r);
    EXPECT_NE(c.count, r->printed);
    const GoldenRow* p = find_row("phi0", 5, 1);
    ASSERT_NE(p, nullptr);
    EXPECT_EQ(check_golden_row(*p).count, 3u);
}
