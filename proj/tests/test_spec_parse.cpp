#include "test_util.hpp"
#include "tlab/constructions.hpp"
#include "tlab/spec_parse.hpp"

using namespace tlab;
using namespace tlab::test;

namespace {

void expect_same(const MonotoneCnf& a, const MonotoneCnf& b) {
    EXPECT_EQ(a.n, b.n);
    EXPECT_EQ(a.universe, b.universe);
    EXPECT_EQ(to_mcnf(a), to_mcnf(b));
}

} // namespace

TEST(SpecParse, Blocks) {
    expect_same(parse_spec("K(4,3)"), clique(4, 3));
    expect_same(parse_spec("T3(6)"), turan3(6));
    expect_same(parse_spec("Kdef(4,1)"), clique_def(4, Defect::D1));
    expect_same(parse_spec("Kdef(5,2o)"), clique_def(5, Defect::D2o));
    expect_same(parse_spec("Tdef(7,2d)"), turan_def(7, Defect::D2d));
    expect_same(parse_spec("n3tm1(t=3)"), build_3t_minus_1(3));
}

TEST(SpecParse, Families) {
    expect_same(parse_spec("P(s=1,t=3)"), build_family({FormulaType::T0, 1, 3}));
    expect_same(parse_spec("fam(2d, s=4, t=5)"), build_family({FormulaType::T2d, 4, 5}));
    EXPECT_ERRC(parse_spec("fam(9,s=1,t=2)"), Errc::ParseError);
    EXPECT_ERRC(parse_spec("P(s=5,t=2)"), Errc::InvalidSpec);
}

TEST(SpecParse, SumsAndRepeats) {
    expect_same(parse_spec("K(3,3) + T3(6)"), disjoint_sum({clique(3, 3), turan3(6)}));
    expect_same(parse_spec("2*Kdef(4,1) + K(3,3)"),
                disjoint_sum({clique_def(4, Defect::D1), clique_def(4, Defect::D1), clique(3, 3)}));
    expect_same(parse_spec("2*(K(2,2)+K(3,3))"),
                disjoint_sum({clique(2, 2), clique(3, 3), clique(2, 2), clique(3, 3)}));
    EXPECT_EQ(parse_spec("0*K(3,3)").n, 0);
}

TEST(SpecParse, WithRawPad) {
    const auto w = parse_spec("with(T3(7); 4 5)");
    expect_same(w, with_clauses(turan3(7), {vs({3, 4})}));

    const auto r = parse_spec("raw(5; 1 2 3; 3 4 5; 1 2 4)");
    expect_same(r, t5());

    const auto p = parse_spec("pad(9; K(3,3))");
    EXPECT_EQ(p.n, 9);
    EXPECT_EQ(p.num_vars(), 9);
    EXPECT_EQ(p.clauses, clique(3, 3).clauses);

    // normalisation drops the superset
    EXPECT_EQ(parse_spec("raw(3; 1 2; 1 2 3)").clauses, std::vector<VarSet>{vs({0, 1})});
}

TEST(SpecParse, Whitespace) {
    expect_same(parse_spec("  K( 3 , 3 )+  T3( 5 ) "), disjoint_sum({clique(3, 3), turan3(5)}));
}

TEST(SpecParse, Errors) {
    EXPECT_ERRC(parse_spec(""), Errc::ParseError);
    EXPECT_ERRC(parse_spec("Q(3)"), Errc::ParseError);
    EXPECT_ERRC(parse_spec("K(3,3) junk"), Errc::ParseError);
    EXPECT_ERRC(parse_spec("K(3,3"), Errc::ParseError);
    EXPECT_ERRC(parse_spec("Kdef(4,3)"), Errc::ParseError);
    EXPECT_ERRC(parse_spec("raw(3; 1 4)"), Errc::ParseError);
    EXPECT_ERRC(parse_spec("raw(5; 1 2 3 4)"), Errc::ParseError);
    EXPECT_ERRC(parse_spec("raw(3; )"), Errc::ParseError);
    EXPECT_ERRC(parse_spec("raw(65)"), Errc::ParseError);
    EXPECT_ERRC(parse_spec("P(t=1,s=1)"), Errc::ParseError);
    EXPECT_ERRC(parse_spec("K(3,4)"), Errc::InvalidSpec);
    EXPECT_ERRC(parse_spec("pad(2; K(3,3))"), Errc::InvalidSpec);
    EXPECT_ERRC(parse_spec("22*K(3,3)"), Errc::CombinedUniverseTooLarge);
}

TEST(SpecParse, ErrorNamesOffset) {
    try {
        parse_spec("K(3,3) + Q(1)");
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("offset 9"), std::string::npos) << e.what();
    }
}
