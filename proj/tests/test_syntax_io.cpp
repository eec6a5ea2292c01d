#include <gtest/gtest.h>

#include "mtd/calculus.hpp"
#include "mtd/text_io.hpp"
#include "support/generators.hpp"

using namespace mtd;

namespace {
const MTFormula p = mt::var("p");
const MTFormula q = mt::var("q");
const MTFormula r = mt::var("r");
MTFormula alpha(const MTFormula& a) { return mt::cap(mt::box_ni(a), mt::boxr_notni(a)); }
} // namespace

TEST(Syntax, WellSorted) {
    EXPECT_TRUE(well_sorted(mt::dia_nu(mt::box_ni(p))));
    EXPECT_TRUE(well_sorted(p));
    EXPECT_FALSE(well_sorted(MTFormula(MTKind::DiaNu, {p})));
}

TEST(Syntax, Substitute) {
    EXPECT_EQ(substitute(mt::dia_nu(mt::box_ni(p)), p.name(), mt::conj(q, r)),
              mt::dia_nu(mt::box_ni(mt::conj(q, r))));
    EXPECT_EQ(substitute(q, p.name(), r), q);
    EXPECT_EQ(substitute(alpha(p), p.name(), mt::top()), alpha(mt::top()));
    EXPECT_THROW(substitute(p, p.name(), mt::one()), SortError);
}

TEST(Syntax, Variables) {
    EXPECT_EQ(variables(mt::conj(mt::dia_nu(mt::box_ni(p)), mt::dia_nu(mt::box_ni(q)))),
              (std::set<Symbol>{p.name(), q.name()}));
    EXPECT_TRUE(variables(mt::top()).empty());
    EXPECT_EQ(variables(mt::tri(alpha(p), q)), (std::set<Symbol>{p.name(), q.name()}));
}

TEST(Syntax, Languages) {
    EXPECT_EQ(language_of(st::nabla(st::var("p"))), STLanguage::Nabla);
    EXPECT_EQ(language_of(st::cond(st::var("p"), st::var("q"))), STLanguage::Cond);
    EXPECT_EQ(language_of(st::conj(st::nabla(st::var("p")), st::cond(st::var("p"), st::var("q")))),
              STLanguage::Mixed);
    EXPECT_EQ(language_of(mt::dia_nu(mt::box_ni(p))), MTLanguage::Nabla);
    EXPECT_EQ(language_of(mt::tri(alpha(p), q)), MTLanguage::Cond);
    EXPECT_EQ(language_of(mt::box_ni(p)), MTLanguage::Neutral);
}

TEST(Syntax, DependencyOrderStrictness) {
    DependencyOrder o;
    o.add(p.name(), q.name());
    o.add(q.name(), r.name());
    EXPECT_TRUE(o.is_strict());
    EXPECT_TRUE(o.closure().contains({p.name(), r.name()}));
    o.add(r.name(), p.name());
    EXPECT_FALSE(o.is_strict());
}

TEST(TextIo, ParseFormulaExamples) {
    EXPECT_EQ(parse_mt_formula("(dia-nu (box-ni (var p)))"), mt::dia_nu(mt::box_ni(p)));
    EXPECT_EQ(parse_mt_formula("(tri (cap (box-ni (var p)) (boxr-notni (var p))) (var q))"), mt::tri(alpha(p), q));
    EXPECT_THROW(parse_mt_formula("(dia-nu (var p))"), SortParseError);
    EXPECT_THROW(parse_mt_formula("(dia-nu (box-ni (var p))"), ParseError);
    EXPECT_THROW(parse_mt_formula("(frobnicate (var p))"), ParseError);
}

TEST(TextIo, PrintFormulaExamples) {
    EXPECT_EQ(print_formula(mt::dia_nu(mt::box_ni(p))), "(dia-nu (box-ni (var p)))");
    EXPECT_EQ(print_formula(mt::top()), "top");
    EXPECT_EQ(print_formula(mt::one()), "one");
}

TEST(TextIo, SingleTypeDetection) {
    auto f = parse_formula("(imp (nabla (var p)) (var p))");
    ASSERT_TRUE(std::holds_alternative<STFormula>(f));
    EXPECT_EQ(std::get<STFormula>(f), st::implies(st::nabla(st::var("p")), st::var("p")));
    EXPECT_TRUE(std::holds_alternative<MTFormula>(parse_formula("(neg (var p))")));
}

TEST(TextIo, FrameExamples) {
    auto one = parse_frame("(nframe (worlds 0) (nu 0 ((0))))");
    ASSERT_TRUE(std::holds_alternative<NFrame>(one.frame));
    EXPECT_TRUE(std::get<NFrame>(one.frame).in_nu(0, 0b1));

    EXPECT_THROW(parse_frame("(nframe (worlds 0 1) (nu 0 ((0))) (nu 1 ()))"), ParseError);
    auto lax = parse_frame("(nframe (worlds 0 1) (nu 0 ((0))) (nu 1 ()))", false);
    EXPECT_FALSE(lax.warnings.empty());

    auto c = parse_frame("(cframe (worlds 0) (f 0 () ()) (f 0 (0) (0)))");
    ASSERT_TRUE(std::holds_alternative<CFrame>(c.frame));
    const auto& cf = std::get<CFrame>(c.frame);
    EXPECT_EQ(cf.select(0, 0), 0U);
    EXPECT_EQ(cf.select(0, 1), 1U);
}

TEST(TextIo, ProofExamples) {
    ProofTree leaf = parse_proof("(rule Id_S (seq (fml (var p)) (fml (var p))))");
    EXPECT_EQ(leaf.rule, "Id_S");
    EXPECT_TRUE(leaf.children.empty());
    EXPECT_THROW(parse_proof("(rule Bogus (seq (fml (var p)) (fml (var p))))"), ParseError);
    EXPECT_THROW(parse_proof("(rule Id_S (seq (fml (var p)) (fml (var p))) (rule Id_S (seq (fml (var p)) (fml (var p)))))"),
                 ParseError);
}

TEST(TextIo, ErrorLocations) {
    const std::string text = "(dia-nu\n  (var p))";
    try {
        parse_mt_formula(text);
        FAIL() << "expected a sort error";
    } catch (const ParseError& e) {
        EXPECT_NE(describe(e, text).find("2:"), std::string::npos) << describe(e, text);
    }
}

TEST(TextIo, ValuationRoundTrip) {
    Valuation v{{Symbol("p"), 0b101}, {Symbol("q"), 0}};
    EXPECT_EQ(parse_valuation(print_valuation(v)), v);
}

TEST(TextIo, FormulaRoundTripProperty) {
    proptest::FormulaGen gen(11);
    for (int i = 0; i < 1500; ++i) {
        const MTFormula f = gen.mt(i % 2 ? Sort::S : Sort::N, 5);
        ASSERT_TRUE(well_sorted(f));
        ASSERT_EQ(parse_mt_formula(print_formula(f)), f) << print_formula(f);
    }
    for (int i = 0; i < 1000; ++i) {
        const STFormula f = gen.st(5, i % 2 == 0);
        ASSERT_EQ(parse_st_formula(print_formula(f)), f) << print_formula(f);
    }
}

TEST(TextIo, StructureRoundTripProperty) {
    proptest::FormulaGen gen(12);
    for (int i = 0; i < 1500; ++i) {
        const Structure s = gen.structure(i % 2 ? Sort::S : Sort::N, 5);
        ASSERT_TRUE(well_sorted(s));
        ASSERT_EQ(parse_structure(print_structure(s)), s) << print_structure(s);
        const Sequent seq{s, s};
        ASSERT_EQ(parse_sequent(print_sequent(seq)), seq);
    }
}

TEST(TextIo, FrameRoundTrip) {
    NFrame f(2);
    f.add_neighbourhood(0, 0b01);
    f.add_neighbourhood(0, 0b11);
    f.add_neighbourhood(1, 0b11);
    auto back = parse_frame(print_frame(f));
    EXPECT_EQ(std::get<NFrame>(back.frame), f);

    CFrame c(2);
    c.set_select(1, 0b10, 0b01);
    EXPECT_EQ(std::get<CFrame>(parse_frame(print_frame(c)).frame), c);

    const auto k = star(f);
    EXPECT_EQ(std::get<TwoSortedFrame>(parse_frame(print_frame(k)).frame), k);
}
