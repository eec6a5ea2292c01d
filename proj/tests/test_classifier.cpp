#include <gtest/gtest.h>

#include "mtd/classifier.hpp"
#include "mtd/correspondence.hpp"
#include "support/generators.hpp"

using namespace mtd;

namespace {

const MTFormula p = mt::var("p");
const MTFormula q = mt::var("q");

void expect_mirror(const SignedNode& a, const SignedNode& b) {
    ASSERT_EQ(a.formula, b.formula);
    ASSERT_EQ(a.sign, flip(b.sign));
    ASSERT_EQ(a.children.size(), b.children.size());
    for (std::size_t i = 0; i < a.children.size(); ++i) expect_mirror(a.children[i], b.children[i]);
}

void expect_same(const SignedNode& a, const SignedNode& b) {
    ASSERT_EQ(a.formula, b.formula);
    ASSERT_EQ(a.sign, b.sign);
    ASSERT_EQ(a.children.size(), b.children.size());
    for (std::size_t i = 0; i < a.children.size(); ++i) expect_same(a.children[i], b.children[i]);
}

OrderType eps(std::initializer_list<std::pair<const char*, bool>> xs) {
    OrderType e;
    for (auto [v, pos] : xs) e.set(Symbol(v), pos);
    return e;
}

} // namespace

TEST(Classifier, SignedTreeExamples) {
    const auto t = signed_tree(mt::dia_nu(mt::box_ni(p)), Sign::Plus);
    EXPECT_EQ(t.roles.skeleton, NodeClass::SLR);
    EXPECT_FALSE(t.roles.pia.has_value());
    const auto& ni = t.children.at(0);
    EXPECT_EQ(ni.sign, Sign::Plus);
    EXPECT_EQ(ni.roles.pia, NodeClass::SRA);
    EXPECT_EQ(ni.children.at(0).label(), "+p");

    const auto n = signed_tree(mt::neg(p), Sign::Plus);
    EXPECT_EQ(n.children.at(0).sign, Sign::Minus);

    const auto tri = signed_tree(mt::tri(mt::box_ni(p), q), Sign::Plus);
    EXPECT_EQ(tri.roles.pia, NodeClass::SRA);
    EXPECT_EQ(tri.children.at(0).sign, Sign::Minus);
    EXPECT_EQ(tri.children.at(0).roles.skeleton, NodeClass::SLR);
    EXPECT_EQ(tri.children.at(1).sign, Sign::Plus);
}

TEST(Classifier, TableCells) {
    EXPECT_EQ(classify_node(MTKind::DiaNu, Sign::Minus).pia, NodeClass::SRA);
    EXPECT_EQ(classify_node(MTKind::BoxNi, Sign::Minus).skeleton, NodeClass::SLR);
    EXPECT_EQ(classify_node(MTKind::And, Sign::Minus).pia, NodeClass::SRR);
    EXPECT_EQ(classify_node(MTKind::And, Sign::Minus).skeleton, NodeClass::DeltaAdjoint);
    EXPECT_EQ(classify_node(MTKind::Or, Sign::Plus).pia, NodeClass::SRR);
    EXPECT_FALSE(classify_node(MTKind::Var, Sign::Plus).pia.has_value());
}

TEST(Classifier, CriticalBranches) {
    const auto t = signed_tree(mt::dia_nu(mt::box_ni(p)), Sign::Plus);
    EXPECT_EQ(critical_branches(t, eps({{"p", true}})).size(), 1U);
    EXPECT_TRUE(critical_branches(t, eps({{"p", false}})).empty());

    const auto u = signed_tree(mt::conj(p, mt::neg(q)), Sign::Plus);
    EXPECT_EQ(critical_branches(u, eps({{"p", true}, {"q", false}})).size(), 2U);
}

TEST(Classifier, GoodBranches) {
    const auto t = signed_tree(mt::dia_nu(mt::box_ni(p)), Sign::Plus);
    ASSERT_EQ(all_branches(t).size(), 1U);
    EXPECT_TRUE(is_good_branch(all_branches(t).front()));

    const auto bad = signed_tree(mt::box_ni(mt::dia_nu(mt::box_ni(p))), Sign::Plus);
    EXPECT_FALSE(is_good_branch(all_branches(bad).front()));

    const auto leaf = signed_tree(p, Sign::Plus);
    EXPECT_TRUE(is_good_branch(all_branches(leaf).front()));
}

TEST(Classifier, InequalityExamples) {
    const auto t = is_analytic_inductive(Inequality(mt::dia_nu(mt::box_ni(p)), p));
    EXPECT_TRUE(t.analytic);
    EXPECT_TRUE(t.epsilon.has_value());
    EXPECT_TRUE(t.omega.has_value());

    const auto four = is_analytic_inductive(
        Inequality(mt::dia_nu(mt::box_ni(mt::dia_nu(mt::box_ni(p)))), mt::box_nuc(mt::dia_notni(p))));
    EXPECT_FALSE(four.analytic);
    EXPECT_TRUE(four.failure.has_value());

    EXPECT_TRUE(is_analytic_inductive(Inequality(p, p)).analytic);
}

TEST(Classifier, AxiomTable) {
    const auto rows = classify_axiom_table();
    ASSERT_EQ(rows.size(), 12U);
    for (const auto& r : rows) EXPECT_TRUE(r.matches()) << to_string(r.axiom) << ": " << r.result.failure.value_or("");
    const auto c = axiom_table_row(AxiomId::C);
    EXPECT_EQ(c, Inequality(mt::conj(mt::dia_nu(mt::box_ni(p)), mt::dia_nu(mt::box_ni(q))),
                            mt::box_nuc(mt::dia_notni(mt::conj(p, q)))));
    const MTFormula alpha = mt::cap(mt::box_ni(p), mt::boxr_notni(p));
    EXPECT_EQ(axiom_table_row(AxiomId::CEM),
              Inequality(mt::top(), mt::disj(mt::tri(alpha, q), mt::tri(alpha, mt::neg(q)))));
}

TEST(Classifier, WitnessImpliesAnalytic) {
    proptest::FormulaGen gen(21);
    for (int i = 0; i < 300; ++i) {
        const Inequality ineq(gen.mt(Sort::S, 3), gen.mt(Sort::S, 3));
        if (!n_variables(ineq.lhs).empty() || !n_variables(ineq.rhs).empty()) continue;
        const auto r = is_analytic_inductive(ineq);
        EXPECT_EQ(r.analytic, r.epsilon.has_value());
        if (r.analytic) {
            EXPECT_TRUE(r.omega->is_strict());
            EXPECT_FALSE(r.failure.has_value());
        }
    }
}

TEST(Classifier, SignFlipInvolution) {
    proptest::FormulaGen gen(22);
    for (int i = 0; i < 1200; ++i) {
        const MTFormula f = gen.mt(i % 2 ? Sort::S : Sort::N, 5);
        const auto plus = signed_tree(f, Sign::Plus);
        const auto minus = signed_tree(f, Sign::Minus);
        expect_mirror(plus, minus);
        expect_same(plus, signed_tree(f, flip(flip(Sign::Plus))));
    }
}
