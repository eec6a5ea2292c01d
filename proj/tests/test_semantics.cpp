#include <gtest/gtest.h>

#include "mtd/correspondence.hpp"
#include "mtd/eval.hpp"
#include "mtd/frames.hpp"
#include "mtd/translation.hpp"

using namespace mtd;

namespace {

const STFormula sp = st::var("p");
const MTFormula p = mt::var("p");
const MTFormula q = mt::var("q");

NFrame f1() {
    NFrame f(1);
    f.add_neighbourhood(0, 0b1);
    return f;
}

CFrame id_frame() {
    CFrame c(1);
    c.set_select(0, 0b1, 0b1);
    return c;
}

// Supportedness unfolded quantifier by quantifier.
bool supported_oracle(const TwoSortedFrame& k) {
    for (Subset d = 0; d <= k.x_universe(); ++d)
        for (std::size_t x = 0; x < k.x_size(); ++x) {
            bool lhs = false;
            for (std::size_t y = 0; y < k.y_size(); ++y) {
                if (!k.r_nu().holds(x, y)) continue;
                bool all = true;
                for (std::size_t z = 0; z < k.x_size(); ++z)
                    if (k.r_ni().holds(y, z) && !contains(d, z)) all = false;
                lhs = lhs || all;
            }
            bool rhs = true;
            for (std::size_t y = 0; y < k.y_size(); ++y) {
                if (!k.r_nuc().holds(x, y)) continue;
                bool some = false;
                for (std::size_t z = 0; z < k.x_size(); ++z)
                    if (k.r_notni().holds(y, z) && contains(d, z)) some = true;
                rhs = rhs && some;
            }
            if (lhs != rhs) return false;
        }
    return true;
}

} // namespace

TEST(Eval, SingleTypeExamples) {
    EXPECT_EQ(eval_st(f1(), {{sp.name(), 0b1}}, st::nabla(sp)), 0b1U);
    EXPECT_EQ(eval_st(NFrame(1), {}, st::nabla(st::top())), 0U);
    EXPECT_EQ(eval_st(id_frame(), {{sp.name(), 0b1}}, st::cond(sp, sp)), 0b1U);
    EXPECT_THROW(eval_st(f1(), {}, st::nabla(sp)), EvalError);
    EXPECT_THROW(eval_st(f1(), {}, st::cond(st::top(), st::top())), EvalError);
}

TEST(Eval, MultiTypeExamples) {
    const auto k = star(f1());
    EXPECT_EQ(eval_mt(k, {{p.name(), 0b1}}, mt::dia_nu(mt::box_ni(p))), 0b1U);
    // only the empty neighbourhood (code 0) satisfies the vacuous box
    EXPECT_EQ(eval_mt(k, {}, mt::box_ni(mt::bot())), 0b01U);

    CFrame c(2);
    c.set_select(0, 0b01, 0b11);
    const auto kc = star(c);
    // vacuous triangle: the N-argument is empty everywhere
    EXPECT_EQ(eval_mt(kc, {{p.name(), 0b01}}, mt::tri(mt::zero(), p)), kc.x_universe());
}

TEST(Eval, Validity) {
    const auto t = st::implies(st::nabla(sp), sp);
    EXPECT_TRUE(valid(f1(), t));
    NFrame g(1);
    g.add_neighbourhood(0, 0);
    g.add_neighbourhood(0, 0b1);
    EXPECT_FALSE(valid(g, t));
    EXPECT_TRUE(valid(g, st::implies(sp, sp)));
    EXPECT_TRUE(valid(id_frame(), st::cond(sp, sp)));
}

TEST(Eval, RefuteGivesWitness) {
    NFrame g(1);
    g.add_neighbourhood(0, 0);
    g.add_neighbourhood(0, 0b1);
    const Inequality t(mt::dia_nu(mt::box_ni(p)), p);
    auto w = refute(star(g), t);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->at(p.name()), 0U);
}

TEST(Frames, StarOfSingleton) {
    const auto k = star(f1());
    EXPECT_EQ(k.x_size(), 1U);
    EXPECT_EQ(k.y_size(), 2U);
    EXPECT_EQ(k.r_nu().successors(0), 0b10U);
    EXPECT_EQ(k.r_nuc().successors(0), 0b01U);
    EXPECT_EQ(k.r_ni().successors(1), 0b1U);
    EXPECT_EQ(k.r_ni().successors(0), 0U);
    EXPECT_EQ(k.r_notni().successors(0), 0b1U);
    EXPECT_EQ(k.r_notni().successors(1), 0U);
    EXPECT_EQ(star(NFrame(2)).y_size(), 4U);
}

TEST(Frames, Supportedness) {
    EXPECT_TRUE(is_supported(star(f1())));
    const auto empty = TwoSortedFrame::neighbourhood(Relation(1, 1), Relation(1, 1), Relation(1, 1), Relation(1, 1));
    EXPECT_FALSE(is_supported(empty));
    const auto none = TwoSortedFrame::neighbourhood(Relation(0, 0), Relation(0, 0), Relation(0, 0), Relation(0, 0));
    EXPECT_TRUE(is_supported(none));
    EXPECT_THROW(unstar_neighbourhood(empty), FrameError);
}

TEST(Frames, SupportednessMatchesOracle) {
    for (std::size_t nx = 0; nx <= 2; ++nx)
        for (std::size_t ny = 0; ny <= 2; ++ny) {
            std::uint64_t passing = 0;
            enumerate_two_sorted(nx, ny, FrameKind::Neighbourhood, false, [&](const TwoSortedFrame& k) {
                EXPECT_EQ(is_supported(k), supported_oracle(k));
                passing += supported_oracle(k) ? 1 : 0;
                return true;
            });
            EXPECT_EQ(supported_frames(nx, ny).size(), passing);
        }
}

TEST(Frames, TwoSortedEnumerationCounts) {
    std::uint64_t n = 0;
    enumerate_two_sorted(1, 1, FrameKind::Neighbourhood, false, [&](const TwoSortedFrame&) { return ++n, true; });
    EXPECT_EQ(n, 16U);
    n = 0;
    enumerate_two_sorted(0, 0, FrameKind::Neighbourhood, true, [&](const TwoSortedFrame&) { return ++n, true; });
    EXPECT_EQ(n, 1U);
}

TEST(Frames, RoundTrips) {
    EXPECT_EQ(unstar_neighbourhood(star(f1())), f1());
    NFrame f3(2);
    for (std::size_t w = 0; w < 2; ++w) {
        f3.add_neighbourhood(w, 0b01);
        f3.add_neighbourhood(w, 0b11);
    }
    EXPECT_EQ(unstar_neighbourhood(star(f3)), f3);
    enumerate_nframes(2, [](const NFrame& f) {
        const auto k = star(f);
        EXPECT_TRUE(is_supported(k));
        EXPECT_EQ(unstar_neighbourhood(k), f);
        return true;
    });
    enumerate_cframes(1, [](const CFrame& f) {
        EXPECT_EQ(unstar_conditional(star(f)), f);
        return true;
    });
}

TEST(Frames, Monotonicity) {
    NFrame g(2);
    g.add_neighbourhood(0, 0b01);
    EXPECT_FALSE(g.is_monotone());
    EXPECT_FALSE(g.monotonicity_violation().empty());
    g.add_neighbourhood(0, 0b11);
    EXPECT_TRUE(g.is_monotone());
}

TEST(Translation, Examples) {
    const STFormula np = st::nabla(sp);
    EXPECT_EQ(tau1(np), mt::dia_nu(mt::box_ni(p)));
    EXPECT_EQ(tau1(st::neg(np)), mt::neg(mt::box_nuc(mt::dia_notni(p))));
    EXPECT_EQ(tau1(sp), p);
    EXPECT_EQ(tau2(np), mt::box_nuc(mt::dia_notni(p)));
    EXPECT_EQ(tau2(st::neg(np)), mt::neg(mt::dia_nu(mt::box_ni(p))));
    EXPECT_EQ(tau2(st::bot()), mt::bot());

    const STFormula sq = st::var("q");
    const MTFormula alpha = mt::cap(mt::box_ni(p), mt::boxr_notni(p));
    EXPECT_EQ(tau_cond(st::cond(sp, sq)), mt::tri(alpha, q));
    EXPECT_EQ(tau_cond(st::cond(sp, sp)), mt::tri(alpha, p));
    EXPECT_EQ(tau_cond(st::neg(st::cond(sp, sq))), mt::neg(mt::tri(alpha, q)));
    EXPECT_THROW(tau1(st::cond(sp, sq)), TranslationError);
}

TEST(Translation, Sequents) {
    const auto t = translate_sequent(st::nabla(sp), sp);
    EXPECT_EQ(t, Inequality(mt::dia_nu(mt::box_ni(p)), p));
    const auto c = translate_sequent(st::conj(st::nabla(sp), st::nabla(st::var("q"))),
                                     st::nabla(st::conj(sp, st::var("q"))));
    EXPECT_EQ(c, Inequality(mt::conj(mt::dia_nu(mt::box_ni(p)), mt::dia_nu(mt::box_ni(q))),
                            mt::box_nuc(mt::dia_notni(mt::conj(p, q)))));
    EXPECT_EQ(translate_sequent(sp, sp), Inequality(p, p));
}

TEST(Translation, TransferOnSmallFrames) {
    for (AxiomId a : kAllAxioms) {
        const auto seq = axiom_sequent(a);
        const auto tr = axiom_translation(a);
        if (is_conditional(a)) {
            enumerate_cframes(1, [&](const CFrame& f) {
                EXPECT_EQ(valid(f, seq.lhs, seq.rhs), valid(star(f), tr)) << to_string(a);
                return true;
            });
        } else {
            enumerate_nframes(2, [&](const NFrame& f) {
                EXPECT_EQ(valid(f, seq.lhs, seq.rhs), valid(star(f), tr)) << to_string(a);
                return true;
            });
        }
    }
}
