#include <gtest/gtest.h>

#include <set>

#include "mtd/correspondence.hpp"
#include "mtd/eval.hpp"

using namespace mtd;

namespace {

// Every family over P(n) filtered by a pointwise upward-closure check.
std::vector<Subset> upsets_oracle(std::size_t n) {
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<Subset> out;
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
        bool closed = true;
        for (Subset x = 0; x < subsets && closed; ++x)
            for (Subset y = 0; y < subsets && closed; ++y)
                if (contains(fam, x) && (x & y) == x && !contains(fam, y)) closed = false;
        if (closed) out.push_back(fam);
    }
    return out;
}

} // namespace

TEST(Axioms, Names) {
    for (AxiomId a : kAllAxioms) EXPECT_EQ(parse_axiom(to_string(a)), a);
    EXPECT_EQ(parse_axiom("FourPrime"), AxiomId::FourPrime);
    EXPECT_FALSE(parse_axiom("Q").has_value());
}

TEST(Axioms, Formulas) {
    const STFormula p = st::var("p");
    const STFormula q = st::var("q");
    EXPECT_EQ(axiom_formula(AxiomId::T), st::implies(st::nabla(p), p));
    EXPECT_EQ(axiom_formula(AxiomId::CEM), st::disj(st::cond(p, q), st::cond(p, st::neg(q))));
    EXPECT_EQ(axiom_formula(AxiomId::ID), st::cond(p, p));
}

TEST(Axioms, ConditionExamples) {
    NFrame f1(1);
    f1.add_neighbourhood(0, 0b1);
    EXPECT_TRUE(fo_condition(AxiomId::T, f1));

    NFrame g(1);
    g.add_neighbourhood(0, 0);
    g.add_neighbourhood(0, 0b1);
    EXPECT_FALSE(fo_condition(AxiomId::P, g));

    CFrame c(1);
    c.set_select(0, 0b1, 0b1);
    EXPECT_TRUE(fo_condition(AxiomId::ID, c));
    EXPECT_THROW(fo_condition(AxiomId::ID, f1), KindMismatch);
    EXPECT_THROW(fo_condition(AxiomId::T, c), KindMismatch);
}

TEST(Enumerators, UpsetCountsMatchOracle) {
    const std::array<std::size_t, 4> expected{2, 3, 6, 20};
    for (std::size_t n = 0; n <= 3; ++n) {
        const auto oracle = upsets_oracle(n);
        EXPECT_EQ(oracle.size(), expected[n]);
        EXPECT_EQ(upsets(n), oracle);
    }
}

TEST(Enumerators, FrameCounts) {
    EXPECT_EQ(nframe_count(1), 3U);
    EXPECT_EQ(nframe_count(2), 36U);
    EXPECT_EQ(nframe_count(3), 8000U);
    EXPECT_EQ(cframe_count(0), 1U);
    EXPECT_EQ(cframe_count(1), 4U);
    EXPECT_EQ(cframe_count(2), 65536U);
}

TEST(Enumerators, DuplicateFreeAndComplete) {
    for (std::size_t n = 1; n <= 2; ++n) {
        std::set<std::vector<Subset>> seen;
        enumerate_nframes(n, [&](const NFrame& f) {
            EXPECT_TRUE(f.is_monotone());
            std::vector<Subset> key;
            for (std::size_t w = 0; w < n; ++w) key.push_back(f.family(w));
            EXPECT_TRUE(seen.insert(key).second);
            return true;
        });
        EXPECT_EQ(seen.size(), nframe_count(n));
    }
    std::set<std::vector<Subset>> cseen;
    std::uint64_t index = 0;
    enumerate_cframes(2, [&](const CFrame& f) {
        std::vector<Subset> key;
        for (std::size_t w = 0; w < 2; ++w)
            for (Subset z = 0; z < 4; ++z) key.push_back(f.select(w, z));
        cseen.insert(key);
        if (index % 4099 == 0) EXPECT_EQ(cframe_at(2, index), f);
        ++index;
        return true;
    });
    EXPECT_EQ(cseen.size(), 65536U);
}

TEST(Correspondence, SmallRuns) {
    auto t = verify_correspondence(AxiomId::T, 2, 1);
    EXPECT_EQ(t.frames_per_size.at(2), 36U);
    EXPECT_EQ(t.frames_checked, 39U);
    EXPECT_TRUE(t.mismatches.empty());

    auto id = verify_correspondence(AxiomId::ID, 1, 1);
    EXPECT_EQ(id.frames_checked, 4U);
    EXPECT_TRUE(id.mismatches.empty());

    for (AxiomId a : {AxiomId::N, AxiomId::P, AxiomId::C, AxiomId::Four, AxiomId::FourPrime, AxiomId::Five,
                      AxiomId::B, AxiomId::D}) {
        auto r = verify_correspondence(a, 2, 1);
        EXPECT_TRUE(r.mismatches.empty()) << to_string(a);
    }
}

TEST(Correspondence, CsVariantsOnOneWorld) {
    auto cs = verify_correspondence(AxiomId::CS, 1, 1);
    ASSERT_TRUE(cs.guarded_mismatches.has_value());
    EXPECT_TRUE(cs.guarded_mismatches->empty());
}

TEST(Correspondence, ThreadCountDoesNotChangeReport) {
    auto a = verify_correspondence(AxiomId::CS, 2, 1);
    auto b = verify_correspondence(AxiomId::CS, 2, 3);
    ASSERT_EQ(a.mismatches.size(), b.mismatches.size());
    for (std::size_t i = 0; i < a.mismatches.size(); ++i) EXPECT_EQ(a.mismatches[i].frame_id, b.mismatches[i].frame_id);
}
