#include <gtest/gtest.h>

#include <random>

#include "mtd/relations.hpp"

using namespace mtd;

namespace {

// Pointwise unfolding of the operator definitions, kept apart from the library.
struct Oracle {
    static Subset dia(const Relation& r, Subset t) {
        Subset out = 0;
        for (std::size_t s = 0; s < r.source_size(); ++s)
            for (std::size_t u = 0; u < r.target_size(); ++u)
                if (r.holds(s, u) && contains(t, u)) out |= singleton(s);
        return out;
    }
    static Subset box(const Relation& r, Subset t) {
        Subset out = 0;
        for (std::size_t s = 0; s < r.source_size(); ++s) {
            bool all = true;
            for (std::size_t u = 0; u < r.target_size(); ++u)
                if (r.holds(s, u) && !contains(t, u)) all = false;
            if (all) out |= singleton(s);
        }
        return out;
    }
    static Subset tri(const TernaryRelation& r, Subset t_arg, Subset u_arg) {
        Subset out = 0;
        for (std::size_t s = 0; s < r.first_size(); ++s) {
            bool all = true;
            for (std::size_t t = 0; t < r.second_size(); ++t)
                for (std::size_t u = 0; u < r.third_size(); ++u)
                    if (contains(t_arg, t) && r.holds(s, t, u) && !contains(u_arg, u)) all = false;
            if (all) out |= singleton(s);
        }
        return out;
    }
};

Relation relation_from(std::size_t ns, std::size_t nt, std::uint64_t code) {
    Relation r(ns, nt);
    for (std::size_t s = 0; s < ns; ++s)
        for (std::size_t t = 0; t < nt; ++t)
            if (contains(code, s * nt + t)) r.add(s, t);
    return r;
}

} // namespace

TEST(Relations, SpecExamples) {
    Relation r(1, 2);
    r.add(0, 1);
    EXPECT_EQ(rel_dia(r, 0b10), 0b1U);

    Relation empty(3, 2);
    for (Subset t = 0; t < 4; ++t) EXPECT_EQ(rel_box(empty, t), full_set(3));

    // S = T = {1,2} as indices {0,1}; R = {(1,1),(1,2),(2,2)}, T' = {2}
    Relation q(2, 2);
    q.add(0, 0);
    q.add(0, 1);
    q.add(1, 1);
    EXPECT_EQ(rel_box(q, 0b10), 0b10U);
    EXPECT_EQ(rel_diar(q, 0b10), 0b01U);
}

TEST(Relations, TernaryExamples) {
    TernaryRelation empty(2, 2, 2);
    for (Subset t = 0; t < 4; ++t)
        for (Subset u = 0; u < 4; ++u) EXPECT_EQ(tern_tri(empty, t, u), 0b11U);

    TernaryRelation one(2, 2, 2);
    one.add(0, 1, 1);
    EXPECT_EQ(tern_tri(one, 0b10, 0), 0b10U);
}

TEST(Relations, OperatorsMatchOracle) {
    for (std::size_t ns = 0; ns <= 3; ++ns)
        for (std::size_t nt = 0; nt <= 3; ++nt)
            for (std::uint64_t code = 0; code < (1U << (ns * nt)); ++code) {
                const Relation r = relation_from(ns, nt, code);
                for (Subset t = 0; t <= full_set(nt); ++t) {
                    ASSERT_EQ(rel_dia(r, t), Oracle::dia(r, t));
                    ASSERT_EQ(rel_box(r, t), Oracle::box(r, t));
                    ASSERT_EQ(rel_boxr(r, t), full_set(ns) & ~Oracle::dia(r, t));
                    ASSERT_EQ(rel_diar(r, t), Oracle::dia(r, full_set(nt) & ~t));
                    ASSERT_EQ(image(r, full_set(ns)) & t, Oracle::dia(r.converse(), full_set(ns)) & t);
                }
            }
}

TEST(Relations, TernaryMatchesOracleOnRandomRelations) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        TernaryRelation r(3, 3, 3);
        for (std::size_t s = 0; s < 3; ++s)
            for (std::size_t t = 0; t < 3; ++t) r.set_successors(s, t, rng() & 7U);
        for (Subset a = 0; a < 8; ++a)
            for (Subset b = 0; b < 8; ++b) ASSERT_EQ(tern_tri(r, a, b), Oracle::tri(r, a, b));
    }
}

TEST(Relations, ConverseIsInvolution) {
    for (std::uint64_t code = 0; code < 64; ++code) {
        const Relation r = relation_from(2, 3, code);
        EXPECT_EQ(r.converse().converse(), r);
        EXPECT_EQ(r.converse().source_size(), 3U);
    }
}

TEST(Relations, CarrierBounds) {
    EXPECT_THROW(check_within(0b100, 2, "test"), CarrierError);
    EXPECT_NO_THROW(check_within(0b11, 2, "test"));
    Relation r(2, 2);
    EXPECT_THROW(r.add(2, 0), std::exception);
}
