#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mtd/calculus.hpp"
#include "mtd/soundness.hpp"
#include "mtd/text_io.hpp"

using namespace mtd;

namespace {

const MTFormula A = mt::var("A");

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const RuleSchema* find_rule(const std::vector<RuleSchema>& rules, const std::string& name) {
    auto it = std::ranges::find_if(rules, [&](const RuleSchema& r) { return r.name == name; });
    return it == rules.end() ? nullptr : &*it;
}

Sequent t_root() { return parse_sequent("(seq (hnu (fml (box-ni (var A)))) (fml (var A)))"); }

ProofTree t_derivation() {
    return parse_proof("(rule T (seq (hnu (fml (box-ni (var A)))) (fml (var A)))"
                       "  (rule box-ni_L (seq (fml (box-ni (var A))) (cni (fml (var A))))"
                       "    (rule Id_S (seq (fml (var A)) (fml (var A))))))");
}

} // namespace

TEST(Calculus, RuleSets) {
    const auto base = rule_schemas(Calculus::Nabla);
    const RuleSchema* res = find_rule(base, "res_S");
    ASSERT_NE(res, nullptr);
    EXPECT_TRUE(res->bidirectional);
    EXPECT_EQ(find_rule(base, "T"), nullptr);

    const auto with_t = rule_schemas(Calculus::Nabla, {AxiomId::T});
    const RuleSchema* t = find_rule(with_t, "T");
    ASSERT_NE(t, nullptr);
    EXPECT_EQ(t->premises.size(), 1U);
    EXPECT_EQ(t->group, RuleGroup::Extension);

    const auto cem = rule_schemas(Calculus::Cond, {AxiomId::CEM});
    ASSERT_NE(find_rule(cem, "CEM"), nullptr);
    EXPECT_EQ(find_rule(cem, "CEM")->premises.size(), 5U);

    EXPECT_THROW(rule_schemas(Calculus::Nabla, {AxiomId::Four}), UnsupportedExtension);
    EXPECT_THROW(rule_schemas(Calculus::Nabla, {AxiomId::CS}), UnsupportedExtension);
    EXPECT_THROW(rule_schemas(Calculus::Cond, {AxiomId::T}), UnsupportedExtension);
}

TEST(Calculus, Matching) {
    const auto rules = rule_schemas(Calculus::Nabla, {AxiomId::T});
    const RuleSchema& id = *find_rule(rules, "Id_S");
    EXPECT_EQ(match_rule(id, parse_sequent("(seq (fml (var p)) (fml (var p)))")).size(), 1U);
    EXPECT_TRUE(match_rule(id, parse_sequent("(seq (fml (var p)) (fml (var q)))")).empty());

    const auto sigmas = match_rule(*find_rule(rules, "T"), t_root());
    ASSERT_EQ(sigmas.size(), 1U);
    const auto& s = sigmas.front();
    EXPECT_EQ(s.structures.at(Symbol("G")), sx::fml(mt::box_ni(A)));
    EXPECT_EQ(s.structures.at(Symbol("X")), sx::fml(A));
    EXPECT_EQ(instantiate(find_rule(rules, "T")->conclusion, s), t_root());
}

TEST(Calculus, ReversedRule) {
    const auto rules = rule_schemas(Calculus::Nabla);
    const RuleSchema& res = *find_rule(rules, "res_S");
    const RuleSchema back = reversed(res);
    EXPECT_EQ(back.conclusion, res.premises.front());
    EXPECT_EQ(back.premises.front(), res.conclusion);
}

TEST(Calculus, CheckProof) {
    EXPECT_FALSE(check_proof(t_derivation(), Calculus::Nabla, {AxiomId::T}).has_value());
    const auto err = check_proof(t_derivation(), Calculus::Nabla);
    ASSERT_TRUE(err.has_value());
    EXPECT_TRUE(err->path.empty());
    EXPECT_EQ(err->rule, "T");

    ProofTree wrong = t_derivation();
    wrong.children[0].children[0].conclusion = parse_sequent("(seq (fml (var B)) (fml (var B)))");
    const auto inner = check_proof(wrong, Calculus::Nabla, {AxiomId::T});
    ASSERT_TRUE(inner.has_value());
    EXPECT_FALSE(describe(*inner).empty());
}

TEST(Calculus, CorpusProofsCheck) {
    const std::vector<std::pair<AxiomId, Calculus>> corpus{
        {AxiomId::N, Calculus::Nabla}, {AxiomId::P, Calculus::Nabla}, {AxiomId::T, Calculus::Nabla},
        {AxiomId::C, Calculus::Nabla}, {AxiomId::D, Calculus::Nabla}, {AxiomId::ID, Calculus::Cond},
        {AxiomId::CS, Calculus::Cond}, {AxiomId::CEM, Calculus::Cond}};
    for (auto [a, calc] : corpus) {
        const std::string path = std::string(MTD_DATA_DIR) + "/proofs/" + to_string(a) + ".proof";
        const ProofTree proof = parse_proof(read_file(path));
        const auto err = check_proof(proof, calc, {a});
        EXPECT_FALSE(err.has_value()) << path << ": " << (err ? describe(*err) : "");
        EXPECT_TRUE(check_proof(proof, calc).has_value()) << path << " should need its extension";
    }
}

TEST(Calculus, SearchExamples) {
    const auto id = search_proof(parse_sequent("(seq (fml (var p)) (fml (var p)))"), Calculus::Nabla, {}, {1, false});
    ASSERT_TRUE(id.has_value());
    EXPECT_EQ(id->rule, "Id_S");

    const auto t = search_proof(t_root(), Calculus::Nabla, {AxiomId::T}, {4, false});
    ASSERT_TRUE(t.has_value());
    EXPECT_FALSE(check_proof(*t, Calculus::Nabla, {AxiomId::T}).has_value());
    EXPECT_EQ(t->conclusion, t_root());

    EXPECT_FALSE(search_proof(parse_sequent("(seq (fml (var p)) (fml (var q)))"), Calculus::Nabla, {}, {4, false}));
}

TEST(Calculus, SearchResultsRecheck) {
    const std::vector<std::pair<std::string, Calculus>> goals{
        {"(seq (fml (and (var p) (var q))) (fml (var p)))", Calculus::Nabla},
        {"(seq (fml (var p)) (fml (neg (neg (var p)))))", Calculus::Nabla},
        {"(seq (fml (and (var p) (var q))) (fml (and (var q) (var p))))", Calculus::Nabla},
        {"(seq (fml (dia-nu (box-ni (var p)))) (fml (dia-nu (box-ni (var p)))))", Calculus::Nabla},
        {"(seq (fml (box-nuc (dia-notni (var p)))) (fml (box-nuc (dia-notni (var p)))))", Calculus::Nabla},
        {"(seq (fml (cap (box-ni (var p)) (boxr-notni (var p)))) (fml (box-ni (var p))))", Calculus::Cond},
        {"(seq (fml (neg (neg (var p)))) (fml (var p)))", Calculus::Cond},
    };
    int found = 0;
    for (const auto& [text, calc] : goals) {
        const Sequent goal = parse_sequent(text);
        const auto proof = search_proof(goal, calc, {}, {5, false});
        if (!proof) continue;
        ++found;
        EXPECT_EQ(proof->conclusion, goal);
        EXPECT_FALSE(check_proof(*proof, calc).has_value()) << text;
    }
    EXPECT_GE(found, 3);
}

TEST(Soundness, Interpretation) {
    const Sequent t = t_root();
    const Inequality q = interpret_sequent(t);
    EXPECT_EQ(q.lhs, mt::dia_nu(mt::box_ni(A)));
    EXPECT_EQ(q.rhs, A);
    const auto wedge = parse_structure("(hwedge (fml (var p)) (fml (var q)))");
    EXPECT_EQ(interpret_structure(wedge, Polarity::Precedent), mt::conj(mt::var("p"), mt::var("q")));
    EXPECT_THROW(interpret_structure(wedge, Polarity::Succedent), NotInterpretable);
    const auto cni = parse_structure("(cni (fml (var p)))");
    EXPECT_EQ(interpret_structure(cni, Polarity::Succedent), mt::box_ni(mt::var("p")));
}

TEST(Soundness, QuickRules) {
    const auto rules = rule_schemas(Calculus::Nabla, {AxiomId::T});
    SoundnessBounds small;
    small.max_x = 2;
    small.max_y = 2;
    for (const char* name : {"Id_S", "res_S", "T", "box-ni_L"})
        for (const auto& r : rules)
            if (r.name == name) {
                const auto rep = rule_sound(r, Calculus::Nabla, small);
                EXPECT_TRUE(rep.violations.empty()) << name;
                EXPECT_GT(rep.frames_checked, 0U) << name;
            }
}

TEST(Soundness, UnsoundRuleIsCaught) {
    RuleSchema bogus;
    bogus.name = "bogus";
    bogus.conclusion = parse_sequent("(seq (fml (var p)) (fml (var q)))");
    bogus.premises = {parse_sequent("(seq (fml (var q)) (fml (var p)))")};
    SoundnessBounds small;
    small.max_y = 1;
    const auto rep = rule_sound(bogus, Calculus::Nabla, small);
    EXPECT_FALSE(rep.violations.empty());
    EXPECT_LE(rep.violations.size(), small.max_violations);
}
