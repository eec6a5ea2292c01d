#include "mtd/calculus.hpp"

#include <algorithm>
#include <mutex>
#include <regex>
#include <unordered_map>
#include <unordered_set>

#include "mtd/text_io.hpp"

namespace mtd {

const char* to_string(Calculus c) { return c == Calculus::Nabla ? "dmt-nabla" : "dmt-cond"; }

std::optional<Calculus> parse_calculus(std::string_view name) {
    if (name == "dmt-nabla" || name == "nabla") return Calculus::Nabla;
    if (name == "dmt-cond" || name == "cond") return Calculus::Cond;
    return std::nullopt;
}

namespace {

// Schema shorthand, expanded before parsing:
//   $X -> (smeta X)   @G -> (nmeta G)   'A -> (fml (var A))   'a -> (fml (nvar a))
std::string expand(const std::string& text) {
    static const std::regex smeta(R"(\$(\w+))");
    static const std::regex nmeta(R"(@(\w+))");
    static const std::regex sform(R"('([A-Z]\w*))");
    static const std::regex nform(R"('([a-z]\w*))");
    std::string out = std::regex_replace(text, smeta, "(smeta $1)");
    out = std::regex_replace(out, nmeta, "(nmeta $1)");
    out = std::regex_replace(out, sform, "(fml (var $1))");
    return std::regex_replace(out, nform, "(fml (nvar $1))");
}

struct SchemaText {
    const char* name;
    RuleGroup group;
    bool bidirectional;
    std::vector<const char*> premises;
    const char* conclusion;
};

RuleSchema build(const SchemaText& t) {
    RuleSchema r;
    r.name = t.name;
    r.group = t.group;
    r.bidirectional = t.bidirectional;
    for (const char* p : t.premises) r.premises.push_back(parse_sequent(expand(p)));
    r.conclusion = parse_sequent(expand(t.conclusion));
    return r;
}

using G = RuleGroup;

const std::vector<SchemaText>& base_text() {
    static const std::vector<SchemaText> rules{
        {"Id_S", G::Base, false, {}, "(seq (fml (var p)) (fml (var p)))"},
        {"Cut_S", G::Base, false, {"(seq $X 'A)", "(seq 'A $Y)"}, "(seq $X $Y)"},
        {"Cut_N", G::Base, false, {"(seq @G 'a)", "(seq 'a @D)"}, "(seq @G @D)"},
        {"top_R", G::Base, false, {}, "(seq htop (fml top))"},
        {"bot_L", G::Base, false, {}, "(seq (fml bot) cbot)"},
        {"res_S", G::Base, true, {"(seq (hwedge $X $Y) $Z)"}, "(seq $Y (cvee (tneg $X) $Z))"},
        {"res_S", G::Base, true, {"(seq $X (cvee $Y $Z))"}, "(seq (hwedge (tneg $Y) $X) $Z)"},
        {"gal_S", G::Base, true, {"(seq (tneg $X) $Y)"}, "(seq (tneg $Y) $X)"},
        {"gal_S", G::Base, true, {"(seq $X (tneg $Y))"}, "(seq $Y (tneg $X))"},
        {"res_N", G::Base, true, {"(seq (hcap @G @D) @S)"}, "(seq @D (ccup (tsim @G) @S))"},
        {"res_N", G::Base, true, {"(seq @G (ccup @D @S))"}, "(seq (hcap (tsim @D) @G) @S)"},
        {"gal_N", G::Base, true, {"(seq (tsim @G) @D)"}, "(seq (tsim @D) @G)"},
        {"gal_N", G::Base, true, {"(seq @G (tsim @D))"}, "(seq @D (tsim @G))"},
        {"cont_S", G::Base, true, {"(seq $X $Y)"}, "(seq (tneg $Y) (tneg $X))"},
        {"cont_N", G::Base, true, {"(seq @G @D)"}, "(seq (tsim @D) (tsim @G))"},
        {"htop", G::Base, true, {"(seq $X $Y)"}, "(seq (hwedge $X htop) $Y)"},
        {"cbot", G::Base, true, {"(seq $X $Y)"}, "(seq $X (cvee $Y cbot))"},
        {"hone", G::Base, true, {"(seq @G @D)"}, "(seq (hcap @G hone) @D)"},
        {"czero", G::Base, true, {"(seq @G @D)"}, "(seq @G (ccup @D czero))"},
        {"W_S", G::Base, false, {"(seq $X $Z)"}, "(seq (hwedge $X $Y) $Z)"},
        {"W_S", G::Base, false, {"(seq $X $Z)"}, "(seq $X (cvee $Z $Y))"},
        {"C_S", G::Base, false, {"(seq (hwedge $X $X) $Y)"}, "(seq $X $Y)"},
        {"C_S", G::Base, false, {"(seq $Y (cvee $X $X))"}, "(seq $Y $X)"},
        {"E_S", G::Base, false, {"(seq (hwedge $Y $X) $Z)"}, "(seq (hwedge $X $Y) $Z)"},
        {"E_S", G::Base, false, {"(seq $Z (cvee $Y $X))"}, "(seq $Z (cvee $X $Y))"},
        {"A_S", G::Base, true, {"(seq (hwedge $X (hwedge $Y $Z)) $W)"}, "(seq (hwedge (hwedge $X $Y) $Z) $W)"},
        {"A_S", G::Base, true, {"(seq $W (cvee $X (cvee $Y $Z)))"}, "(seq $W (cvee (cvee $X $Y) $Z))"},
        {"W_N", G::Base, false, {"(seq @G @S)"}, "(seq (hcap @G @D) @S)"},
        {"W_N", G::Base, false, {"(seq @G @S)"}, "(seq @G (ccup @S @D))"},
        {"C_N", G::Base, false, {"(seq (hcap @G @G) @D)"}, "(seq @G @D)"},
        {"C_N", G::Base, false, {"(seq @D (ccup @G @G))"}, "(seq @D @G)"},
        {"E_N", G::Base, false, {"(seq (hcap @D @G) @S)"}, "(seq (hcap @G @D) @S)"},
        {"E_N", G::Base, false, {"(seq @S (ccup @D @G))"}, "(seq @S (ccup @G @D))"},
        {"A_N", G::Base, true, {"(seq (hcap @G (hcap @D @S)) @P)"}, "(seq (hcap (hcap @G @D) @S) @P)"},
        {"A_N", G::Base, true, {"(seq @P (ccup @G (ccup @D @S)))"}, "(seq @P (ccup (ccup @G @D) @S))"},
        {"and_L", G::Logical, false, {"(seq (hwedge 'A 'B) $X)"}, "(seq (fml (and (var A) (var B))) $X)"},
        {"and_R", G::Logical, false, {"(seq $X 'A)", "(seq $Y 'B)"}, "(seq (hwedge $X $Y) (fml (and (var A) (var B))))"},
        {"neg_L", G::Logical, false, {"(seq (tneg 'A) $X)"}, "(seq (fml (neg (var A))) $X)"},
        {"neg_R", G::Logical, false, {"(seq $X (tneg 'A))"}, "(seq $X (fml (neg (var A))))"},
    };
    return rules;
}

// [ni] rules and the <in>/[ni] display postulate are shared by both calculi.
const std::vector<SchemaText>& ni_text() {
    static const std::vector<SchemaText> rules{
        {"hin-cni", G::Display, true, {"(seq (hin @G) $X)"}, "(seq @G (cni $X))"},
        {"box-ni_L", G::Logical, false, {"(seq 'A $X)"}, "(seq (fml (box-ni (var A))) (cni $X))"},
        {"box-ni_R", G::Logical, false, {"(seq @G (cni 'A))"}, "(seq @G (fml (box-ni (var A))))"},
    };
    return rules;
}

const std::vector<SchemaText>& nabla_text() {
    static const std::vector<SchemaText> rules{
        {"hnu-cnuadj", G::Display, true, {"(seq (hnu @G) $X)"}, "(seq @G (cnu-adj $X))"},
        {"hnucadj-cnuc", G::Display, true, {"(seq (hnuc-adj $X) @G)"}, "(seq $X (cnuc @G))"},
        {"hnotni-cnotin", G::Display, true, {"(seq (hnotni $X) @G)"}, "(seq $X (cnotin @G))"},
        {"dia-nu_L", G::Logical, false, {"(seq (hnu 'a) $X)"}, "(seq (fml (dia-nu (nvar a))) $X)"},
        {"dia-nu_R", G::Logical, false, {"(seq @G 'a)"}, "(seq (hnu @G) (fml (dia-nu (nvar a))))"},
        {"box-nuc_L", G::Logical, false, {"(seq 'a @G)"}, "(seq (fml (box-nuc (nvar a))) (cnuc @G))"},
        {"box-nuc_R", G::Logical, false, {"(seq $X (cnuc 'a))"}, "(seq $X (fml (box-nuc (nvar a))))"},
        {"dia-notni_L", G::Logical, false, {"(seq (hnotni 'A) @G)"}, "(seq (fml (dia-notni (var A))) @G)"},
        {"dia-notni_R", G::Logical, false, {"(seq $X 'A)"}, "(seq (hnotni $X) (fml (dia-notni (var A))))"},
    };
    return rules;
}

const std::vector<SchemaText>& cond_text() {
    static const std::vector<SchemaText> rules{
        {"hblacktri-ctri", G::Display, true, {"(seq $X (ctri @G $Y))"}, "(seq (hblacktri @G $X) $Y)"},
        {"cblacktrir-ctri", G::Display, true, {"(seq @G (cblacktrir $X $Y))"}, "(seq $X (ctri @G $Y))"},
        {"cnotinr-cnotnir", G::Display, true, {"(seq $X (cnotinr @G))"}, "(seq @G (cnotnir $X))"},
        {"tri_L", G::Logical, false, {"(seq @G 'a)", "(seq 'A $X)"}, "(seq (fml (tri (nvar a) (var A))) (ctri @G $X))"},
        {"tri_R", G::Logical, false, {"(seq $X (ctri 'a 'A))"}, "(seq $X (fml (tri (nvar a) (var A))))"},
        {"boxr-notni_L", G::Logical, false, {"(seq $X 'A)"}, "(seq (fml (boxr-notni (var A))) (cnotnir $X))"},
        {"boxr-notni_R", G::Logical, false, {"(seq @G (cnotnir 'A))"}, "(seq @G (fml (boxr-notni (var A))))"},
        {"cap_L", G::Logical, false, {"(seq (hcap 'a 'b) @G)"}, "(seq (fml (cap (nvar a) (nvar b))) @G)"},
        {"cap_R", G::Logical, false, {"(seq @G 'a)", "(seq @D 'b)"}, "(seq (hcap @G @D) (fml (cap (nvar a) (nvar b))))"},
    };
    return rules;
}

const SchemaText& extension_text(AxiomId a) {
    static const std::map<AxiomId, SchemaText> rules{
        {AxiomId::N, {"N", G::Extension, false, {"(seq (hnotni htop) @G)"}, "(seq htop (cnuc @G))"}},
        {AxiomId::P, {"P", G::Extension, false, {"(seq @G (cni cbot))"}, "(seq htop (tneg (hnu @G)))"}},
        {AxiomId::C,
         {"C", G::Extension, false, {"(seq (hnotni (hwedge (hin @G) (hin @D))) @T)"},
          "(seq (hwedge (hnu @G) (hnu @D)) (cnuc @T))"}},
        {AxiomId::T, {"T", G::Extension, false, {"(seq @G (cni $X))"}, "(seq (hnu @G) $X)"}},
        {AxiomId::D,
         {"D", G::Extension, false, {"(seq @G (cni (tneg (hin @D))))"}, "(seq (hnu @D) (tneg (hnu @G)))"}},
        {AxiomId::ID,
         {"ID", G::Extension, false, {"(seq @D (cnotnir (hin @G)))", "(seq (hin @G) $X)"},
          "(seq htop (ctri (hcap @G @D) $X))"}},
        {AxiomId::CS,
         {"CS", G::Extension, false, {"(seq @G (cni (cnotinr @D)))", "(seq $X (cnotinr @D))", "(seq $Y $Z)"},
          "(seq (hwedge $X $Y) (ctri (hcap @G @D) $Z))"}},
        {AxiomId::CEM,
         {"CEM", G::Extension, false,
          {"(seq @P (cnotnir (hin @G)))", "(seq @P (cnotnir (hin @T)))", "(seq @D (cnotnir (hin @G)))",
           "(seq @D (cnotnir (hin @T)))", "(seq $Y $X)"},
          "(seq htop (cvee (ctri (hcap @G @D) $X) (ctri (hcap @T @P) (tneg $Y))))"}},
    };
    return rules.at(a);
}

bool allowed(Calculus calc, AxiomId a) {
    switch (a) {
    case AxiomId::N:
    case AxiomId::P:
    case AxiomId::C:
    case AxiomId::T:
    case AxiomId::D: return calc == Calculus::Nabla;
    case AxiomId::ID:
    case AxiomId::CS:
    case AxiomId::CEM: return calc == Calculus::Cond;
    default: return false;
    }
}

void append(std::vector<RuleSchema>& out, const std::vector<SchemaText>& texts) {
    for (const auto& t : texts) {
        RuleSchema r = build(t);
        if (r.name == "Id_S") r.atoms_only.insert(Symbol("p"));
        out.push_back(std::move(r));
    }
}

// Schemas are parsed once per (calculus, extension set).
const std::vector<RuleSchema>& cached_schemas(Calculus calc, const std::set<AxiomId>& ext) {
    static std::mutex mu;
    static std::map<std::pair<Calculus, std::set<AxiomId>>, std::vector<RuleSchema>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(calc, ext);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<RuleSchema> out;
    append(out, base_text());
    if (calc == Calculus::Nabla) {
        append(out, nabla_text());
        append(out, ni_text());
    } else {
        append(out, ni_text());
        append(out, cond_text());
    }
    for (AxiomId a : ext) out.push_back(build(extension_text(a)));
    return cache.emplace(key, std::move(out)).first->second;
}

} // namespace

std::vector<RuleSchema> rule_schemas(Calculus calc, const std::set<AxiomId>& extensions) {
    for (AxiomId a : extensions) {
        if (allowed(calc, a)) continue;
        if (allowed(calc == Calculus::Nabla ? Calculus::Cond : Calculus::Nabla, a))
            throw UnsupportedExtension(std::string("extension ") + to_string(a) + " belongs to the other calculus");
        throw UnsupportedExtension(std::string("axiom ") + to_string(a) +
                                   " is not analytic inductive and has no structural rule");
    }
    return cached_schemas(calc, extensions);
}

std::map<std::string, std::set<std::size_t>> all_rule_arities() {
    std::map<std::string, std::set<std::size_t>> out;
    auto add = [&](const std::vector<RuleSchema>& rs) {
        for (const auto& r : rs) {
            out[r.name].insert(r.premises.size());
            if (r.bidirectional) out[r.name].insert(1);
        }
    };
    add(rule_schemas(Calculus::Nabla, {AxiomId::N, AxiomId::P, AxiomId::C, AxiomId::T, AxiomId::D}));
    add(rule_schemas(Calculus::Cond, {AxiomId::ID, AxiomId::CS, AxiomId::CEM}));
    return out;
}

// ---------------------------------------------------------------------------
// matching

namespace {

bool match_formula(const MTFormula& pattern, const MTFormula& target, Substitution& sigma,
                   const std::set<Symbol>& atoms_only) {
    if (pattern.kind() == MTKind::Var || pattern.kind() == MTKind::NVar) {
        if (pattern.sort() != target.sort()) return false;
        if (atoms_only.contains(pattern.name()) && target.kind() != MTKind::Var) return false;
        auto [it, fresh] = sigma.formulas.emplace(pattern.name(), target);
        return fresh || it->second == target;
    }
    if (pattern.kind() != target.kind() || pattern.kids().size() != target.kids().size()) return false;
    for (std::size_t i = 0; i < pattern.kids().size(); ++i)
        if (!match_formula(pattern.kid(i), target.kid(i), sigma, atoms_only)) return false;
    return true;
}

MTFormula instantiate_formula(const MTFormula& pattern, const Substitution& sigma) {
    if (pattern.kind() == MTKind::Var || pattern.kind() == MTKind::NVar) return sigma.formulas.at(pattern.name());
    if (pattern.kids().empty()) return pattern;
    std::vector<MTFormula> kids;
    kids.reserve(pattern.kids().size());
    for (const auto& k : pattern.kids()) kids.push_back(instantiate_formula(k, sigma));
    return {pattern.kind(), std::move(kids)};
}

} // namespace

bool match(const Structure& pattern, const Structure& target, Substitution& sigma,
           const std::set<Symbol>& atoms_only) {
    switch (pattern.kind()) {
    case StructKind::Meta: {
        if (pattern.sort() != target.sort()) return false;
        auto [it, fresh] = sigma.structures.emplace(pattern.meta_name(), target);
        return fresh || it->second == target;
    }
    case StructKind::Formula:
        return target.kind() == StructKind::Formula && match_formula(pattern.leaf(), target.leaf(), sigma, atoms_only);
    default: break;
    }
    if (pattern.kind() != target.kind()) return false;
    for (std::size_t i = 0; i < pattern.kids().size(); ++i)
        if (!match(pattern.kid(i), target.kid(i), sigma, atoms_only)) return false;
    return true;
}

bool match(const Sequent& pattern, const Sequent& target, Substitution& sigma, const std::set<Symbol>& atoms_only) {
    return match(pattern.lhs, target.lhs, sigma, atoms_only) && match(pattern.rhs, target.rhs, sigma, atoms_only);
}

RuleSchema reversed(const RuleSchema& r) {
    RuleSchema out = r;
    out.premises = {r.conclusion};
    out.conclusion = r.premises.at(0);
    return out;
}

std::vector<Substitution> match_rule(const RuleSchema& schema, const Sequent& concl) {
    std::vector<Substitution> out;
    Substitution sigma;
    if (match(schema.conclusion, concl, sigma, schema.atoms_only)) out.push_back(std::move(sigma));
    if (schema.bidirectional) {
        Substitution back;
        if (match(schema.premises.at(0), concl, back, schema.atoms_only) &&
            std::find(out.begin(), out.end(), back) == out.end())
            out.push_back(std::move(back));
    }
    return out;
}

Structure instantiate(const Structure& pattern, const Substitution& sigma) {
    switch (pattern.kind()) {
    case StructKind::Meta: return sigma.structures.at(pattern.meta_name());
    case StructKind::Formula: return Structure::formula(instantiate_formula(pattern.leaf(), sigma));
    default: break;
    }
    if (pattern.kids().empty()) return pattern;
    std::vector<Structure> kids;
    kids.reserve(pattern.kids().size());
    for (const auto& k : pattern.kids()) kids.push_back(instantiate(k, sigma));
    return {pattern.kind(), std::move(kids)};
}

Sequent instantiate(const Sequent& pattern, const Substitution& sigma) {
    return {instantiate(pattern.lhs, sigma), instantiate(pattern.rhs, sigma)};
}

// ---------------------------------------------------------------------------
// checking

std::string describe(const ProofError& e) {
    std::string where = "root";
    for (auto i : e.path) where += "." + std::to_string(i);
    return "node " + where + " (" + e.rule + "): " + e.reason;
}

namespace {

// Oriented copies of the schemas, keyed by rule name.
std::vector<RuleSchema> oriented(const std::vector<RuleSchema>& rules) {
    std::vector<RuleSchema> out;
    for (const auto& r : rules) {
        out.push_back(r);
        if (r.bidirectional) out.push_back(reversed(r));
    }
    return out;
}

// Empty string when the node is a correct instance of r.
std::string try_node(const RuleSchema& r, const ProofTree& p) {
    Substitution sigma;
    if (!match(r.conclusion, p.conclusion, sigma, r.atoms_only)) return "conclusion does not match the rule";
    if (r.premises.size() != p.children.size())
        return "rule has " + std::to_string(r.premises.size()) + " premise(s), node has " +
               std::to_string(p.children.size());
    for (std::size_t i = 0; i < r.premises.size(); ++i)
        if (!match(r.premises[i], p.children[i].conclusion, sigma, r.atoms_only))
            return "premise " + std::to_string(i + 1) + " does not match the rule instance";
    return {};
}

std::optional<ProofError> check_node(const ProofTree& p, const std::vector<RuleSchema>& rules,
                                     const std::set<std::string>& known, std::vector<std::size_t>& path) {
    if (!well_sorted(p.conclusion)) return ProofError{path, p.rule, "conclusion is not well sorted"};
    std::string best;
    bool found = false;
    bool ok = false;
    for (const auto& r : rules) {
        if (r.name != p.rule) continue;
        found = true;
        std::string why = try_node(r, p);
        if (why.empty()) {
            ok = true;
            break;
        }
        // prefer the most informative failure: a premise mismatch over a conclusion mismatch
        if (best.empty() || why.starts_with("premise") || why.starts_with("rule has")) best = why;
    }
    if (!found) {
        std::string why = known.contains(p.rule) ? "rule not available in this calculus or extension set"
                                                 : "unknown rule";
        return ProofError{path, p.rule, why};
    }
    if (!ok) return ProofError{path, p.rule, best};
    for (std::size_t i = 0; i < p.children.size(); ++i) {
        path.push_back(i);
        auto e = check_node(p.children[i], rules, known, path);
        path.pop_back();
        if (e) return e;
    }
    return std::nullopt;
}

} // namespace

std::optional<ProofError> check_proof(const ProofTree& p, Calculus calc, const std::set<AxiomId>& extensions) {
    const auto rules = oriented(rule_schemas(calc, extensions));
    static const auto known = [] {
        std::set<std::string> names;
        for (const auto& [n, _] : all_rule_arities()) names.insert(n);
        return names;
    }();
    std::vector<std::size_t> path;
    return check_node(p, rules, known, path);
}

// ---------------------------------------------------------------------------
// search

namespace {

class Searcher {
public:
    explicit Searcher(std::vector<RuleSchema> rules) : rules_(std::move(rules)) {
        // zero-premise rules first so leaves close early
        std::stable_sort(rules_.begin(), rules_.end(),
                         [](const RuleSchema& a, const RuleSchema& b) { return a.premises.size() < b.premises.size(); });
    }

    std::optional<ProofTree> prove(const Sequent& goal, int depth) {
        if (depth <= 0) return std::nullopt;
        auto failed = failed_.find(goal);
        if (failed != failed_.end() && failed->second >= depth) return std::nullopt;
        if (on_path_.contains(goal)) return std::nullopt;
        on_path_.insert(goal);
        std::optional<ProofTree> result;
        for (const auto& r : rules_) {
            Substitution sigma;
            if (!match(r.conclusion, goal, sigma, r.atoms_only)) continue;
            std::vector<Sequent> premises;
            try {
                for (const auto& p : r.premises) premises.push_back(instantiate(p, sigma));
            } catch (const std::out_of_range&) {
                continue; // premise-only metavariable, e.g. a cut formula
            }
            if (std::ranges::any_of(premises, [&](const Sequent& s) { return on_path_.contains(s); })) continue;
            ProofTree node{r.name, goal, {}};
            bool all = true;
            for (const auto& p : premises) {
                auto sub = prove(p, depth - 1);
                if (!sub) {
                    all = false;
                    break;
                }
                node.children.push_back(std::move(*sub));
            }
            if (all) {
                result = std::move(node);
                break;
            }
        }
        on_path_.erase(goal);
        if (!result) {
            int& d = failed_[goal];
            d = std::max(d, depth);
        }
        return result;
    }

private:
    std::vector<RuleSchema> rules_;
    std::unordered_map<Sequent, int> failed_;
    std::unordered_set<Sequent> on_path_;
};

} // namespace

std::optional<ProofTree> search_proof(const Sequent& goal, Calculus calc, const std::set<AxiomId>& extensions,
                                      SearchOptions options) {
    if (!well_sorted(goal)) return std::nullopt;
    std::vector<RuleSchema> rules;
    for (auto& r : oriented(rule_schemas(calc, extensions)))
        if (options.allow_cut || (r.name != "Cut_S" && r.name != "Cut_N")) rules.push_back(std::move(r));
    Searcher s(std::move(rules));
    for (int d = 1; d <= options.depth; ++d)
        if (auto p = s.prove(goal, d)) return p;
    return std::nullopt;
}

} // namespace mtd
