#pragma once

// Rule schemas of the two display calculi, schema matching, proof checking
// and bounded backward proof search.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtd/axioms.hpp"
#include "mtd/structure.hpp"

namespace mtd {

enum class Calculus { Nabla, Cond };

const char* to_string(Calculus c);              // "dmt-nabla" / "dmt-cond"
std::optional<Calculus> parse_calculus(std::string_view name);

class UnsupportedExtension : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class RuleGroup { Base, Display, Logical, Extension };

// Schematic rule. Metavariables are Meta structures (structure variables) and
// Var / NVar formulas inside formula leaves (formula variables). Names listed
// in atoms_only may only be instantiated by propositional variables.
struct RuleSchema {
    std::string name;
    std::vector<Sequent> premises;
    Sequent conclusion;
    bool bidirectional = false; // single premise, usable in both directions
    RuleGroup group = RuleGroup::Base;
    std::set<Symbol> atoms_only;
};

// Base rules, calculus-specific rules and one rule per requested extension.
// Throws UnsupportedExtension for 4, 4', 5, B and for axioms of the other calculus.
std::vector<RuleSchema> rule_schemas(Calculus calc, const std::set<AxiomId>& extensions = {});

// Every rule name of both calculi with all extensions, and its premise counts.
std::map<std::string, std::set<std::size_t>> all_rule_arities();

struct Substitution {
    std::map<Symbol, Structure> structures;
    std::map<Symbol, MTFormula> formulas;
    friend bool operator==(const Substitution&, const Substitution&) = default;
};

// Extends sigma so that sigma(pattern) = target. Returns false (sigma may be
// partially extended) when no extension exists.
bool match(const Structure& pattern, const Structure& target, Substitution& sigma,
           const std::set<Symbol>& atoms_only = {});
bool match(const Sequent& pattern, const Sequent& target, Substitution& sigma,
           const std::set<Symbol>& atoms_only = {});

// All sigma with sigma(conclusion) = concl. Matching is rigid, so the list has
// at most one element per orientation of the rule.
std::vector<Substitution> match_rule(const RuleSchema& schema, const Sequent& concl);

// Throws std::out_of_range when a metavariable is unbound.
Structure instantiate(const Structure& pattern, const Substitution& sigma);
Sequent instantiate(const Sequent& pattern, const Substitution& sigma);

// The reverse orientation of a bidirectional rule.
RuleSchema reversed(const RuleSchema& r);

struct ProofError {
    std::vector<std::size_t> path; // child indices from the root
    std::string rule;
    std::string reason;
};

std::string describe(const ProofError& e);

// Empty on success, otherwise the first failing node in preorder.
std::optional<ProofError> check_proof(const ProofTree& p, Calculus calc, const std::set<AxiomId>& extensions = {});

struct SearchOptions {
    int depth = 6;
    bool allow_cut = false;
};

// Backward search by iterative deepening; depth counts rule applications
// along a branch.
std::optional<ProofTree> search_proof(const Sequent& goal, Calculus calc, const std::set<AxiomId>& extensions = {},
                                      SearchOptions options = {});

} // namespace mtd
